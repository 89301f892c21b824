#pragma once

#include <string>
#include <vector>

#include "nkcfg/rational.hpp"

namespace nkcfg {

// One step of the replication recurrence: from "every n >= prev is
// achievable at k-1" to "every n >= bar_step(k, prev) is achievable at k".
// bar_step(k, prev) = (k^2-1) * max(prev, k^2-2).
Int bar_step(int k, const Int& prev);

struct BoundRow {
    int k = 0;
    Int value;
    std::string formula; // human-readable derivation of the value
    int t = -1;          // intermediate order used (hat_table only)
};

using BoundTable = std::vector<BoundRow>;

// Iterates bar_step from (start_k, start_value) up to max_k. Canonical
// starts are (2,3), (3,9), (4,24); any start with start_k >= 2,
// start_value >= 1 is accepted.
BoundTable table1(int start_k, const Int& start_value, int max_k);

// Threshold for k from a band family built through intermediate order t with
// seed-guarantee a and seed-step d:
//   t <  k-1: (k^2-1) * (k!/(t+1)!) * max(a, (k^2-1)*d)
//   t == k-1: (k^2-1) * max(a, (k^2-1)*d - 1)
// Pre: 3 <= t <= k-1, a >= 1, d >= 1 (BadParams).
Int n_bound(int k, int t, const Int& a, const Int& d);

// Best recursive thresholds: hat(3) = 9, hat(4) = 24, and for k >= 5
//   hat(k) = (k^2-1) * min over 3 <= t <= k-1 of (k!/(t+1)!) * max(hat(t), k^2-1),
// with the minimizing t recorded (smallest t on ties). Pre: max_k >= 3.
BoundTable hat_table(int max_k);

// Smallest X from which consecutive bands overlap or touch when the seed
// sizes step by d: X >= (k^2-1)*d - (t+1)!/k!, so (k^2-1)*d - 1 when t = k-1
// and (k^2-1)*d otherwise. Pre: 3 <= t <= k-1, d >= 1.
Int band_adjacency_threshold(int k, int t, const Int& d);

enum class Realizability { Yes, No, Unknown };

const char* realizability_name(Realizability r);

// Published state of knowledge on geometric (n_k) existence:
//   k=2: yes iff n >= 3.
//   any k: no below the counting bound n >= k^2-k+1.
//   k=3: yes iff n >= 9 (7 and 8 are settled impossible).
//   k=4: yes for 18, 20, 21, 22 and n >= 24; 23 open; otherwise no.
//   k>=5: yes from hat(k) on, open below.
Realizability known_realizable(int k, long n);

} // namespace nkcfg
