#include "nkcfg/bounds.hpp"

#include <algorithm>

#include "nkcfg/errors.hpp"

namespace nkcfg {

namespace {

Int imax(const Int& a, const Int& b) { return a >= b ? a : b; }

// k! / (t+1)! = (t+2) * (t+3) * ... * k.
Int falling_ratio(int k, int t) {
    Int r = 1;
    for (int i = t + 2; i <= k; ++i) r *= i;
    return r;
}

std::string max_str(const Int& a, const Int& b) {
    return "max(" + int_str(a) + ", " + int_str(b) + ")";
}

} // namespace

Int bar_step(int k, const Int& prev) {
    if (k < 3 || prev < 1) throw Error(Errc::BadParams, "bar_step needs k >= 3, prev >= 1");
    Int kk1 = Int(k) * k - 1;
    return kk1 * imax(prev, kk1 - 1);
}

BoundTable table1(int start_k, const Int& start_value, int max_k) {
    if (start_k < 2 || start_value < 1 || max_k < start_k)
        throw Error(Errc::BadParams, "table1 needs start_k >= 2, start_value >= 1, max_k >= start_k");
    BoundTable rows;
    rows.push_back({start_k, start_value, "start", -1});
    for (int k = start_k + 1; k <= max_k; ++k) {
        const Int& prev = rows.back().value;
        Int kk1 = Int(k) * k - 1;
        BoundRow row;
        row.k = k;
        row.value = bar_step(k, prev);
        row.formula = int_str(kk1) + " * " + max_str(prev, kk1 - 1);
        rows.push_back(std::move(row));
    }
    return rows;
}

Int n_bound(int k, int t, const Int& a, const Int& d) {
    if (t < 3 || t > k - 1 || a < 1 || d < 1)
        throw Error(Errc::BadParams, "n_bound needs 3 <= t <= k-1, a >= 1, d >= 1");
    Int kk1 = Int(k) * k - 1;
    if (t == k - 1) return kk1 * imax(a, kk1 * d - 1);
    return kk1 * falling_ratio(k, t) * imax(a, kk1 * d);
}

BoundTable hat_table(int max_k) {
    if (max_k < 3) throw Error(Errc::BadParams, "hat_table needs max_k >= 3");
    BoundTable rows;
    rows.push_back({3, Int(9), "smallest geometric 3-configuration", -1});
    if (max_k >= 4) rows.push_back({4, Int(24), "smallest known geometric 4-configuration", -1});
    for (int k = 5; k <= max_k; ++k) {
        Int kk1 = Int(k) * k - 1;
        int best_t = -1;
        Int best;
        for (int t = 3; t <= k - 1; ++t) {
            Int cand = falling_ratio(k, t) * imax(rows[t - 3].value, kk1);
            if (best_t < 0 || cand < best) {
                best = cand;
                best_t = t;
            }
        }
        BoundRow row;
        row.k = k;
        row.value = kk1 * best;
        row.t = best_t;
        row.formula = int_str(kk1) + " * " + int_str(falling_ratio(k, best_t)) + " * " +
                      max_str(rows[best_t - 3].value, kk1);
        rows.push_back(std::move(row));
    }
    return rows;
}

Int band_adjacency_threshold(int k, int t, const Int& d) {
    if (t < 3 || t > k - 1 || d < 1)
        throw Error(Errc::BadParams, "band_adjacency_threshold needs 3 <= t <= k-1, d >= 1");
    Int kk1 = Int(k) * k - 1;
    // Exact condition is X >= (k^2-1)*d - (t+1)!/k!; the subtrahend is 1 at
    // t = k-1 and a proper fraction below it, so the ceiling splits in two.
    if (t == k - 1) return kk1 * d - 1;
    return kk1 * d;
}

const char* realizability_name(Realizability r) {
    switch (r) {
    case Realizability::Yes: return "yes";
    case Realizability::No: return "no";
    case Realizability::Unknown: return "unknown";
    }
    return "?";
}

Realizability known_realizable(int k, long n) {
    if (k < 2) throw Error(Errc::BadParams, "known_realizable needs k >= 2");
    if (k == 2) return n >= 3 ? Realizability::Yes : Realizability::No;
    if (Int(n) < Int(k) * k - k + 1) return Realizability::No; // counting bound
    if (k == 3) return n >= 9 ? Realizability::Yes : Realizability::No;
    if (k == 4) {
        if (n == 18 || n == 20 || n == 21 || n == 22 || n >= 24) return Realizability::Yes;
        if (n == 23) return Realizability::Unknown;
        return Realizability::No;
    }
    return Int(n) >= hat_table(k).back().value ? Realizability::Yes : Realizability::Unknown;
}

} // namespace nkcfg
