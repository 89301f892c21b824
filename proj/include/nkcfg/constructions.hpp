#pragma once

#include <cstdint>
#include <vector>

#include "nkcfg/configuration.hpp"

namespace nkcfg {

// Result of one affine replication step: a verified ((k+1)m)_k built from a
// verified (m_{k-1}).
struct ReplicationResult {
    Configuration output;
    Pencil new_pencil;            // the m pairwise-parallel new lines, output ids
    Line axis;                    // common axis of the k-1 affinities
    std::vector<int> fixed_points; // axis-intersection points, output ids
    std::vector<Rational> ratios;  // the k-1 affinity ratios actually used
};

// Replicates a verified (m_{k-1}) into a ((k+1)m)_k with k-1 orthogonal
// affinities sharing one axis. General position (axis misses every pairwise
// line intersection, is perpendicular to no connecting line, and meets every
// line) is arranged by a deterministic shear + vertical-axis choice; the
// verifier is the sole judge, and failed attempts resample ratios and axis
// offset from a stream seeded by the input's geometry hash mixed with
// `seed`. Throws InputNotConfiguration, DegenerateAfterRetries.
ReplicationResult affine_replication(const Configuration& c, int k, std::uint64_t seed = 0);

// Result of one affine switch: a verified ((k-1)m + r)_k built from a
// verified (m_k) by deleting r pencil lines and compensating with r*k
// connecting lines through r new pencil-center points.
struct SwitchResult {
    Configuration output;
    std::vector<int> removed_line_ids; // input line ids that were deleted
    std::vector<int> center_point_ids; // output point ids of the new centers
    long h = 0;                        // family parameter actually used
};

// Deletes s lines of pencil_h (made horizontal) and t lines of pencil_v
// (made vertical, may be null with t = 0), then rebuilds incidences with the
// k-2 diagonal maps of switch_family. Every center lands on a coordinate
// axis of the normalized frame. Pre: input verifies with k >= 3
// (InputNotConfiguration); r = s+t >= 1, s <= |pencil_h|, t <= |pencil_v|
// (RTooLarge); pencils independent (DependentPencils). h = 0 picks the
// default 2k; degenerate attempts retry with doubled h and a jittered
// normalization. Throws DegenerateAfterRetries.
SwitchResult affine_switch(const Configuration& c, const Pencil& pencil_h,
                           const Pencil* pencil_v, int s, int t, long h = 0,
                           std::uint64_t seed = 0);

// Switch results for every removal count r = 1..|pencil| of one pencil,
// i.e. the whole band of orders (k-1)m + 1 .. (k-1)m + q.
std::vector<SwitchResult> affine_switch_band(const Configuration& c, const Pencil& pencil,
                                             long h = 0, std::uint64_t seed = 0);

} // namespace nkcfg
