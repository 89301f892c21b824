#pragma once

#include "nkcfg/configuration.hpp"

namespace nkcfg {

// Cyclic (n_2): points (i, i^2) on the parabola y = x^2, lines joining
// consecutive points. A line meets the parabola in at most two points, so
// unintended incidences are impossible by construction. Pre: n >= 3
// (NTooSmall).
Configuration multilateral(int n);

// Fixed rational realization of the (9_3) Pappus configuration whose three
// non-join lines form a horizontal pencil (y = 0, 1, 2), covering all nine
// points.
Configuration pappus();

} // namespace nkcfg
