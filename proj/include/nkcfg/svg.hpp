#pragma once

#include <iosfwd>

#include "nkcfg/configuration.hpp"

namespace nkcfg {

struct RenderOptions {
    int width = 1000;
    int height = 800;
    double margin = 0.06;      // viewport fraction kept clear on each side
    double point_radius = 3.5;
    const Pencil* highlight = nullptr; // drawn on top in accent color
};

// Deterministic SVG drawing: every point mapped into the viewport (uniform
// scale, y up), lines clipped to the padded bounding box of the points.
// Coordinates are converted to double here and only here.
void render_svg(std::ostream& out, const Configuration& c, const RenderOptions& opt = {});

} // namespace nkcfg
