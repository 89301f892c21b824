#include "nkcfg/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <unordered_set>
#include <vector>

#include "nkcfg/errors.hpp"

namespace nkcfg {

namespace {

struct Frame {
    double scale = 1, cx = 0, cy = 0; // model center
    double vw = 0, vh = 0;            // viewport size

    double x(double mx) const { return vw / 2 + (mx - cx) * scale; }
    double y(double my) const { return vh / 2 - (my - cy) * scale; } // y up
};

std::string num(double v) {
    char buf[40];
    snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Segment of a*x + b*y + c = 0 inside the axis-aligned box, or false. Works
// in doubles; rendering has no exactness contract.
bool clip_line(double a, double b, double c, double x0, double x1, double y0, double y1,
               double seg[4]) {
    std::vector<std::pair<double, double>> hits;
    auto push = [&](double x, double y) {
        for (auto& h : hits)
            if (std::abs(h.first - x) < 1e-9 && std::abs(h.second - y) < 1e-9) return;
        hits.push_back({x, y});
    };
    const double eps = 1e-9;
    if (std::abs(b) > eps) {
        for (double x : {x0, x1}) {
            double y = -(a * x + c) / b;
            if (y >= y0 - eps && y <= y1 + eps) push(x, y);
        }
    }
    if (std::abs(a) > eps) {
        for (double y : {y0, y1}) {
            double x = -(b * y + c) / a;
            if (x >= x0 - eps && x <= x1 + eps) push(x, y);
        }
    }
    if (hits.size() < 2) return false;
    // Farthest pair guards against corner duplicates that slipped the filter.
    std::size_t bi = 0, bj = 1;
    double best = -1;
    for (std::size_t i = 0; i < hits.size(); ++i)
        for (std::size_t j = i + 1; j < hits.size(); ++j) {
            double dx = hits[i].first - hits[j].first, dy = hits[i].second - hits[j].second;
            double d = dx * dx + dy * dy;
            if (d > best) best = d, bi = i, bj = j;
        }
    if (best < eps) return false;
    seg[0] = hits[bi].first;
    seg[1] = hits[bi].second;
    seg[2] = hits[bj].first;
    seg[3] = hits[bj].second;
    return true;
}

} // namespace

void render_svg(std::ostream& out, const Configuration& c, const RenderOptions& opt) {
    if (opt.width <= 0 || opt.height <= 0)
        throw Error(Errc::BadParams, "viewport dimensions must be positive");
    if (opt.margin < 0 || opt.margin >= 0.5)
        throw Error(Errc::BadParams, "margin must lie in [0, 0.5)");
    Frame f;
    f.vw = opt.width;
    f.vh = opt.height;

    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    bool first = true;
    for (const Point& p : c.points) {
        double x = p.x.to_double(), y = p.y.to_double();
        if (first || x < minx) minx = x;
        if (first || x > maxx) maxx = x;
        if (first || y < miny) miny = y;
        if (first || y > maxy) maxy = y;
        first = false;
    }
    double w = std::max(maxx - minx, 1e-6), h = std::max(maxy - miny, 1e-6);
    f.cx = (minx + maxx) / 2;
    f.cy = (miny + maxy) / 2;
    double usable = 1 - 2 * opt.margin;
    f.scale = std::min(f.vw * usable / w, f.vh * usable / h);

    // Model-space preimage of the full viewport; lines are clipped against it
    // so every stroke runs edge to edge.
    double bx0 = f.cx - f.vw / 2 / f.scale, bx1 = f.cx + f.vw / 2 / f.scale;
    double by0 = f.cy - f.vh / 2 / f.scale, by1 = f.cy + f.vh / 2 / f.scale;

    std::unordered_set<int> accent;
    if (opt.highlight)
        accent.insert(opt.highlight->lines.begin(), opt.highlight->lines.end());

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width << "\" height=\""
        << opt.height << "\" viewBox=\"0 0 " << opt.width << " " << opt.height << "\">\n";
    out << "<!-- (" << c.n() << "_" << c.k << ") configuration -->\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    auto draw_line = [&](const Line& l, const char* color, double width_px) {
        // Rescale huge integer coefficients before the double conversion so
        // they cannot overflow to inf (only the ratios matter).
        Int a = l.a(), b = l.b(), cc = l.c();
        std::size_t bits = std::max({mpz_sizeinbase(a.get_mpz_t(), 2),
                                     mpz_sizeinbase(b.get_mpz_t(), 2),
                                     mpz_sizeinbase(cc.get_mpz_t(), 2)});
        if (bits > 900) {
            mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), bits - 500);
            mpz_tdiv_q_2exp(b.get_mpz_t(), b.get_mpz_t(), bits - 500);
            mpz_tdiv_q_2exp(cc.get_mpz_t(), cc.get_mpz_t(), bits - 500);
        }
        double seg[4];
        if (!clip_line(a.get_d(), b.get_d(), cc.get_d(), bx0, bx1, by0, by1, seg))
            return;
        out << "<line x1=\"" << num(f.x(seg[0])) << "\" y1=\"" << num(f.y(seg[1])) << "\" x2=\""
            << num(f.x(seg[2])) << "\" y2=\"" << num(f.y(seg[3])) << "\" stroke=\"" << color
            << "\" stroke-width=\"" << num(width_px) << "\"/>\n";
    };

    for (int i = 0; i < (int)c.lines.size(); ++i)
        if (!accent.count(i)) draw_line(c.lines[i].line, "#777777", 1.0);
    for (int i = 0; i < (int)c.lines.size(); ++i)
        if (accent.count(i)) draw_line(c.lines[i].line, "#cc2222", 1.8);

    for (const Point& p : c.points)
        out << "<circle cx=\"" << num(f.x(p.x.to_double())) << "\" cy=\""
            << num(f.y(p.y.to_double())) << "\" r=\"" << num(opt.point_radius)
            << "\" fill=\"black\"/>\n";

    out << "</svg>\n";
}

} // namespace nkcfg
