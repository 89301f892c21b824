#include "nkcfg/seeds.hpp"

#include <algorithm>

#include "nkcfg/errors.hpp"

namespace nkcfg {

Configuration multilateral(int n) {
    if (n < 3) throw Error(Errc::NTooSmall, "multilateral needs n >= 3");
    Configuration c;
    c.k = 2;
    for (int i = 0; i < n; ++i) {
        Rational x(i);
        c.points.push_back({x, x * x});
    }
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        LineRecord rec;
        rec.line = line_through(c.points[i], c.points[j]);
        rec.points = {std::min(i, j), std::max(i, j)};
        c.lines.push_back(std::move(rec));
    }
    c.meta = Json{{"op", "seed"}, {"kind", "multilateral"}, {"n", n}};
    return c;
}

Configuration pappus() {
    // Two triples on y = 0 and y = 2, the second a translate of the first:
    // that symmetry puts all three cross-join intersections on y = 1, so the
    // classical collinearity line joins the parallel carriers as a 3-line
    // pencil. Every point sits on y in {0,1,2} and no join is horizontal,
    // which rules out unintended incidences outright.
    Configuration c;
    c.k = 3;
    const long ax[3] = {0, 2, 6};
    for (long v : ax) c.points.push_back({Rational(v), Rational(0)});       // 0,1,2
    for (long v : ax) c.points.push_back({Rational(v + 1), Rational(2)});   // 3,4,5
    auto cross = [&](int i, int j) { return Rational(Int(ax[i] + ax[j] + 1), Int(2)); };
    c.points.push_back({cross(0, 1), Rational(1)}); // 6 = join(A0,B1) x join(A1,B0)
    c.points.push_back({cross(0, 2), Rational(1)}); // 7
    c.points.push_back({cross(1, 2), Rational(1)}); // 8

    auto add = [&](const Line& l, std::vector<int> ids) {
        std::sort(ids.begin(), ids.end());
        c.lines.push_back({l, std::move(ids)});
    };
    add(Line(Int(0), Int(1), Int(0)), {0, 1, 2});   // y = 0
    add(Line(Int(0), Int(1), Int(-2)), {3, 4, 5});  // y = 2
    add(Line(Int(0), Int(1), Int(-1)), {6, 7, 8});  // y = 1
    auto join = [&](int p, int q, int r) { add(line_through(c.points[p], c.points[q]), {p, q, r}); };
    join(0, 4, 6);
    join(1, 3, 6);
    join(0, 5, 7);
    join(2, 3, 7);
    join(1, 5, 8);
    join(2, 4, 8);

    c.meta = Json{{"op", "seed"}, {"kind", "pappus"}};
    return c;
}

} // namespace nkcfg
