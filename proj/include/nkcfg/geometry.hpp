#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nkcfg/rational.hpp"

namespace nkcfg {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

    std::uint64_t hash() const;
};

struct PointHash {
    std::size_t operator()(const Point& p) const { return (std::size_t)p.hash(); }
};

// Line a*x + b*y + c = 0 in canonical integer form: gcd(|a|,|b|,|c|) = 1,
// (a,b) != (0,0), and the leading nonzero of (a,b) is positive. Canonical
// form makes equality structural, so lines can live in hash sets.
class Line {
public:
    Line() = default;
    Line(const Int& a, const Int& b, const Int& c);
    Line(const Rational& a, const Rational& b, const Rational& c);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }

    // Exact value of a*x + b*y + c at p; zero iff p is on the line.
    Rational eval(const Point& p) const;
    bool contains(const Point& p) const { return eval(p).is_zero(); }

    bool is_vertical() const { return sgn(b_) == 0; }
    bool is_horizontal() const { return sgn(a_) == 0; }

    // Parallel class of the line: (a,b) with the gcd between a and b also
    // divided out, sign-normalized. Two lines are parallel or equal iff
    // their directions match.
    std::pair<Int, Int> direction() const;

    // Two distinct points on the line, used when transforming lines by
    // affine maps (image of the line = line through the images).
    std::pair<Point, Point> sample_points() const;

    std::uint64_t hash() const;

    friend bool operator==(const Line& a, const Line& b) { return a.a_ == b.a_ && a.b_ == b.b_ && a.c_ == b.c_; }
    friend bool operator!=(const Line& a, const Line& b) { return !(a == b); }

private:
    Int a_ = 0, b_ = 1, c_ = 0;
};

struct LineHash {
    std::size_t operator()(const Line& l) const { return (std::size_t)l.hash(); }
};

// Invertible affine map x' = m00*x + m01*y + t0, y' = m10*x + m11*y + t1.
struct AffineMap {
    Rational m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    Rational t0 = 0, t1 = 0;

    static AffineMap identity() { return {}; }
    static AffineMap translation(const Rational& dx, const Rational& dy);
    static AffineMap diagonal(const Rational& sx, const Rational& sy);
    static AffineMap linear(const Rational& m00, const Rational& m01,
                            const Rational& m10, const Rational& m11);

    Rational determinant() const { return m00 * m11 - m01 * m10; }
    bool is_diagonal() const;
    bool is_identity() const;

    Point apply(const Point& p) const;
    Line apply(const Line& l) const;

    // this after other: apply(compose(f,g), p) == apply(f, apply(g, p)).
    AffineMap compose(const AffineMap& other) const;
    AffineMap inverse() const; // throws SingularMap

    friend bool operator==(const AffineMap& a, const AffineMap& b);
};

// Line through two distinct points; symmetric in its arguments, bit-for-bit.
// Throws CoincidentPoints.
Line line_through(const Point& p, const Point& q);

// Intersection point, or nullopt for distinct parallels.
// Throws IdenticalLines when both arguments are the same line.
std::optional<Point> intersect(const Line& l1, const Line& l2);

bool incident(const Point& p, const Line& l);

// Affinity fixing `axis` pointwise and scaling signed perpendicular distance
// by `ratio` (ratio 1 = identity, -1 = reflection). Throws ZeroRatio.
AffineMap orthogonal_affinity(const Line& axis, const Rational& ratio);

// The unique affinity fixing `axis` pointwise with p -> p_image; every point
// moves parallel to p_image - p. Both p and p_image must be off the axis
// (PointOnAxis), which also guarantees the map is invertible
// (DegeneratePair is checked defensively).
AffineMap affinity_from_axis_and_pair(const Line& axis, const Point& p, const Point& p_image);

// Diagonal maps diag((h-j)/h, (h+j)/h) for j = 1..k-2. Any point is exactly
// collinear with all of its images under these maps. Pre: k >= 3, h > k-2
// (HTooSmall).
std::vector<AffineMap> switch_family(long h, int k);

// Lines joining (x0, y) to alpha(x0, y) for varying y concur at a point on
// the x-axis: (x0*(a-b)/(1-b), 0) for alpha = diag(a, b). Pre: alpha diagonal
// with zero translation (NotDiagonal); b != 1 (UnitRatio).
Point pencil_center(const AffineMap& alpha, const Rational& x0);

// Symmetric version: lines joining (x, y0) to alpha(x, y0) concur on the
// y-axis at (0, y0*(b-a)/(1-a)). Pre: a != 1 (UnitRatio).
Point pencil_center_y(const AffineMap& alpha, const Rational& y0);

} // namespace nkcfg
