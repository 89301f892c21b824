#include "nkcfg/geometry.hpp"

#include "nkcfg/errors.hpp"

namespace nkcfg {

std::uint64_t Point::hash() const {
    return x.hash() * 0x9e3779b97f4a7c15ULL ^ y.hash();
}

namespace {

// gcd(|a|,|b|,|c|); gcd with 0 is the other argument, so this is safe for
// lines with zero coefficients.
Int gcd3(const Int& a, const Int& b, const Int& c) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

} // namespace

Line::Line(const Int& a, const Int& b, const Int& c) : a_(a), b_(b), c_(c) {
    if (sgn(a_) == 0 && sgn(b_) == 0)
        throw Error(Errc::BadParams, "line needs (a,b) != (0,0)");
    Int g = gcd3(a_, b_, c_);
    a_ /= g;
    b_ /= g;
    c_ /= g;
    int lead = sgn(a_) != 0 ? sgn(a_) : sgn(b_);
    if (lead < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
}

Line::Line(const Rational& a, const Rational& b, const Rational& c) {
    // Clear denominators first, then reduce in the integer constructor path.
    Int l;
    mpz_lcm(l.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    *this = Line(Int(a.num() * (l / a.den())),
                 Int(b.num() * (l / b.den())),
                 Int(c.num() * (l / c.den())));
}

Rational Line::eval(const Point& p) const {
    return Rational(a_) * p.x + Rational(b_) * p.y + Rational(c_);
}

std::pair<Int, Int> Line::direction() const {
    Int g;
    mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
    // g > 0 and the canonical sign rule already holds for (a,b).
    return {Int(a_ / g), Int(b_ / g)};
}

std::pair<Point, Point> Line::sample_points() const {
    if (sgn(b_) != 0) {
        Rational y0 = Rational(Int(-c_)) / Rational(b_);
        Rational y1 = Rational(Int(-c_ - a_)) / Rational(b_);
        return {Point{0, y0}, Point{1, y1}};
    }
    Rational x0 = Rational(Int(-c_)) / Rational(a_);
    return {Point{x0, 0}, Point{x0, 1}};
}

std::uint64_t Line::hash() const {
    std::uint64_t h = hash_int(a_);
    h = h * 0x9e3779b97f4a7c15ULL ^ hash_int(b_);
    h = h * 0x9e3779b97f4a7c15ULL ^ hash_int(c_);
    return h;
}

AffineMap AffineMap::translation(const Rational& dx, const Rational& dy) {
    AffineMap m;
    m.t0 = dx;
    m.t1 = dy;
    return m;
}

AffineMap AffineMap::diagonal(const Rational& sx, const Rational& sy) {
    AffineMap m;
    m.m00 = sx;
    m.m11 = sy;
    return m;
}

AffineMap AffineMap::linear(const Rational& m00, const Rational& m01,
                            const Rational& m10, const Rational& m11) {
    AffineMap m;
    m.m00 = m00;
    m.m01 = m01;
    m.m10 = m10;
    m.m11 = m11;
    return m;
}

bool AffineMap::is_diagonal() const {
    return m01.is_zero() && m10.is_zero() && t0.is_zero() && t1.is_zero();
}

bool AffineMap::is_identity() const {
    return *this == AffineMap{};
}

Point AffineMap::apply(const Point& p) const {
    return {m00 * p.x + m01 * p.y + t0, m10 * p.x + m11 * p.y + t1};
}

Line AffineMap::apply(const Line& l) const {
    auto [p, q] = l.sample_points();
    return line_through(apply(p), apply(q));
}

AffineMap AffineMap::compose(const AffineMap& other) const {
    AffineMap r;
    r.m00 = m00 * other.m00 + m01 * other.m10;
    r.m01 = m00 * other.m01 + m01 * other.m11;
    r.m10 = m10 * other.m00 + m11 * other.m10;
    r.m11 = m10 * other.m01 + m11 * other.m11;
    r.t0 = m00 * other.t0 + m01 * other.t1 + t0;
    r.t1 = m10 * other.t0 + m11 * other.t1 + t1;
    return r;
}

AffineMap AffineMap::inverse() const {
    Rational det = determinant();
    if (det.is_zero()) throw Error(Errc::SingularMap, "affine map not invertible");
    AffineMap r;
    r.m00 = m11 / det;
    r.m01 = -m01 / det;
    r.m10 = -m10 / det;
    r.m11 = m00 / det;
    r.t0 = -(r.m00 * t0 + r.m01 * t1);
    r.t1 = -(r.m10 * t0 + r.m11 * t1);
    return r;
}

bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.m00 == b.m00 && a.m01 == b.m01 && a.m10 == b.m10 && a.m11 == b.m11 &&
           a.t0 == b.t0 && a.t1 == b.t1;
}

Line line_through(const Point& p, const Point& q) {
    if (p == q) throw Error(Errc::CoincidentPoints, "line through a point pair needs two points");
    // Determinant expansion of |x y 1; px py 1; qx qy 1|. Swapping p and q
    // negates all three coefficients, which canonicalization absorbs, so the
    // result is symmetric bit-for-bit.
    Rational a = p.y - q.y;
    Rational b = q.x - p.x;
    Rational c = p.x * q.y - q.x * p.y;
    return Line(a, b, c);
}

std::optional<Point> intersect(const Line& l1, const Line& l2) {
    if (l1 == l2) throw Error(Errc::IdenticalLines, "intersection of a line with itself");
    Int det = l1.a() * l2.b() - l2.a() * l1.b();
    if (sgn(det) == 0) return std::nullopt;
    Rational x(Int(l1.b() * l2.c() - l2.b() * l1.c()), det);
    Rational y(Int(l2.a() * l1.c() - l1.a() * l2.c()), det);
    return Point{x, y};
}

bool incident(const Point& p, const Line& l) {
    return l.contains(p);
}

AffineMap orthogonal_affinity(const Line& axis, const Rational& ratio) {
    if (ratio.is_zero()) throw Error(Errc::ZeroRatio, "affinity ratio must be nonzero");
    // P maps to F + ratio*(P - F) with F the foot of the perpendicular from
    // P; expanding F gives P + s*e(P)*(a,b) with e the line form and
    // s = (ratio-1)/(a^2+b^2). Entirely rational: no normalization needed.
    Rational a(axis.a()), b(axis.b()), c(axis.c());
    Rational s = (ratio - 1) / (a * a + b * b);
    AffineMap m;
    m.m00 = 1 + s * a * a;
    m.m01 = s * a * b;
    m.m10 = s * a * b;
    m.m11 = 1 + s * b * b;
    m.t0 = s * a * c;
    m.t1 = s * b * c;
    return m;
}

AffineMap affinity_from_axis_and_pair(const Line& axis, const Point& p, const Point& p_image) {
    Rational ep = axis.eval(p);
    if (ep.is_zero()) throw Error(Errc::PointOnAxis, "p lies on the axis");
    if (axis.eval(p_image).is_zero()) throw Error(Errc::PointOnAxis, "p_image lies on the axis");
    // X maps to X + e(X)/e(p) * (p_image - p): fixes the axis pointwise,
    // moves everything parallel to p_image - p, and sends p to p_image.
    Rational dx = p_image.x - p.x;
    Rational dy = p_image.y - p.y;
    Rational a(axis.a()), b(axis.b()), c(axis.c());
    AffineMap m;
    m.m00 = 1 + a * dx / ep;
    m.m01 = b * dx / ep;
    m.t0 = c * dx / ep;
    m.m10 = a * dy / ep;
    m.m11 = 1 + b * dy / ep;
    m.t1 = c * dy / ep;
    if (m.determinant().is_zero())
        throw Error(Errc::DegeneratePair, "axis/pair combination collapses the plane");
    return m;
}

std::vector<AffineMap> switch_family(long h, int k) {
    if (k < 3) throw Error(Errc::BadParams, "switch family needs k >= 3");
    if (h <= (long)k - 2) throw Error(Errc::HTooSmall, "need h > k-2");
    std::vector<AffineMap> maps;
    maps.reserve((std::size_t)(k - 2));
    for (long j = 1; j <= (long)k - 2; ++j)
        maps.push_back(AffineMap::diagonal(Rational(Int(h - j), Int(h)),
                                           Rational(Int(h + j), Int(h))));
    return maps;
}

Point pencil_center(const AffineMap& alpha, const Rational& x0) {
    if (!alpha.is_diagonal()) throw Error(Errc::NotDiagonal, "pencil center needs a diagonal map");
    if (alpha.m11 == Rational(1)) throw Error(Errc::UnitRatio, "y-ratio 1 gives parallel joins");
    // Join of (x0, y) and (a*x0, b*y) meets the x-axis at a y-independent
    // abscissa; a = b (homothety) degenerates to the origin, consistent with
    // the joins all passing through it.
    return {x0 * (alpha.m00 - alpha.m11) / (Rational(1) - alpha.m11), Rational(0)};
}

Point pencil_center_y(const AffineMap& alpha, const Rational& y0) {
    if (!alpha.is_diagonal()) throw Error(Errc::NotDiagonal, "pencil center needs a diagonal map");
    if (alpha.m00 == Rational(1)) throw Error(Errc::UnitRatio, "x-ratio 1 gives parallel joins");
    return {Rational(0), y0 * (alpha.m11 - alpha.m00) / (Rational(1) - alpha.m00)};
}

} // namespace nkcfg
