#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "nkcfg/configuration.hpp"
#include "nkcfg/errors.hpp"

using namespace nkcfg;

namespace {

Point pt(long x, long y) { return Point{Rational(x), Rational(y)}; }

// Axis-aligned unit square as a (4_2): the smallest fixture with two
// independent pencils (horizontals vs verticals).
Configuration square() {
    Configuration c;
    c.k = 2;
    c.points = {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)};
    c.lines.push_back({Line(Int(0), Int(1), Int(0)), {0, 1}});  // y = 0
    c.lines.push_back({Line(Int(1), Int(0), Int(-1)), {1, 2}}); // x = 1
    c.lines.push_back({Line(Int(0), Int(1), Int(-1)), {2, 3}}); // y = 1
    c.lines.push_back({Line(Int(1), Int(0), Int(0)), {0, 3}});  // x = 0
    return c;
}

bool has_kind(const VerificationReport& r, Violation::Kind k) {
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [&](const Violation& v) { return v.kind == k; });
}

} // namespace

TEST_SUITE("configuration") {

TEST_CASE("the square verifies as a connected (4_2)") {
    VerificationReport rep = verify(square());
    CHECK(rep.ok);
    CHECK(rep.connected);
    CHECK_EQ(rep.incidences, 8);
    CHECK(rep.violations.empty());
}

TEST_CASE("count mismatch and bad k are rejected up front") {
    Configuration c = square();
    c.points.push_back(pt(5, 5));
    CHECK(has_kind(verify(c), Violation::Kind::CountMismatch));

    c = square();
    c.k = 1;
    CHECK(has_kind(verify(c), Violation::Kind::BadK));

    CHECK_FALSE(verify(Configuration{}).ok);
}

TEST_CASE("duplicate points and duplicate lines are reported") {
    Configuration c = square();
    c.points[2] = c.points[0];
    CHECK(has_kind(verify(c), Violation::Kind::DuplicatePoint));

    c = square();
    c.lines[2] = c.lines[0];
    CHECK(has_kind(verify(c), Violation::Kind::DuplicateLine));
}

TEST_CASE("declared incidence lists are checked for range, arity and truth") {
    Configuration c = square();
    c.lines[0].points = {0, 7};
    CHECK(has_kind(verify(c), Violation::Kind::BadIndex));

    c = square();
    c.lines[0].points = {0, 1, 2};
    CHECK(has_kind(verify(c), Violation::Kind::DeclaredCount));

    c = square();
    c.lines[0].points = {0, 2}; // (1,1) is not on y = 0
    VerificationReport rep = verify(c);
    CHECK_FALSE(rep.ok);
    CHECK(has_kind(rep, Violation::Kind::BrokenIncidence));
}

TEST_CASE("true but undeclared incidences are violations") {
    // Degenerate trapezoid: moving a point onto a line it does not declare.
    Configuration c = square();
    c.points[3] = pt(2, 0); // lands on y = 0
    VerificationReport rep = verify(c);
    CHECK_FALSE(rep.ok);
    CHECK(has_kind(rep, Violation::Kind::UnintendedIncidence));
}

TEST_CASE("degree violations name the culprit") {
    Configuration c = square();
    c.k = 3;
    VerificationReport rep = verify(c);
    CHECK_FALSE(rep.ok);
    CHECK(has_kind(rep, Violation::Kind::PointDegree));
    CHECK(has_kind(rep, Violation::Kind::LineDegree));
    CHECK(has_kind(rep, Violation::Kind::DeclaredCount));
}

TEST_CASE("pencils group lines by direction") {
    std::vector<Pencil> ps = pencils(square());
    REQUIRE_EQ(ps.size(), 2);
    CHECK_EQ(ps[0].size(), 2);
    CHECK_EQ(ps[1].size(), 2);
    CHECK(ps[0].direction != ps[1].direction);
    // Singleton classes appear only on request.
    Configuration c = square();
    c.lines.push_back({Line(Int(1), Int(1), Int(-1)), {1, 3}}); // diagonal
    c.points.push_back(pt(9, 9));
    CHECK_EQ(pencils(c).size(), 2);
    CHECK_EQ(pencils(c, true).size(), 3);
}

TEST_CASE("independent pencils share no points; the square's pencils do") {
    Configuration c = square();
    std::vector<Pencil> ps = pencils(c);
    REQUIRE_EQ(ps.size(), 2);
    // Every square corner lies on one horizontal and one vertical line.
    CHECK_FALSE(independent_pencils(c, ps[0], ps[1]));
    CHECK_THROWS_AS(independent_pencils(c, ps[0], ps[0]), Error); // same direction
    // Disjoint union of two squares, shifted off both axes so no line of one
    // square meets the other.
    Configuration two = square();
    AffineMap shift = AffineMap::translation(Rational(10), Rational(7));
    for (int i = 0; i < 4; ++i) two.points.push_back(shift.apply(c.points[i]));
    for (int i = 0; i < 4; ++i) {
        LineRecord rec;
        rec.line = shift.apply(c.lines[i].line);
        for (int pid : c.lines[i].points) rec.points.push_back(pid + 4);
        two.lines.push_back(rec);
    }
    REQUIRE(verify(two).ok);
    std::vector<Pencil> qs = pencils(two);
    REQUIRE_EQ(qs.size(), 2); // directions merge across the two squares
    REQUIRE_EQ(qs[0].size(), 4);
    // Horizontals of the first square vs verticals of the second: disjoint.
    Pencil first_h{qs[0].direction, {qs[0].lines[0], qs[0].lines[1]}};
    Pencil second_v{qs[1].direction, {qs[1].lines[2], qs[1].lines[3]}};
    CHECK(first_h.lines[0] < 4);
    CHECK(second_v.lines[0] >= 4);
    CHECK(independent_pencils(two, first_h, second_v));
    // Both pencils of the same square still collide.
    Pencil first_v{qs[1].direction, {qs[1].lines[0], qs[1].lines[1]}};
    CHECK_FALSE(independent_pencils(two, first_h, first_v));
}

TEST_CASE("apply_map preserves verification and indices") {
    Configuration c = square();
    AffineMap m = AffineMap::linear(Rational(2), Rational(1), Rational(1), Rational(1));
    m.t0 = Rational(Int(-3), Int(7));
    Configuration d = apply_map(c, m);
    CHECK(verify(d).ok);
    CHECK_EQ(d.lines[0].points, c.lines[0].points);
    CHECK_EQ(d.points[2], m.apply(c.points[2]));
    CHECK_THROWS_AS(apply_map(c, AffineMap::diagonal(Rational(0), Rational(1))), Error);
}

TEST_CASE("normalize_pencils straightens one or two pencils") {
    Configuration c = square();
    AffineMap skew = AffineMap::linear(Rational(1), Rational(1), Rational(2), Rational(3));
    Configuration d = apply_map(c, skew); // nothing axis-parallel anymore
    std::vector<Pencil> ps = pencils(d);
    REQUIRE_EQ(ps.size(), 2);

    Configuration n1 = normalize_pencils(d, ps[0]);
    for (int id : ps[0].lines) CHECK(n1.lines[id].line.is_horizontal());
    CHECK(verify(n1).ok);

    CHECK_THROWS_AS(normalize_pencils(d, ps[0], &ps[1]), Error); // pencils share corners

    // Normalizing an already-horizontal pencil keeps coordinates untouched.
    std::vector<Pencil> sq = pencils(c);
    REQUIRE_EQ(sq[0].direction.second, 1); // map order puts (0,1) first
    Configuration same = normalize_pencils(c, sq[0]);
    CHECK_EQ(geometry_hash(same), geometry_hash(c));
}

TEST_CASE("normalize_pencils makes two independent pencils perpendicular") {
    // Two disjoint skewed squares, one pencil from each.
    Configuration c = square();
    Configuration two;
    two.k = 2;
    AffineMap skew = AffineMap::linear(Rational(3), Rational(1), Rational(1), Rational(2));
    AffineMap far = AffineMap::translation(Rational(100), Rational(0));
    for (int copy = 0; copy < 2; ++copy) {
        for (int i = 0; i < 4; ++i) {
            Point p = skew.apply(c.points[i]);
            two.points.push_back(copy ? far.apply(p) : p);
        }
        for (int i = 0; i < 4; ++i) {
            LineRecord rec;
            rec.line = copy ? far.apply(skew.apply(c.lines[i].line)) : skew.apply(c.lines[i].line);
            for (int pid : c.lines[i].points) rec.points.push_back(pid + 4 * copy);
            two.lines.push_back(rec);
        }
    }
    REQUIRE(verify(two).ok);
    std::vector<Pencil> ps = pencils(two);
    REQUIRE_EQ(ps.size(), 2);
    Pencil h{ps[0].direction, {ps[0].lines[0], ps[0].lines[1]}};   // first square only
    Pencil v{ps[1].direction, {ps[1].lines[2], ps[1].lines[3]}};   // second square only
    REQUIRE(independent_pencils(two, h, v));
    Configuration norm = normalize_pencils(two, h, &v);
    CHECK(verify(norm).ok);
    for (int id : h.lines) CHECK(norm.lines[id].line.is_horizontal());
    for (int id : v.lines) CHECK(norm.lines[id].line.is_vertical());
}

TEST_CASE("json round trip is byte-identical for canonical documents") {
    Configuration c = square();
    c.meta["op"] = "test";
    c.meta["params"] = Json::array({1, 2, 3});
    std::ostringstream first;
    write_configuration(first, c);
    std::istringstream back(first.str());
    Configuration c2 = read_configuration(back);
    std::ostringstream second;
    write_configuration(second, c2);
    CHECK_EQ(first.str(), second.str());
    CHECK_EQ(geometry_hash(c), geometry_hash(c2));
    CHECK_EQ(c2.meta["op"], "test");
}

TEST_CASE("rationals serialize as num or num/den strings") {
    Configuration c = square();
    c.points[0] = Point{Rational(Int(1), Int(3)), Rational(-2)};
    c.lines[0].line = Line(Rational(Int(1), Int(3)), Rational(1), Rational(0));
    c.lines[3].line = Line(Rational(1), Rational(0), Rational(Int(-1), Int(3)));
    Json doc = to_json(c);
    CHECK_EQ(doc["points"][0][0], "1/3");
    CHECK_EQ(doc["points"][0][1], "-2");
    Configuration c2 = from_json(doc);
    CHECK_EQ(c2.points[0].x, Rational(Int(1), Int(3)));
    CHECK_EQ(c2.lines[0].line, c.lines[0].line);
}

TEST_CASE("malformed documents raise ParseError") {
    Json good = to_json(square());
    for (auto mutate : {+[](Json& d) { d.erase("points"); },
                        +[](Json& d) { d["points"][0][0] = "1.5"; },
                        +[](Json& d) { d["points"][0] = Json::array({"1"}); },
                        +[](Json& d) { d["lines"][0]["coeffs"] = Json::array({"0", "0", "1"}); },
                        +[](Json& d) { d["k"] = "three"; },
                        +[](Json& d) { d["lines"][0].erase("points"); }}) {
        Json bad = good;
        mutate(bad);
        CHECK_THROWS_AS(from_json(bad), Error);
    }
    std::istringstream not_json("{ nope");
    CHECK_THROWS_AS(read_configuration(not_json), Error);
}

TEST_CASE("geometry hash ignores meta and tracks geometry") {
    Configuration a = square(), b = square();
    b.meta["anything"] = 42;
    CHECK_EQ(geometry_hash(a), geometry_hash(b));
    b.points[0] = pt(-1, 0);
    CHECK_NE(geometry_hash(a), geometry_hash(b));
}

} // TEST_SUITE
