#include "doctest.h"

#include <vector>

#include "nkcfg/configuration.hpp"
#include "nkcfg/constructions.hpp"
#include "nkcfg/errors.hpp"
#include "nkcfg/seeds.hpp"

using namespace nkcfg;

namespace {

// Same configuration twice, the second copy transformed and relabelled so the
// union is disjoint. Callers pick `map` so no line of one copy meets a point
// of the other.
Configuration disjoint_union(const Configuration& a, const Configuration& b) {
    Configuration u = a;
    int off = a.n();
    for (const Point& p : b.points) u.points.push_back(p);
    for (const LineRecord& rec : b.lines) {
        LineRecord out;
        out.line = rec.line;
        for (int id : rec.points) out.points.push_back(id + off);
        u.lines.push_back(std::move(out));
    }
    u.meta = Json::object();
    return u;
}

// Pappus next to a quarter-turned copy of itself: a verified (18_3) with one
// horizontal and one vertical 3-line pencil on disjoint point sets.
Configuration two_pencil_fixture() {
    Configuration base = pappus();
    AffineMap quarter = AffineMap::linear(Rational(0), Rational(-1), Rational(1), Rational(0));
    AffineMap shift = AffineMap::translation(Rational(100), Rational(50));
    Configuration rotated = apply_map(apply_map(base, quarter), shift);
    return disjoint_union(base, rotated);
}

} // namespace

TEST_SUITE("constructions") {

TEST_CASE("replication turns the quadrilateral into a verified (16_3)") {
    ReplicationResult rep = affine_replication(multilateral(4), 3);
    const Configuration& out = rep.output;
    CHECK_EQ(out.k, 3);
    CHECK_EQ(out.n(), 16);
    VerificationReport report = verify(out);
    CHECK(report.ok);
    CHECK(report.connected);
    CHECK_EQ(report.incidences, 48);

    // Layout: two extra copies of the 4 input points, then 4 axis points;
    // the new pencil is the last 4 lines and it is horizontal.
    CHECK_EQ(rep.ratios.size(), 2);
    REQUIRE_EQ(rep.fixed_points.size(), 4);
    REQUIRE_EQ(rep.new_pencil.size(), 4);
    CHECK_EQ(rep.new_pencil.lines.front(), 12);
    CHECK_EQ(rep.new_pencil.lines.back(), 15);
    CHECK_EQ(rep.new_pencil.direction.first, 0);
    CHECK_EQ(rep.new_pencil.direction.second, 1);
    for (int id : rep.fixed_points) {
        CHECK(id >= 12);
        CHECK(incident(out.points[id], rep.axis));
    }
    for (int id : rep.new_pencil.lines) CHECK(out.lines[id].line.is_horizontal());
    CHECK_EQ(out.meta.at("op"), "affine_replication");
}

TEST_CASE("replication of the triangle gives the smallest 3-configuration order") {
    ReplicationResult rep = affine_replication(multilateral(3), 3);
    CHECK_EQ(rep.output.n(), 12);
    CHECK(verify(rep.output).ok);
}

TEST_CASE("replication lifts pappus to a verified (45_4) with a 9-line pencil") {
    ReplicationResult rep = affine_replication(pappus(), 4);
    const Configuration& out = rep.output;
    CHECK_EQ(out.k, 4);
    CHECK_EQ(out.n(), 45);
    CHECK(verify(out).ok);
    CHECK_EQ(rep.ratios.size(), 3);
    CHECK_EQ(rep.new_pencil.size(), 9);
    for (int id : rep.new_pencil.lines) {
        CHECK(out.lines[id].line.is_horizontal());
        CHECK_EQ(out.lines[id].points.size(), 4);
    }
}

TEST_CASE("replication rejects bad orders and bad inputs") {
    CHECK_THROWS_AS(affine_replication(multilateral(4), 2), Error);
    try {
        affine_replication(pappus(), 3); // pappus already has k = 3, not 2
        FAIL("expected an input mismatch");
    } catch (const Error& e) {
        CHECK_EQ(e.code(), Errc::InputNotConfiguration);
    }
    Configuration broken = multilateral(4);
    broken.points[0] = Point{Rational(5), Rational(7)};
    try {
        affine_replication(broken, 3);
        FAIL("expected rejection of an unverified input");
    } catch (const Error& e) {
        CHECK_EQ(e.code(), Errc::InputNotConfiguration);
    }
}

TEST_CASE("replication is deterministic for a fixed seed") {
    ReplicationResult a = affine_replication(multilateral(5), 3, 42);
    ReplicationResult b = affine_replication(multilateral(5), 3, 42);
    CHECK_EQ(geometry_hash(a.output), geometry_hash(b.output));
    CHECK_EQ(a.ratios.size(), b.ratios.size());
    for (std::size_t i = 0; i < a.ratios.size(); ++i) CHECK_EQ(a.ratios[i], b.ratios[i]);
}

TEST_CASE("switching trades pencil lines for centers, one order at a time") {
    ReplicationResult rep = affine_replication(multilateral(3), 3);
    REQUIRE(verify(rep.output).ok);
    REQUIRE_EQ(rep.new_pencil.size(), 3);
    for (int r = 1; r <= 3; ++r) {
        SwitchResult sw = affine_switch(rep.output, rep.new_pencil, nullptr, r, 0);
        CHECK_EQ(sw.output.n(), 24 + r);
        VerificationReport report = verify(sw.output);
        CHECK(report.ok);
        CHECK(report.connected);
        REQUIRE_EQ(sw.center_point_ids.size(), (std::size_t)r);
        REQUIRE_EQ(sw.removed_line_ids.size(), (std::size_t)r);
        for (int i = 0; i < r; ++i) CHECK_EQ(sw.removed_line_ids[i], rep.new_pencil.lines[i]);
        // Removed lines were horizontal, so every center sits on the y-axis
        // of the normalized frame the output lives in.
        for (int id : sw.center_point_ids) CHECK(sw.output.points[id].x.is_zero());
        CHECK_EQ(sw.output.meta.at("op"), "affine_switch");
    }
}

TEST_CASE("a switch band on pappus yields verified (19_3), (20_3), (21_3)") {
    Configuration base = pappus();
    std::vector<Pencil> ps = pencils(base);
    REQUIRE_EQ(ps.size(), 1);
    std::vector<SwitchResult> band = affine_switch_band(base, ps[0]);
    REQUIRE_EQ(band.size(), 3);
    for (int r = 1; r <= 3; ++r) {
        const SwitchResult& sw = band[r - 1];
        CHECK_EQ(sw.output.n(), 18 + r);
        CHECK_EQ(sw.output.k, 3);
        CHECK(verify(sw.output).ok);
    }
}

TEST_CASE("switching with two independent pencils removes from both") {
    Configuration two = two_pencil_fixture();
    REQUIRE(verify(two).ok);
    std::vector<Pencil> ps = pencils(two);
    REQUIRE_EQ(ps.size(), 2);
    REQUIRE_EQ(ps[0].direction.first, 0);  // horizontal carriers of copy one
    REQUIRE_EQ(ps[1].direction.second, 0); // vertical carriers of copy two
    REQUIRE(independent_pencils(two, ps[0], ps[1]));

    SwitchResult sw = affine_switch(two, ps[0], &ps[1], 1, 1);
    CHECK_EQ(sw.output.n(), 38);
    CHECK(verify(sw.output).ok);
    REQUIRE_EQ(sw.removed_line_ids.size(), 2);
    CHECK_EQ(sw.removed_line_ids[0], ps[0].lines[0]);
    CHECK_EQ(sw.removed_line_ids[1], ps[1].lines[0]);
    REQUIRE_EQ(sw.center_point_ids.size(), 2);
    // Horizontal removal centers on the y-axis, vertical removal on the x-axis.
    CHECK(sw.output.points[sw.center_point_ids[0]].x.is_zero());
    CHECK(sw.output.points[sw.center_point_ids[1]].y.is_zero());

    SwitchResult wider = affine_switch(two, ps[0], &ps[1], 2, 1);
    CHECK_EQ(wider.output.n(), 39);
    CHECK(verify(wider.output).ok);
}

TEST_CASE("switch rejects out-of-range removals and bad parameters") {
    Configuration base = pappus();
    Pencil pencil = pencils(base)[0];
    auto code_of = [&](int s, int t, long h) {
        try {
            affine_switch(base, pencil, nullptr, s, t, h);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::ParseError; // sentinel: no throw
    };
    CHECK_EQ(code_of(4, 0, 0), Errc::RTooLarge);  // pencil only has 3 lines
    CHECK_EQ(code_of(0, 0, 0), Errc::RTooLarge);  // must remove something
    CHECK_EQ(code_of(-1, 0, 0), Errc::BadParams);
    CHECK_EQ(code_of(1, 1, 0), Errc::BadParams);  // t > 0 needs a second pencil
    CHECK_EQ(code_of(1, 0, 1), Errc::HTooSmall);  // needs h > k-2
    CHECK_THROWS_AS(affine_switch(base, Pencil{}, nullptr, 1, 0), Error);

    // Same pencil on both sides is not an independent pair.
    Configuration two = two_pencil_fixture();
    Pencil ph = pencils(two)[0];
    try {
        affine_switch(two, ph, &ph, 1, 1);
        FAIL("expected a direction clash");
    } catch (const Error& e) {
        CHECK_EQ(e.code(), Errc::SameDirection);
    }

    // k = 2 inputs cannot be switched.
    Configuration flat = multilateral(4);
    Pencil chord = pencils(flat)[0];
    try {
        affine_switch(flat, chord, nullptr, 1, 0);
        FAIL("expected rejection of a 2-configuration");
    } catch (const Error& e) {
        CHECK_EQ(e.code(), Errc::InputNotConfiguration);
    }
}

TEST_CASE("switching is deterministic for a fixed seed") {
    Configuration base = pappus();
    Pencil pencil = pencils(base)[0];
    std::vector<SwitchResult> a = affine_switch_band(base, pencil, 0, 7);
    std::vector<SwitchResult> b = affine_switch_band(base, pencil, 0, 7);
    REQUIRE_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK_EQ(geometry_hash(a[i].output), geometry_hash(b[i].output));
}

} // TEST_SUITE
