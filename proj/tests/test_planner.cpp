#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "nkcfg/configuration.hpp"
#include "nkcfg/errors.hpp"
#include "nkcfg/planner.hpp"

using namespace nkcfg;

namespace {

std::string summary_of(int k, long n) {
    std::optional<ConstructionPlan> p = plan(k, n);
    REQUIRE(p.has_value());
    return p->summary();
}

} // namespace

TEST_SUITE("planner") {

TEST_CASE("plan picks the band split with the largest feasible base") {
    CHECK_EQ(summary_of(2, 5), "multilateral(5)");
    CHECK_EQ(summary_of(3, 9), "pappus");
    CHECK_EQ(summary_of(3, 19), "pappus -> switch(r=1)");
    CHECK_EQ(summary_of(3, 21), "pappus -> switch(r=3)");
    CHECK_EQ(summary_of(3, 57), "multilateral(7) -> replicate(3) -> switch(r=1)");
    CHECK_EQ(summary_of(3, 64), "multilateral(16) -> replicate(3)");
    CHECK_EQ(summary_of(3, 56), "multilateral(14) -> replicate(3)");
    CHECK_EQ(summary_of(4, 144), "pappus -> replicate(4) -> switch(r=9)");
    CHECK_EQ(summary_of(4, 290), "pappus -> switch(r=1) -> replicate(4) -> switch(r=5)");
    CHECK_EQ(summary_of(5, 1085), "pappus -> replicate(4) -> replicate(5) -> switch(r=5)");
}

TEST_CASE("plan returns nothing outside its constructive reach") {
    CHECK_FALSE(plan(3, 55).has_value()); // the last hole below the guarantee
    CHECK(plan(3, 56).has_value());
    CHECK_FALSE(plan(3, 8).has_value());
    CHECK_FALSE(plan(2, 2).has_value());
    CHECK_FALSE(plan(4, 50).has_value());
    // Known realizable but not reachable with these two seeds alone.
    CHECK_FALSE(plan(5, 576).has_value());
    CHECK_THROWS_AS(plan(1, 5), Error);
}

TEST_CASE("plans serialize deterministically") {
    std::optional<ConstructionPlan> p = plan(3, 57);
    REQUIRE(p.has_value());
    Json doc = p->to_json();
    CHECK_EQ(doc.at("k"), 3);
    CHECK_EQ(doc.at("n"), 57);
    REQUIRE_EQ(doc.at("steps").size(), 3);
    CHECK_EQ(doc.at("steps")[0].at("op"), "seed");
    CHECK_EQ(doc.at("steps")[0].at("kind"), "multilateral");
    CHECK_EQ(doc.at("steps")[0].at("size"), 7);
    CHECK_EQ(doc.at("steps")[1].at("op"), "replicate");
    CHECK_EQ(doc.at("steps")[1].at("k"), 3);
    CHECK_EQ(doc.at("steps")[2].at("op"), "switch_band");
    CHECK_EQ(doc.at("steps")[2].at("r"), 1);
    CHECK_EQ(doc.dump(), plan(3, 57)->to_json().dump());
}

TEST_CASE("execute runs a recipe end to end and labels the result") {
    std::optional<ConstructionPlan> p = plan(3, 20);
    REQUIRE(p.has_value());
    Configuration c = execute(*p);
    CHECK_EQ(c.k, 3);
    CHECK_EQ(c.n(), 20);
    CHECK(verify(c).ok);
    CHECK_EQ(c.meta.at("plan").at("n"), 20);
}

TEST_CASE("execute handles a band in the middle of a chain") {
    std::optional<ConstructionPlan> p = plan(4, 290);
    REQUIRE(p.has_value());
    Configuration c = execute(*p);
    CHECK_EQ(c.k, 4);
    CHECK_EQ(c.n(), 290);
    CHECK(verify(c).ok);
}

TEST_CASE("execute rejects malformed recipes") {
    auto rejects = [](ConstructionPlan p) {
        try {
            execute(p);
            return false;
        } catch (const Error& e) {
            return e.code() == Errc::BadParams;
        }
    };
    CHECK(rejects({3, 19, {}}));                                   // empty
    CHECK(rejects({3, 19, {PlanStep(SwitchBandStep{1})}}));        // no seed
    CHECK(rejects({2, 6, {PlanStep(SeedStep{"multilateral", 3}),
                          PlanStep(SeedStep{"multilateral", 3})}})); // second seed
    CHECK(rejects({2, 2, {PlanStep(SeedStep{"multilateral", 2})}})); // too small
    CHECK(rejects({3, 9, {PlanStep(SeedStep{"fano", 7})}}));         // unknown kind
    CHECK(rejects({4, 45, {PlanStep(SeedStep{"pappus", 9}),
                           PlanStep(ReplicateStep{5})}}));           // skips k = 4
    CHECK(rejects({2, 9, {PlanStep(SeedStep{"multilateral", 4}),
                          PlanStep(SwitchBandStep{1})}}));           // no pencil
    CHECK(rejects({3, 41, {PlanStep(SeedStep{"pappus", 9}),
                           PlanStep(SwitchBandStep{1}),
                           PlanStep(SwitchBandStep{1})}}));          // band after band
    CHECK(rejects({3, 22, {PlanStep(SeedStep{"pappus", 9}),
                           PlanStep(SwitchBandStep{4})}}));          // r > pencil
    ConstructionPlan mislabeled = *plan(3, 20);
    mislabeled.n = 21;
    CHECK(rejects(mislabeled));
}

TEST_CASE("execute refuses targets beyond its ceilings") {
    std::optional<ConstructionPlan> p5 = plan(5, 1441);
    REQUIRE(p5.has_value());
    try {
        execute(*p5);
        FAIL("expected a resource refusal");
    } catch (const Error& e) {
        CHECK_EQ(e.code(), Errc::ResourceLimit);
    }
    std::optional<ConstructionPlan> p4 = plan(4, 2600);
    REQUIRE(p4.has_value());
    CHECK_THROWS_AS(execute(*p4), Error);
    ConstructionPlan deep{6, 1890, {PlanStep(SeedStep{"pappus", 9}), PlanStep(ReplicateStep{4}),
                                    PlanStep(ReplicateStep{5}), PlanStep(ReplicateStep{6})}};
    try {
        execute(deep);
        FAIL("expected a resource refusal");
    } catch (const Error& e) {
        CHECK_EQ(e.code(), Errc::ResourceLimit);
    }
}

TEST_CASE("coverage at k = 2 has no sporadic orders") {
    CoverageCertificate cert = coverage(2, 100);
    CHECK_EQ(cert.guaranteed_from, 3);
    CHECK(cert.sporadic.empty());
}

TEST_CASE("coverage at k = 3 matches the hand-derived sporadic set") {
    CoverageCertificate cert = coverage(3, 200);
    CHECK_EQ(cert.guaranteed_from, 56);
    std::set<long> want;
    want.insert(9);
    for (long n = 19; n <= 21; ++n) want.insert(n);        // pappus band
    for (long x = 3; 4 * x < 56; ++x) want.insert(4 * x);  // pure replication
    for (long X = 3; X <= 6; ++X)                          // bands over multilaterals
        for (long r = 1; r <= X; ++r)
            if (8 * X + r < 56) want.insert(8 * X + r);
    std::vector<long> expected(want.begin(), want.end());
    CHECK(cert.sporadic == expected);
}

TEST_CASE("coverage at k = 4 certifies the full range up to 2000") {
    CoverageCertificate cert = coverage(4, 2000);
    CHECK_EQ(cert.guaranteed_from, 840);
    REQUIRE(!cert.sporadic.empty());
    CHECK_EQ(cert.sporadic.front(), 45); // smallest constructible 4-configuration
    for (long n : {45L, 136L, 144L, 290L, 839L})
        CHECK(std::binary_search(cert.sporadic.begin(), cert.sporadic.end(), n));
    for (long n : {44L, 46L, 50L})
        CHECK_FALSE(std::binary_search(cert.sporadic.begin(), cert.sporadic.end(), n));
}

TEST_CASE("coverage rejects unsupported parameters") {
    CHECK_THROWS_AS(coverage(6, 100), Error);
    CHECK_THROWS_AS(coverage(3, 0), Error);
}

} // TEST_SUITE
