#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "nkcfg/configuration.hpp"

namespace nkcfg {

struct SeedStep {
    std::string kind; // "multilateral" | "pappus"
    int size = 0;     // multilateral order; 9 for pappus
};

struct ReplicateStep {
    int k = 0; // target order, input must be (m_{k-1})
};

struct SwitchBandStep {
    int r = 0; // lines removed from the pencil carried by the previous step
};

using PlanStep = std::variant<SeedStep, ReplicateStep, SwitchBandStep>;

// Recipe Seed (Replicate [SwitchBand])*, with Replicate orders ascending one
// by one from the seed's k. A SwitchBand consumes the pencil produced by the
// step before it, so it may only directly follow a Replicate or a Pappus
// seed; at most one band per order, and bands may sit mid-chain (the next
// Replicate picks the band's output up). plan() only emits well-formed
// recipes; execute() re-validates.
struct ConstructionPlan {
    int k = 0;
    long n = 0;
    std::vector<PlanStep> steps;

    Json to_json() const;
    std::string summary() const; // one-line, e.g. "multilateral(7) -> replicate(3) -> switch(r=1)"
};

// Deterministic recipe for a verified (n_k), or nullopt when n is outside
// this kit's constructive reach (which is narrower than known realizability).
// Recipes use only multilateral and Pappus seeds:
//   k=2: n >= 3 directly.
//   k>=3: band split n = (k^2-1)X + r with 1 <= r <= X and X plannable at
//   k-1 (largest feasible X), else pure replication n = (k+1)X, else the
//   Pappus shortcuts n in {9, 19, 20, 21} at k=3.
std::optional<ConstructionPlan> plan(int k, long n);

// Runs the recipe and returns the final configuration (verified at every
// step by the construction ops). Execution is capped at n <= 2500 for
// k <= 4 and n <= 1200 for k = 5; larger targets are plan-only
// (ResourceLimit). Throws BadParams on malformed plans.
Configuration execute(const ConstructionPlan& p, std::uint64_t seed = 0);

struct CoverageCertificate {
    int k = 0;
    long up_to = 0;
    long guaranteed_from = 0;    // everything >= this is plannable
    std::vector<long> sporadic;  // plannable n < guaranteed_from (n <= up_to)
};

// Enumerates plannability for all n <= up_to and checks it agrees with the
// guarantee threshold G_k (G_2 = 3, G_k = bar_step(k, G_{k-1})).
// Pre: 2 <= k <= 5 (BadParams).
CoverageCertificate coverage(int k, long up_to);

} // namespace nkcfg
