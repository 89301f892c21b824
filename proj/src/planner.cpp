#include "nkcfg/planner.hpp"

#include <algorithm>
#include <limits>

#include "nkcfg/bounds.hpp"
#include "nkcfg/constructions.hpp"
#include "nkcfg/errors.hpp"
#include "nkcfg/seeds.hpp"

namespace nkcfg {

Json ConstructionPlan::to_json() const {
    Json doc = Json::object();
    doc["k"] = k;
    doc["n"] = n;
    Json steps_json = Json::array();
    for (const PlanStep& step : steps) {
        Json s = Json::object();
        if (const auto* seed = std::get_if<SeedStep>(&step)) {
            s["op"] = "seed";
            s["kind"] = seed->kind;
            s["size"] = seed->size;
        } else if (const auto* rep = std::get_if<ReplicateStep>(&step)) {
            s["op"] = "replicate";
            s["k"] = rep->k;
        } else {
            s["op"] = "switch_band";
            s["r"] = std::get<SwitchBandStep>(step).r;
        }
        steps_json.push_back(std::move(s));
    }
    doc["steps"] = std::move(steps_json);
    return doc;
}

std::string ConstructionPlan::summary() const {
    std::string out;
    for (const PlanStep& step : steps) {
        if (!out.empty()) out += " -> ";
        if (const auto* seed = std::get_if<SeedStep>(&step)) {
            out += seed->kind == "pappus" ? "pappus"
                                          : seed->kind + "(" + std::to_string(seed->size) + ")";
        } else if (const auto* rep = std::get_if<ReplicateStep>(&step)) {
            out += "replicate(" + std::to_string(rep->k) + ")";
        } else {
            out += "switch(r=" + std::to_string(std::get<SwitchBandStep>(step).r) + ")";
        }
    }
    return out;
}

std::optional<ConstructionPlan> plan(int k, long n) {
    if (k < 2) throw Error(Errc::BadParams, "plan needs k >= 2");
    ConstructionPlan out;
    out.k = k;
    out.n = n;
    if (k == 2) {
        if (n < 3 || n > std::numeric_limits<int>::max()) return std::nullopt;
        out.steps = {PlanStep(SeedStep{"multilateral", (int)n})};
        return out;
    }
    // Band split first: n = (k^2-1)X + r with 1 <= r <= X, largest X. As X
    // decreases r grows by k^2-1 each step, so the feasible window is short.
    long q = (long)k * k - 1;
    for (long X = (n - 1) / q; X >= 1; --X) {
        long r = n - q * X;
        if (r > X) break;
        if (auto sub = plan(k - 1, X)) {
            out.steps = std::move(sub->steps);
            out.steps.push_back(ReplicateStep{k});
            out.steps.push_back(SwitchBandStep{(int)r});
            return out;
        }
    }
    // Pure replication fills the one-per-band holes between bands.
    if (n % (k + 1) == 0) {
        if (auto sub = plan(k - 1, n / (k + 1))) {
            out.steps = std::move(sub->steps);
            out.steps.push_back(ReplicateStep{k});
            return out;
        }
    }
    // Sporadic small 3-configurations reachable from the Pappus seed.
    if (k == 3) {
        if (n == 9) {
            out.steps = {PlanStep(SeedStep{"pappus", 9})};
            return out;
        }
        if (n >= 19 && n <= 21) {
            out.steps = {PlanStep(SeedStep{"pappus", 9}), PlanStep(SwitchBandStep{(int)(n - 18)})};
            return out;
        }
    }
    return std::nullopt;
}

namespace {

struct SymbolicState {
    int k = 0;
    long n = 0;
    long pencil = 0; // lines in the pencil the previous step produced, 0 = none
};

// Structural walk shared by execute(): same rules, no geometry. Throws
// BadParams on any grammar violation.
SymbolicState check_plan_shape(const ConstructionPlan& p) {
    if (p.steps.empty()) throw Error(Errc::BadParams, "empty plan");
    SymbolicState st;
    bool first = true;
    for (const PlanStep& step : p.steps) {
        if (const auto* seed = std::get_if<SeedStep>(&step)) {
            if (!first) throw Error(Errc::BadParams, "seed after the first step");
            if (seed->kind == "multilateral") {
                if (seed->size < 3) throw Error(Errc::BadParams, "multilateral seed needs n >= 3");
                st = {2, seed->size, 0};
            } else if (seed->kind == "pappus") {
                if (seed->size != 9) throw Error(Errc::BadParams, "pappus seed has order 9");
                st = {3, 9, 3};
            } else {
                throw Error(Errc::BadParams, "unknown seed kind '" + seed->kind + "'");
            }
        } else if (const auto* rep = std::get_if<ReplicateStep>(&step)) {
            if (first) throw Error(Errc::BadParams, "plan must open with a seed");
            if (rep->k != st.k + 1)
                throw Error(Errc::BadParams, "replicate(" + std::to_string(rep->k) +
                                                 ") does not raise k = " + std::to_string(st.k) +
                                                 " by one");
            st = {rep->k, (long)(rep->k + 1) * st.n, st.n};
        } else {
            const auto& band = std::get<SwitchBandStep>(step);
            if (first) throw Error(Errc::BadParams, "plan must open with a seed");
            if (st.pencil == 0)
                throw Error(Errc::BadParams,
                            "switch step without a pencil (must follow replicate or pappus)");
            if (band.r < 1 || band.r > st.pencil)
                throw Error(Errc::BadParams, "switch r = " + std::to_string(band.r) +
                                                 " outside 1.." + std::to_string(st.pencil));
            st = {st.k, (long)(st.k - 1) * st.n + band.r, 0};
        }
        first = false;
    }
    if (st.k != p.k || st.n != p.n)
        throw Error(Errc::BadParams, "plan labeled (" + std::to_string(p.n) + "_" +
                                         std::to_string(p.k) + ") but steps yield (" +
                                         std::to_string(st.n) + "_" + std::to_string(st.k) + ")");
    return st;
}

Pencil largest_pencil(const Configuration& c) {
    std::vector<Pencil> ps = pencils(c);
    if (ps.empty()) throw std::logic_error("seed lost its pencil");
    std::size_t best = 0;
    for (std::size_t i = 1; i < ps.size(); ++i)
        if (ps[i].size() > ps[best].size()) best = i;
    return ps[best];
}

} // namespace

Configuration execute(const ConstructionPlan& p, std::uint64_t seed) {
    check_plan_shape(p);
    if (p.k >= 6)
        throw Error(Errc::ResourceLimit, "execution is plan-only for k >= 6");
    if (p.n > (p.k == 5 ? 1200 : 2500))
        throw Error(Errc::ResourceLimit, "target order " + std::to_string(p.n) +
                                             " exceeds the execution ceiling for k = " +
                                             std::to_string(p.k));

    Configuration cur;
    std::optional<Pencil> pencil;
    for (const PlanStep& step : p.steps) {
        if (const auto* sd = std::get_if<SeedStep>(&step)) {
            if (sd->kind == "multilateral") {
                cur = multilateral(sd->size);
                pencil.reset();
            } else {
                cur = pappus();
                pencil = largest_pencil(cur);
            }
        } else if (const auto* rep = std::get_if<ReplicateStep>(&step)) {
            long expect = (long)(rep->k + 1) * cur.n();
            ReplicationResult res = affine_replication(cur, rep->k, seed);
            cur = std::move(res.output);
            pencil = std::move(res.new_pencil);
            if (cur.n() != expect) throw std::logic_error("replication order drifted");
        } else {
            int r = std::get<SwitchBandStep>(step).r;
            long expect = (long)(cur.k - 1) * cur.n() + r;
            SwitchResult res = affine_switch(cur, *pencil, nullptr, r, 0, 0, seed);
            cur = std::move(res.output);
            pencil.reset();
            if (cur.n() != expect) throw std::logic_error("switch order drifted");
        }
    }
    cur.meta["plan"] = p.to_json();
    return cur;
}

CoverageCertificate coverage(int k, long up_to) {
    if (k < 2 || k > 5) throw Error(Errc::BadParams, "coverage supports 2 <= k <= 5");
    if (up_to < 1) throw Error(Errc::BadParams, "coverage needs up_to >= 1");
    Int g = 3;
    for (int kk = 3; kk <= k; ++kk) g = bar_step(kk, g);
    CoverageCertificate cert;
    cert.k = k;
    cert.up_to = up_to;
    cert.guaranteed_from = g.get_si();
    for (long n = 1; n <= up_to; ++n) {
        bool ok = plan(k, n).has_value();
        if (n >= cert.guaranteed_from && !ok)
            throw std::logic_error("coverage guarantee broken at n = " + std::to_string(n));
        if (n < cert.guaranteed_from && ok) cert.sporadic.push_back(n);
    }
    return cert;
}

} // namespace nkcfg
