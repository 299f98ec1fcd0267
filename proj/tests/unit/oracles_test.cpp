#include <doctest.h>

#include <map>
#include <string>

#include "dcs/error.hpp"
#include "dcs/generator.hpp"
#include "dcs/oracles.hpp"
#include "test_util.hpp"

using namespace dcs;

namespace {

// The returned cycle must be a closed walk in the constraint graph: every
// touched vertex is entered and left exactly once.
void check_closed_walk(const System& system, const std::vector<std::uint32_t>& cycle) {
    REQUIRE(!cycle.empty());
    std::map<std::uint32_t, int> degree;  // out minus in, edge j -> i
    for (std::uint32_t p : cycle) {
        REQUIRE(p < system.num_constraints());
        const Constraint& c = system.constraints()[p];
        degree[c.j] += 1;
        degree[c.i] -= 1;
    }
    for (const auto& [vertex, d] : degree) CHECK(d == 0);
}

}  // namespace

TEST_CASE("brute force on tiny instances") {
    SUBCASE("unique feasible assignment") {
        auto result = brute_force(tu::sys(2, {{1, 2, Scalar(-3)}}), tu::dom({Scalar(0), Scalar(5)}));
        CHECK(result.feasible);
        CHECK(result.feasible_count == 1);
        CHECK(result.pointwise_max->values == tu::vals({Scalar(0), Scalar(5)}));
    }
    SUBCASE("unconstrained counts everything") {
        auto result = brute_force(tu::sys(2, {}), tu::dom({Scalar(0), Scalar(1)}));
        CHECK(result.feasible_count == 4);
        CHECK(result.pointwise_max->values == tu::vals({Scalar(1), Scalar(1)}));
    }
    SUBCASE("contradictory pair") {
        auto result = brute_force(tu::sys(2, {{1, 2, Scalar(-3)}, {2, 1, Scalar(-3)}}),
                                  tu::dom({Scalar(0), Scalar(5)}));
        CHECK(!result.feasible);
        CHECK(result.feasible_count == 0);
        CHECK(!result.pointwise_max);
    }
    SUBCASE("no unknowns at all") {
        auto result = brute_force(System(0, {}), tu::dom({Scalar(3)}));
        CHECK(result.feasible);
        CHECK(result.feasible_count == 1);
        CHECK(result.pointwise_max->values.empty());
    }
}

TEST_CASE("brute force cap") {
    System s = tu::sys(30, {});
    Domain d = tu::dom({Scalar(0), Scalar(1)});  // 2^30 > 10^6
    CHECK_THROWS_AS(brute_force(s, d), CapExceeded);
    try {
        brute_force(s, d, 12345);
    } catch (const CapExceeded& e) {
        const std::string msg = e.what();
        CHECK(msg.find("k=2") != std::string::npos);
        CHECK(msg.find("n=30") != std::string::npos);
        CHECK(msg.find("12345") != std::string::npos);
    }
}

TEST_CASE("brute force counts match evaluate") {
    // re-check a sample of enumerated verdicts with the evaluate path
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        GenConfig config;
        config.n = 1 + static_cast<std::uint32_t>(seed % 4);
        config.m = static_cast<std::uint32_t>(seed % 7);
        config.k = 1 + static_cast<std::uint32_t>(seed % 3);
        config.seed = seed * 17;
        config.bound_lo = -3;
        config.bound_hi = 3;
        config.domain_lo = -4;
        config.domain_hi = 4;
        Instance inst = gen_uniform(config);

        auto result = brute_force(inst.system, inst.domain);
        if (result.pointwise_max)
            CHECK(evaluate(inst.system, *result.pointwise_max).violated.empty());

        std::uint64_t recount = 0;
        std::vector<std::uint32_t> pos(config.n, 0);
        for (;;) {
            Assignment a;
            for (std::uint32_t v = 0; v < config.n; ++v) a.values.push_back(inst.domain[pos[v]]);
            if (evaluate(inst.system, a).violated.empty()) ++recount;
            bool wrapped = true;
            for (std::uint32_t v = config.n; v-- > 0;) {
                if (++pos[v] < config.k) {
                    wrapped = false;
                    break;
                }
                pos[v] = 0;
            }
            if (wrapped) break;
        }
        CHECK(result.feasible_count == recount);
    }
}

TEST_CASE("bellman-ford on the worked examples") {
    SUBCASE("real-feasible pair") {
        System s = tu::sys(2, {{1, 2, Scalar(-3)}, {2, 1, Scalar(5)}});
        auto outcome = bellman_ford(s);
        REQUIRE(is_unrestricted_feasible(outcome));
        const Assignment& a = std::get<UnrestrictedFeasible>(outcome).assignment;
        CHECK(evaluate(s, a).violated.empty());
        CHECK(a.values[0] - a.values[1] == Scalar(-3));
    }
    SUBCASE("two-cycle with negative total") {
        System s = tu::sys(2, {{1, 2, Scalar(-3)}, {2, 1, Scalar(-3)}});
        auto outcome = bellman_ford(s);
        REQUIRE(!is_unrestricted_feasible(outcome));
        const auto& infeasible = std::get<UnrestrictedInfeasible>(outcome);
        CHECK(infeasible.cycle_total == Scalar(-6));
        std::vector<std::uint32_t> sorted = infeasible.cycle;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<std::uint32_t>{0, 1});
        check_closed_walk(s, infeasible.cycle);
    }
    SUBCASE("empty system") {
        auto outcome = bellman_ford(tu::sys(3, {}));
        REQUIRE(is_unrestricted_feasible(outcome));
        CHECK(std::get<UnrestrictedFeasible>(outcome).assignment.values ==
              tu::vals({Scalar(0), Scalar(0), Scalar(0)}));
    }
}

TEST_CASE("bellman-ford outcomes are certified") {
    int cycles_seen = 0;
    int feasible_seen = 0;
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        GenConfig config;
        config.n = 1 + static_cast<std::uint32_t>(seed % 8);
        config.m = static_cast<std::uint32_t>((seed * 3) % 16);
        config.k = 2;
        config.seed = seed * 101;
        config.bound_lo = -5;
        config.bound_hi = 5;
        Instance inst = gen_uniform(config);
        CAPTURE(seed);

        auto outcome = bellman_ford(inst.system);
        if (auto* feasible = std::get_if<UnrestrictedFeasible>(&outcome)) {
            ++feasible_seen;
            CHECK(evaluate(inst.system, feasible->assignment).violated.empty());
        } else {
            ++cycles_seen;
            const auto& infeasible = std::get<UnrestrictedInfeasible>(outcome);
            Scalar total(0);
            for (std::uint32_t p : infeasible.cycle) total = total + inst.system.constraints()[p].bound;
            CHECK(total == infeasible.cycle_total);
            CHECK(total < Scalar(0));
            check_closed_walk(inst.system, infeasible.cycle);
        }
    }
    CHECK(cycles_seen > 30);
    CHECK(feasible_seen > 30);
}

TEST_CASE("real infeasibility implies restricted infeasibility") {
    SplitMix64 rng(777);
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        GenConfig config;
        config.n = 2 + static_cast<std::uint32_t>(seed % 5);
        config.m = 4 + static_cast<std::uint32_t>(seed % 10);
        config.k = 2;
        config.seed = seed * 13;
        config.bound_lo = -5;
        config.bound_hi = 3;
        Instance inst = gen_uniform(config);
        if (is_unrestricted_feasible(bellman_ford(inst.system))) continue;

        // any domain whatsoever keeps the system infeasible
        for (int round = 0; round < 3; ++round) {
            GenConfig domain_only;
            domain_only.k = 1 + static_cast<std::uint32_t>(rng.next_below(5));
            domain_only.seed = rng.next();
            domain_only.domain_lo = -30;
            domain_only.domain_hi = 30;
            Instance with_domain = gen_uniform(domain_only);
            auto result = solve_fast(inst.system, with_domain.domain);
            CHECK(!is_feasible(result.outcome));
        }
    }
}
