#include "dcs/oracles.hpp"

#include <algorithm>
#include <string>

#include "dcs/error.hpp"

namespace dcs {

namespace {

// k^n, or nullopt once it exceeds cap.
std::optional<std::uint64_t> checked_pow(std::uint64_t k, std::uint32_t n, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (total > cap / k) return std::nullopt;
        total *= k;
    }
    if (total > cap) return std::nullopt;
    return total;
}

bool satisfies_all(const System& system, const Domain& domain, const std::vector<std::uint32_t>& pos) {
    for (const Constraint& c : system.constraints())
        if (domain[pos[c.i]] - domain[pos[c.j]] > c.bound) return false;
    return true;
}

}  // namespace

BruteForceResult brute_force(const System& system, const Domain& domain, std::uint64_t cap) {
    const std::uint32_t n = system.num_vars();
    const std::uint32_t k = domain.size();
    if (!checked_pow(k, n, cap))
        throw CapExceeded("brute_force: k^n exceeds the cap (k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                          ", cap=" + std::to_string(cap) + ")");

    BruteForceResult result;
    std::vector<std::uint32_t> pos(n, 0);
    std::vector<std::uint32_t> best;
    for (;;) {
        if (satisfies_all(system, domain, pos)) {
            ++result.feasible_count;
            if (best.empty() && n > 0)
                best = pos;
            else
                for (std::uint32_t v = 0; v < n; ++v) best[v] = std::max(best[v], pos[v]);
        }
        // Row-major odometer: the last unknown varies fastest.
        bool wrapped = true;
        for (std::uint32_t v = n; v-- > 0;) {
            if (++pos[v] < k) {
                wrapped = false;
                break;
            }
            pos[v] = 0;
        }
        if (wrapped) break;
    }

    result.feasible = result.feasible_count > 0;
    if (result.feasible) {
        Assignment a;
        a.values.reserve(n);
        for (std::uint32_t v = 0; v < n; ++v) a.values.push_back(domain[best[v]]);
        a.domain_positions = std::move(best);
        result.pointwise_max = std::move(a);
    }
    return result;
}

UnrestrictedOutcome bellman_ford(const System& system) {
    const auto& cons = system.constraints();
    const std::uint32_t n = system.num_vars();

    // All-zero start is the virtual-source formulation: every unknown is
    // reachable at cost 0, so disconnected unknowns still get potentials.
    std::vector<Scalar> dist(n, Scalar(0));
    struct Pred {
        std::uint32_t var = 0;
        std::uint32_t constraint = 0;
        bool set = false;
    };
    std::vector<Pred> pred(n);

    auto relax_round = [&]() {
        bool changed = false;
        for (std::uint32_t p = 0; p < cons.size(); ++p) {
            const Constraint& e = cons[p];  // edge e.j -> e.i, weight bound
            Scalar candidate = dist[e.j] + e.bound;
            if (candidate < dist[e.i]) {
                dist[e.i] = std::move(candidate);
                pred[e.i] = Pred{e.j, p, true};
                changed = true;
            }
        }
        return changed;
    };

    // Scans the predecessor graph (a functional graph) for a cycle whose
    // bounds sum strictly negative. The sum check keeps the outcome sound
    // even while predecessors are still churning.
    auto extract_cycle = [&]() -> std::optional<UnrestrictedInfeasible> {
        std::vector<std::uint32_t> stamp(n, 0);
        std::uint32_t run = 0;
        for (std::uint32_t start = 0; start < n; ++start) {
            if (stamp[start] != 0) continue;
            ++run;
            std::uint32_t v = start;
            while (pred[v].set && stamp[v] == 0) {
                stamp[v] = run;
                v = pred[v].var;
            }
            if (!pred[v].set || stamp[v] != run) continue;  // dead end or an older walk
            // v closes a cycle in this run's walk; collect its edges.
            std::vector<std::uint32_t> cycle;
            Scalar total(0);
            std::uint32_t w = v;
            do {
                cycle.push_back(pred[w].constraint);
                total = total + cons[pred[w].constraint].bound;
                w = pred[w].var;
            } while (w != v);
            if (total < Scalar(0)) return UnrestrictedInfeasible{std::move(cycle), std::move(total)};
        }
        return std::nullopt;
    };

    // n rounds settle every shortest walk when no negative cycle exists.
    // When one does, a few extra rounds let the predecessor graph converge
    // onto it; the cap is generous and never reached in practice.
    const std::uint64_t max_rounds = 3 * static_cast<std::uint64_t>(n) + 8;
    for (std::uint64_t round = 1; round <= max_rounds; ++round) {
        if (!relax_round()) {
            Assignment a;
            a.values = std::move(dist);
            return UnrestrictedFeasible{std::move(a)};
        }
        if (round >= n) {
            if (auto cycle = extract_cycle()) return std::move(*cycle);
        }
    }
    throw Error("bellman_ford: failed to extract a negative cycle");
}

}  // namespace dcs
