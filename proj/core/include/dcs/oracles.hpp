#ifndef DCS_ORACLES_HPP
#define DCS_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "dcs/solver.hpp"
#include "dcs/system.hpp"

namespace dcs {

// Ground truth by exhaustive enumeration over D^n. pointwise_max is the
// coordinatewise maximum over all feasible assignments; the solvers must
// return exactly it (and it must itself be feasible, which tests check
// rather than assume).
struct BruteForceResult {
    bool feasible = false;
    std::uint64_t feasible_count = 0;
    std::optional<Assignment> pointwise_max;
};

inline constexpr std::uint64_t kDefaultBruteForceCap = 1'000'000;

// Enumerates all k^n assignments in row-major order (last unknown varies
// fastest). Throws CapExceeded when k^n > cap.
BruteForceResult brute_force(const System& system, const Domain& domain,
                             std::uint64_t cap = kDefaultBruteForceCap);

struct UnrestrictedFeasible {
    Assignment assignment;  // real-valued potentials, not restricted to any domain
};

struct UnrestrictedInfeasible {
    std::vector<std::uint32_t> cycle;  // constraint positions forming a closed walk
    Scalar cycle_total;                // sum of their bounds, strictly negative
};

using UnrestrictedOutcome = std::variant<UnrestrictedFeasible, UnrestrictedInfeasible>;

inline bool is_unrestricted_feasible(const UnrestrictedOutcome& o) {
    return std::holds_alternative<UnrestrictedFeasible>(o);
}

// Bellman-Ford over the constraint graph (edge j -> i with weight b_ij,
// virtual source folded into the all-zero initial potentials). Returns
// shortest-path potentials or a negative cycle as constraint positions.
UnrestrictedOutcome bellman_ford(const System& system);

}  // namespace dcs

#endif
