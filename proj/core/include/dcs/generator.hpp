#ifndef DCS_GENERATOR_HPP
#define DCS_GENERATOR_HPP

#include <cstdint>
#include <string_view>

#include "dcs/rng.hpp"
#include "dcs/system.hpp"

namespace dcs {

enum class Family { kUniform, kPlanted, kRestrictedInfeasible };

std::string_view family_name(Family family);

// Seeded instance description. Identical configs produce byte-identical
// instances on every platform (the SplitMix64 stream is pinned, and so is
// the draw order documented on each generator).
struct GenConfig {
    Family family = Family::kUniform;
    std::uint32_t n = 1;
    std::uint32_t m = 0;
    std::uint32_t k = 1;
    std::uint64_t seed = 0;
    std::int64_t bound_lo = -10;  // inclusive bound range, uniform family
    std::int64_t bound_hi = 10;
    std::int64_t domain_lo = 0;  // domain values are drawn here
    std::int64_t domain_hi = 100;
    std::int64_t slack_max = 10;  // planted / padding slack in [0, slack_max]
};

// Throws Error when the config cannot produce an instance (counts of zero,
// empty ranges, fewer range values than k, or a family-specific minimum).
void validate(const GenConfig& config);

struct Instance {
    System system;
    Domain domain;
};

struct PlantedInstance {
    System system;
    Domain domain;
    Assignment planted;  // feasible by construction
};

// m constraints with uniform endpoints (self-loops allowed) and uniform
// integer bounds. Draw order: domain values, then per constraint i, j, b.
Instance gen_uniform(const GenConfig& config);

// Hides a secret assignment s* and emits only constraints that s*
// satisfies with nonnegative slack, so the instance is always feasible.
// Self-loops are avoided. Draw order: domain, s* positions, then per
// constraint i, j, slack.
PlantedInstance gen_planted(const GenConfig& config);

// Feasible over the reals, infeasible restricted to the domain: a
// two-unknown gadget forces x_2 - x_1 into a gap strictly between two
// consecutive domain values, and the remaining m - 2 constraints are
// slack padding around a hidden real-valued solution.
Instance gen_restricted_infeasible(const GenConfig& config);

// Dispatch on config.family; planted drops the secret assignment.
Instance generate(const GenConfig& config);

}  // namespace dcs

#endif
