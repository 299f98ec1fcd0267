#include "dcs/generator.hpp"

#include <set>
#include <string>

#include "dcs/error.hpp"

namespace dcs {

namespace {

// k distinct sorted values from [lo, hi]; rejection sampling keeps the
// stream layout independent of the range size.
std::vector<Scalar> draw_domain(SplitMix64& rng, std::uint32_t k, std::int64_t lo, std::int64_t hi) {
    std::set<std::int64_t> seen;
    while (seen.size() < k) seen.insert(rng.next_in(lo, hi));
    std::vector<Scalar> values;
    values.reserve(k);
    for (std::int64_t v : seen) values.push_back(Scalar(v));
    return values;
}

// Uniform j != i from [0, n); n >= 2.
std::uint32_t draw_other(SplitMix64& rng, std::uint32_t n, std::uint32_t i) {
    std::uint32_t j = static_cast<std::uint32_t>(rng.next_below(n - 1));
    return j + (j >= i ? 1 : 0);
}

}  // namespace

std::string_view family_name(Family family) {
    switch (family) {
        case Family::kUniform: return "uniform";
        case Family::kPlanted: return "planted";
        case Family::kRestrictedInfeasible: return "restricted-infeasible";
    }
    return "unknown";
}

void validate(const GenConfig& config) {
    if (config.n < 1) throw Error("gen: n must be >= 1");
    if (config.k < 1) throw Error("gen: k must be >= 1");
    if (config.bound_lo > config.bound_hi) throw Error("gen: empty bound range");
    if (config.domain_lo > config.domain_hi) throw Error("gen: empty domain range");
    if (config.slack_max < 0) throw Error("gen: slack_max must be >= 0");

    // Range width as u64 sidesteps overflow on extreme ranges; 0 encodes 2^64.
    std::uint64_t width = static_cast<std::uint64_t>(config.domain_hi) -
                          static_cast<std::uint64_t>(config.domain_lo) + 1;
    if (width != 0 && width < config.k)
        throw Error("gen: cannot draw " + std::to_string(config.k) + " distinct domain values from a range of " +
                    std::to_string(width));

    if (config.family == Family::kPlanted && config.m > 0 && config.n < 2)
        throw Error("gen: planted family needs n >= 2 to avoid self-loops");
    if (config.family == Family::kRestrictedInfeasible && (config.n < 2 || config.m < 2 || config.k < 2))
        throw Error("gen: restricted-infeasible family needs n >= 2, m >= 2, k >= 2");
}

Instance gen_uniform(const GenConfig& config) {
    validate(config);
    SplitMix64 rng(config.seed);
    Domain domain(draw_domain(rng, config.k, config.domain_lo, config.domain_hi));

    std::vector<Constraint> constraints;
    constraints.reserve(config.m);
    for (std::uint32_t c = 0; c < config.m; ++c) {
        std::uint32_t i = static_cast<std::uint32_t>(rng.next_below(config.n));
        std::uint32_t j = static_cast<std::uint32_t>(rng.next_below(config.n));
        Scalar b(rng.next_in(config.bound_lo, config.bound_hi));
        constraints.push_back(Constraint{i, j, std::move(b)});
    }
    return Instance{System(config.n, std::move(constraints)), std::move(domain)};
}

PlantedInstance gen_planted(const GenConfig& config) {
    validate(config);
    SplitMix64 rng(config.seed);
    Domain domain(draw_domain(rng, config.k, config.domain_lo, config.domain_hi));

    std::vector<std::uint32_t> secret(config.n);
    for (std::uint32_t v = 0; v < config.n; ++v)
        secret[v] = static_cast<std::uint32_t>(rng.next_below(config.k));

    std::vector<Constraint> constraints;
    constraints.reserve(config.m);
    for (std::uint32_t c = 0; c < config.m; ++c) {
        std::uint32_t i = static_cast<std::uint32_t>(rng.next_below(config.n));
        std::uint32_t j = draw_other(rng, config.n, i);
        Scalar slack(rng.next_in(0, config.slack_max));
        Scalar b = domain[secret[i]] - domain[secret[j]] + slack;
        constraints.push_back(Constraint{i, j, std::move(b)});
    }

    Assignment planted;
    planted.values.reserve(config.n);
    for (std::uint32_t v = 0; v < config.n; ++v) planted.values.push_back(domain[secret[v]]);
    planted.domain_positions = std::move(secret);
    return PlantedInstance{System(config.n, std::move(constraints)), std::move(domain), std::move(planted)};
}

Instance gen_restricted_infeasible(const GenConfig& config) {
    validate(config);
    SplitMix64 rng(config.seed);
    Domain domain(draw_domain(rng, config.k, config.domain_lo, config.domain_hi));

    // Narrowest gap between consecutive domain values.
    Scalar gap = domain[1] - domain[0];
    for (std::uint32_t p = 1; p + 1 < domain.size(); ++p) {
        Scalar g = domain[p + 1] - domain[p];
        if (g < gap) gap = std::move(g);
    }

    // Force x_2 - x_1 into [gap/3, 2 gap/3]: a nonempty real interval that
    // contains no difference of two domain values (every positive
    // difference is at least gap).
    Scalar lo_bound = gap / Scalar(3);
    Scalar hi_bound = lo_bound + lo_bound;
    std::vector<Constraint> constraints;
    constraints.reserve(config.m);
    constraints.push_back(Constraint{0, 1, -lo_bound});  // x_1 - x_2 <= -gap/3
    constraints.push_back(Constraint{1, 0, hi_bound});   // x_2 - x_1 <= 2 gap/3

    // Hidden real solution: the gadget pair sits inside the forced gap,
    // everything else is an integer draw. Padding keeps it feasible.
    std::vector<Scalar> hidden(config.n);
    hidden[0] = Scalar(0);
    hidden[1] = lo_bound;
    for (std::uint32_t v = 2; v < config.n; ++v)
        hidden[v] = Scalar(rng.next_in(config.domain_lo, config.domain_hi));

    for (std::uint32_t c = 2; c < config.m; ++c) {
        std::uint32_t i = static_cast<std::uint32_t>(rng.next_below(config.n));
        std::uint32_t j = draw_other(rng, config.n, i);
        Scalar slack(rng.next_in(0, config.slack_max));
        constraints.push_back(Constraint{i, j, hidden[i] - hidden[j] + slack});
    }
    return Instance{System(config.n, std::move(constraints)), std::move(domain)};
}

Instance generate(const GenConfig& config) {
    switch (config.family) {
        case Family::kUniform: return gen_uniform(config);
        case Family::kPlanted: {
            PlantedInstance planted = gen_planted(config);
            return Instance{std::move(planted.system), std::move(planted.domain)};
        }
        case Family::kRestrictedInfeasible: return gen_restricted_infeasible(config);
    }
    throw Error("gen: unknown family");
}

}  // namespace dcs
