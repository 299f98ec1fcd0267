#include "dcs/solver.hpp"

#include <string>

#include "dcs/error.hpp"

namespace dcs {

namespace {

using Clock = std::chrono::steady_clock;

Assignment materialize(const Domain& domain, std::vector<std::uint32_t> positions) {
    Assignment a;
    a.values.reserve(positions.size());
    for (std::uint32_t p : positions) a.values.push_back(domain[p]);
    a.domain_positions = std::move(positions);
    return a;
}

[[noreturn]] void invariant_failed(const char* what) {
    throw InvariantViolation(std::string("solver invariant violated: ") + what);
}

// Debug-mode re-derivation of the loop invariants. Separate from the solver
// proper so the production path stays branch-light.
class InvariantChecker {
public:
    InvariantChecker(const System& system, const Domain& domain, const ConstraintIndex& index)
        : system_(system), domain_(domain), index_(index), removal_counts_(system.num_vars(), 0) {}

    void on_removal(std::uint32_t var) {
        if (++removal_counts_[var] > domain_.size())
            invariant_failed("an unknown was removed from the worklist more than k times");
    }

    void on_update(std::uint32_t old_pos, std::uint32_t new_pos) {
        if (new_pos >= old_pos)
            invariant_failed("update did not strictly decrease the assigned value");
    }

    // Checked before every loop-condition evaluation: the assignment maps
    // into D and the worklist holds exactly the unknowns with an
    // unsatisfied outgoing constraint.
    void before_loop_condition(const std::vector<std::uint32_t>& pos, const Worklist& worklist) {
        const auto& cons = system_.constraints();
        for (std::uint32_t v = 0; v < system_.num_vars(); ++v) {
            if (pos[v] >= domain_.size())
                invariant_failed("assignment left the domain");
            bool unsatisfied = false;
            for (std::uint32_t c : index_.outgoing(v)) {
                if (domain_[pos[cons[c].i]] - domain_[pos[cons[c].j]] > cons[c].bound) {
                    unsatisfied = true;
                    break;
                }
            }
            if (unsatisfied != worklist.contains(v))
                invariant_failed(unsatisfied ? "unknown with unsatisfied constraint missing from worklist"
                                             : "worklist holds an unknown whose constraints are all satisfied");
        }
    }

private:
    const System& system_;
    const Domain& domain_;
    const ConstraintIndex& index_;
    std::vector<std::uint32_t> removal_counts_;
};

std::optional<FastResult> run_fast(const System& system, const Domain& domain, const SolverOptions& options,
                                   std::optional<Clock::time_point> deadline) {
    const auto& cons = system.constraints();
    const std::uint32_t n = system.num_vars();
    const std::uint32_t top = domain.size() - 1;
    const Scalar& lowest = domain.min();

    ConstraintIndex index = build_index(system);
    std::vector<std::uint32_t> pos(n, top);
    Worklist worklist(n, options.policy, options.random_seed);
    SolveStats stats;

    // With every unknown at d_k, constraint e_ij is unsatisfied iff
    // d_k - d_k > b_ij, so the initial worklist is {i | some b_ij < 0}.
    const Scalar zero(0);
    for (std::uint32_t p = 0; p < cons.size(); ++p)
        if (cons[p].bound < zero) worklist.insert(cons[p].i);

    std::optional<InvariantChecker> checker;
    if (options.debug_invariants) {
        checker.emplace(system, domain, index);
        checker->before_loop_condition(pos, worklist);
    }

    while (!worklist.empty()) {
        if (deadline && Clock::now() >= *deadline) return std::nullopt;
        const std::uint32_t var = worklist.remove_next();
        ++stats.removals;
        if (checker) checker->on_removal(var);

        // B := min over e_ij in S_i^+ of b_ij + s(x_j); ties keep the first
        // minimizer so the infeasibility witness is deterministic.
        std::optional<Scalar> bound;
        std::uint32_t bound_pos = 0;
        for (std::uint32_t c : index.outgoing(var)) {
            ++stats.scans;
            Scalar candidate = cons[c].bound + domain[pos[cons[c].j]];
            if (!bound || candidate < *bound) {
                bound = std::move(candidate);
                bound_pos = c;
            }
        }
        // An unknown enters the worklist only through an unsatisfied
        // outgoing constraint, so S_var^+ is nonempty here.
        if (!bound) invariant_failed("worklist held an unknown with no outgoing constraints");

        if (*bound < lowest) {
            Infeasible infeasible;
            infeasible.witness = InfeasibleWitness{cons[bound_pos], bound_pos, domain[pos[cons[bound_pos].j]]};
            return FastResult{SolveOutcome(std::move(infeasible)), stats};
        }

        // s(x_var) := max{d in D | d <= B}, found by walking the position
        // downward from its current value. The walk telescopes to at most
        // k - 1 steps per unknown over the whole run.
        std::uint32_t p = pos[var];
        while (domain[p] > *bound) {
            --p;
            ++stats.walk_steps;
        }
        if (checker) checker->on_update(pos[var], p);
        pos[var] = p;
        ++stats.updates;

        // Only constraints e_jv with x_var on the right can have become
        // unsatisfied; re-queue their left unknowns.
        for (std::uint32_t c : index.incoming(var)) {
            ++stats.scans;
            const Constraint& e = cons[c];
            if (domain[pos[e.i]] - domain[pos[e.j]] > e.bound) worklist.insert(e.i);
        }

        if (checker) checker->before_loop_condition(pos, worklist);
    }

    return FastResult{SolveOutcome(Feasible{materialize(domain, std::move(pos))}), stats};
}

std::optional<SolveOutcome> run_naive(const System& system, const Domain& domain,
                                      std::optional<Clock::time_point> deadline) {
    const auto& cons = system.constraints();
    const std::uint32_t n = system.num_vars();
    const std::uint32_t top = domain.size() - 1;

    std::vector<std::uint32_t> pos(n, top);
    for (;;) {
        if (deadline && Clock::now() >= *deadline) return std::nullopt;
        const Constraint* unsatisfied = nullptr;
        std::uint32_t unsatisfied_pos = 0;
        for (std::uint32_t p = 0; p < cons.size(); ++p) {
            if (domain[pos[cons[p].i]] - domain[pos[cons[p].j]] > cons[p].bound) {
                unsatisfied = &cons[p];
                unsatisfied_pos = p;
                break;
            }
        }
        if (!unsatisfied) return SolveOutcome(Feasible{materialize(domain, std::move(pos))});

        const Scalar blocking = domain[pos[unsatisfied->j]];
        const Scalar bound = unsatisfied->bound + blocking;
        auto predecessor = domain_predecessor(domain, bound);
        if (!predecessor) {  // d_1 - s(x_j) > b_ij
            Infeasible infeasible;
            infeasible.witness = InfeasibleWitness{*unsatisfied, unsatisfied_pos, blocking};
            return SolveOutcome(std::move(infeasible));
        }
        pos[unsatisfied->i] = *predecessor;
    }
}

}  // namespace

SolveOutcome solve_naive(const System& system, const Domain& domain) {
    return *run_naive(system, domain, std::nullopt);
}

FastResult solve_fast(const System& system, const Domain& domain, const SolverOptions& options) {
    return *run_fast(system, domain, options, std::nullopt);
}

std::optional<SolveOutcome> solve_naive_limited(const System& system, const Domain& domain,
                                                std::chrono::nanoseconds limit) {
    return run_naive(system, domain, Clock::now() + limit);
}

std::optional<FastResult> solve_fast_limited(const System& system, const Domain& domain,
                                             const SolverOptions& options, std::chrono::nanoseconds limit) {
    return run_fast(system, domain, options, Clock::now() + limit);
}

std::optional<Scalar> compute_bound(std::uint32_t var, const Assignment& assignment, const System& system,
                                    const ConstraintIndex& index) {
    const auto& cons = system.constraints();
    std::optional<Scalar> bound;
    for (std::uint32_t c : index.outgoing(var)) {
        Scalar candidate = cons[c].bound + assignment.values[cons[c].j];
        if (!bound || candidate < *bound) bound = std::move(candidate);
    }
    return bound;
}

}  // namespace dcs
