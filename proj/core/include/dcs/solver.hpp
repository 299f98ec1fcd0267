#ifndef DCS_SOLVER_HPP
#define DCS_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "dcs/rng.hpp"
#include "dcs/system.hpp"

namespace dcs {

// Order in which unknowns leave the worklist. The returned solution is the
// same for every policy; the knob exists to exercise exactly that.
enum class RemovalPolicy { kLifo, kFifo, kRandom };

// Set of unknown indices with O(1) amortized insert, remove-next and
// membership. A per-unknown flag keeps the order container duplicate-free.
class Worklist {
public:
    Worklist(std::uint32_t num_vars, RemovalPolicy policy, std::uint64_t seed = 0)
        : policy_(policy), rng_(seed), member_(num_vars, 0) {}

    void insert(std::uint32_t var) {
        if (member_[var]) return;
        member_[var] = 1;
        items_.push_back(var);
        ++size_;
    }

    // Pre: !empty().
    std::uint32_t remove_next() {
        std::uint32_t var = 0;
        switch (policy_) {
            case RemovalPolicy::kLifo:
                var = items_.back();
                items_.pop_back();
                break;
            case RemovalPolicy::kFifo:
                var = items_[front_++];
                break;
            case RemovalPolicy::kRandom: {
                std::uint64_t pick = rng_.next_below(items_.size());
                std::swap(items_[pick], items_.back());
                var = items_.back();
                items_.pop_back();
                break;
            }
        }
        member_[var] = 0;
        --size_;
        return var;
    }

    bool contains(std::uint32_t var) const { return member_[var] != 0; }
    bool empty() const { return size_ == 0; }
    std::uint32_t size() const { return size_; }

private:
    RemovalPolicy policy_;
    SplitMix64 rng_;
    std::vector<std::uint8_t> member_;
    std::vector<std::uint32_t> items_;
    std::size_t front_ = 0;  // consumed prefix of items_ under kFifo
    std::uint32_t size_ = 0;
};

// Instrumentation for the complexity checks. scans counts every outgoing or
// incoming constraint touched while processing a removal, walk_steps every
// downward move of a per-unknown domain position, updates every completed
// assignment update.
struct SolveStats {
    std::uint64_t removals = 0;
    std::uint64_t scans = 0;
    std::uint64_t walk_steps = 0;
    std::uint64_t updates = 0;
};

// The constraint e_ij whose bound was impossible to satisfy at halt:
// d_1 - s(x_j) > b_ij held with s the solver state at that moment. The
// blocked unknown is constraint.i. position and blocking_value are filled
// by the solvers; outcomes reconstructed from text carry only the
// constraint itself.
struct InfeasibleWitness {
    Constraint constraint;
    std::optional<std::uint32_t> position;
    std::optional<Scalar> blocking_value;
};

struct Feasible {
    Assignment assignment;
};

// Witness is absent for verdicts that are not produced by a run of the
// solver loop (brute force, parsed outcomes).
struct Infeasible {
    std::optional<InfeasibleWitness> witness;
};

using SolveOutcome = std::variant<Feasible, Infeasible>;

inline bool is_feasible(const SolveOutcome& outcome) {
    return std::holds_alternative<Feasible>(outcome);
}

inline const Assignment* feasible_assignment(const SolveOutcome& outcome) {
    auto* f = std::get_if<Feasible>(&outcome);
    return f ? &f->assignment : nullptr;
}

struct SolverOptions {
    RemovalPolicy policy = RemovalPolicy::kLifo;
    std::uint64_t random_seed = 0;  // used by kRandom
    // Re-derives the proof invariants after every iteration (solution stays
    // in D, worklist membership is exact, updates strictly descend, no
    // unknown is removed more than k times). Throws InvariantViolation on
    // failure. O(n + m) per iteration, so testing-only.
    bool debug_invariants = false;
};

struct FastResult {
    SolveOutcome outcome;
    SolveStats stats;
};

// Reference implementation: scan the whole constraint list for the first
// unsatisfied constraint, update, repeat. O(k m n) worst case.
SolveOutcome solve_naive(const System& system, const Domain& domain);

// Worklist implementation running in O(n + k m): only unknowns with some
// unsatisfied outgoing constraint are ever scanned, and each update walks a
// per-unknown domain position monotonically downward.
FastResult solve_fast(const System& system, const Domain& domain, const SolverOptions& options = {});

// As above with a cooperative wall-clock limit, checked once per removal
// (and once per sweep for the naive solver). nullopt when the limit fires.
std::optional<SolveOutcome> solve_naive_limited(const System& system, const Domain& domain,
                                                std::chrono::nanoseconds limit);
std::optional<FastResult> solve_fast_limited(const System& system, const Domain& domain,
                                             const SolverOptions& options, std::chrono::nanoseconds limit);

// min over e_ij in S_i^+ of b_ij + s(x_j): the single bound B that the
// update step maximizes under and the fail check compares against d_1.
// nullopt when S_i^+ is empty.
std::optional<Scalar> compute_bound(std::uint32_t var, const Assignment& assignment, const System& system,
                                    const ConstraintIndex& index);

}  // namespace dcs

#endif
