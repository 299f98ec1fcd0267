#ifndef DCS_SYSTEM_HPP
#define DCS_SYSTEM_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dcs/scalar.hpp"

namespace dcs {

// All indices are 0-based in memory. The text formats and every CLI surface
// speak 1-based, matching the usual x_1..x_n convention; the conversion
// happens in io.

// One difference constraint x_i - x_j <= bound. Self-loops (i == j) are
// legal and kept verbatim, as are duplicates.
struct Constraint {
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    Scalar bound;

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

class System {
public:
    System() = default;
    // Validates that every constraint index is < num_vars; throws Error.
    System(std::uint32_t num_vars, std::vector<Constraint> constraints);

    std::uint32_t num_vars() const { return num_vars_; }
    std::uint32_t num_constraints() const { return static_cast<std::uint32_t>(constraints_.size()); }
    const std::vector<Constraint>& constraints() const { return constraints_; }

private:
    std::uint32_t num_vars_ = 0;
    std::vector<Constraint> constraints_;
};

// Strictly increasing, nonempty list of allowed values d_1 < ... < d_k.
class Domain {
public:
    // Validates strict increase and k >= 1; throws Error.
    explicit Domain(std::vector<Scalar> values);

    std::uint32_t size() const { return static_cast<std::uint32_t>(values_.size()); }
    std::span<const Scalar> values() const { return values_; }
    const Scalar& operator[](std::uint32_t pos) const { return values_[pos]; }
    const Scalar& min() const { return values_.front(); }
    const Scalar& max() const { return values_.back(); }
    bool contains(const Scalar& v) const;

private:
    std::vector<Scalar> values_;
};

// Total map from unknowns to values. domain_positions is set whenever the
// assignment is known to be domain-restricted; values[v] then equals
// domain[domain_positions[v]]. Equality compares values only.
struct Assignment {
    std::vector<Scalar> values;
    std::optional<std::vector<std::uint32_t>> domain_positions;

    std::uint32_t size() const { return static_cast<std::uint32_t>(values.size()); }

    friend bool operator==(const Assignment& a, const Assignment& b) {
        return a.values == b.values;
    }
};

// Per-unknown constraint adjacency in CSR form. outgoing(i) lists the
// positions of constraints with first index i (S_i^+), incoming(i) those
// with second index i (S_i^-), both in input order. A self-loop shows up
// in both lists.
class ConstraintIndex {
public:
    std::span<const std::uint32_t> outgoing(std::uint32_t var) const {
        return {out_positions_.data() + out_offsets_[var],
                out_positions_.data() + out_offsets_[var + 1]};
    }
    std::span<const std::uint32_t> incoming(std::uint32_t var) const {
        return {in_positions_.data() + in_offsets_[var],
                in_positions_.data() + in_offsets_[var + 1]};
    }

private:
    friend ConstraintIndex build_index(const System& system);

    std::vector<std::uint32_t> out_offsets_, out_positions_;
    std::vector<std::uint32_t> in_offsets_, in_positions_;
};

struct ViolationReport {
    std::vector<std::uint32_t> violated;  // constraint positions, input order
    std::uint64_t satisfied_count = 0;
};

// Builds the S^+/S^- adjacency in O(n + m).
ConstraintIndex build_index(const System& system);

// Exact check of every constraint: position p is violated iff
// s(x_i) - s(x_j) > b. Throws Error if the assignment is not total.
ViolationReport evaluate(const System& system, const Assignment& assignment);

// Largest position p with domain[p] <= bound, or nullopt when even d_1
// exceeds the bound (the infeasibility situation upstream).
std::optional<std::uint32_t> domain_predecessor(const Domain& domain, const Scalar& bound);

}  // namespace dcs

#endif
