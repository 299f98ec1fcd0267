#include "dcs/system.hpp"

#include <algorithm>
#include <string>

#include "dcs/error.hpp"

namespace dcs {

System::System(std::uint32_t num_vars, std::vector<Constraint> constraints)
    : num_vars_(num_vars), constraints_(std::move(constraints)) {
    for (std::size_t p = 0; p < constraints_.size(); ++p) {
        const Constraint& c = constraints_[p];
        if (c.i >= num_vars_ || c.j >= num_vars_)
            throw Error("System: constraint " + std::to_string(p + 1) + " references an unknown outside [1, " +
                        std::to_string(num_vars_) + "]");
    }
}

Domain::Domain(std::vector<Scalar> values) : values_(std::move(values)) {
    if (values_.empty()) throw Error("Domain: needs at least one value");
    for (std::size_t p = 0; p + 1 < values_.size(); ++p)
        if (!(values_[p] < values_[p + 1]))
            throw Error("Domain: values not strictly increasing at position " + std::to_string(p + 2));
}

bool Domain::contains(const Scalar& v) const {
    auto it = std::lower_bound(values_.begin(), values_.end(), v);
    return it != values_.end() && *it == v;
}

ConstraintIndex build_index(const System& system) {
    const auto& cons = system.constraints();
    const std::uint32_t n = system.num_vars();
    const std::uint32_t m = system.num_constraints();

    ConstraintIndex index;
    index.out_offsets_.assign(n + 1, 0);
    index.in_offsets_.assign(n + 1, 0);
    for (const Constraint& c : cons) {
        ++index.out_offsets_[c.i + 1];
        ++index.in_offsets_[c.j + 1];
    }
    for (std::uint32_t v = 0; v < n; ++v) {
        index.out_offsets_[v + 1] += index.out_offsets_[v];
        index.in_offsets_[v + 1] += index.in_offsets_[v];
    }
    index.out_positions_.resize(m);
    index.in_positions_.resize(m);
    std::vector<std::uint32_t> out_cursor(index.out_offsets_.begin(), index.out_offsets_.end() - 1);
    std::vector<std::uint32_t> in_cursor(index.in_offsets_.begin(), index.in_offsets_.end() - 1);
    for (std::uint32_t p = 0; p < m; ++p) {
        index.out_positions_[out_cursor[cons[p].i]++] = p;
        index.in_positions_[in_cursor[cons[p].j]++] = p;
    }
    return index;
}

ViolationReport evaluate(const System& system, const Assignment& assignment) {
    if (assignment.size() != system.num_vars())
        throw Error("evaluate: assignment covers " + std::to_string(assignment.size()) + " unknowns, system has " +
                    std::to_string(system.num_vars()));
    ViolationReport report;
    const auto& cons = system.constraints();
    for (std::uint32_t p = 0; p < cons.size(); ++p) {
        if (assignment.values[cons[p].i] - assignment.values[cons[p].j] > cons[p].bound)
            report.violated.push_back(p);
        else
            ++report.satisfied_count;
    }
    return report;
}

std::optional<std::uint32_t> domain_predecessor(const Domain& domain, const Scalar& bound) {
    auto vals = domain.values();
    auto it = std::upper_bound(vals.begin(), vals.end(), bound);
    if (it == vals.begin()) return std::nullopt;
    return static_cast<std::uint32_t>(it - vals.begin() - 1);
}

}  // namespace dcs
