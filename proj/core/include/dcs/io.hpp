#ifndef DCS_IO_HPP
#define DCS_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcs/solver.hpp"
#include "dcs/system.hpp"

namespace dcs {

// DCS text format:
//   dcs 1
//   vars <n>
//   domain <d_1> ... <d_k>      (strictly increasing)
//   con <i> <j> <b>             (m lines, meaning x_i - x_j <= b, 1-based)
// '#' starts a comment, blank lines are ignored, numbers are decimal or
// "p/q" rational literals. Constraints may precede or follow the domain
// line; vars must precede any con.

struct ParseDiagnostic {
    enum class Severity { kError, kWarning };

    std::uint32_t line = 0;    // 1-based
    std::uint32_t column = 0;  // 1-based
    std::string message;
    Severity severity = Severity::kError;
};

std::string format_diagnostics(const std::vector<ParseDiagnostic>& diagnostics);

struct ParsedInstance {
    System system;
    Domain domain;
};

struct SystemParseResult {
    std::optional<ParsedInstance> instance;  // set iff no error diagnostics
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return instance.has_value(); }
};

SystemParseResult parse_system(std::string_view text);

// Canonical serialization; parse_system round-trips it exactly.
std::string serialize_system(const System& system, const Domain& domain);

// Outcome text format:
//   feasible            |  infeasible
//   x 1 <value>         |  witness <i> <j> <b>   (line absent when no
//   x 2 <value> ...     |  witness constraint is attached)
struct OutcomeParseResult {
    std::optional<SolveOutcome> outcome;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return outcome.has_value(); }
};

OutcomeParseResult parse_outcome(std::string_view text);

std::string serialize_outcome(const SolveOutcome& outcome);

}  // namespace dcs

#endif
