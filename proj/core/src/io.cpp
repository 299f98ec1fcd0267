#include "dcs/io.hpp"

#include <sstream>

#include "line_tokens.hpp"

namespace dcs {

using detail::Diagnostics;
using detail::Line;
using detail::Token;

namespace {

// 1-based unknown index in [1, n]; reports and returns nullopt otherwise.
std::optional<std::uint32_t> parse_index(const Token& token, std::uint32_t n, std::uint32_t line,
                                         Diagnostics& diags) {
    auto value = detail::parse_unsigned(token.text);
    if (!value || *value == 0 || *value > n) {
        diags.error(line, token.column,
                    "index " + std::string(token.text) + " out of range [1, " + std::to_string(n) + "]");
        return std::nullopt;
    }
    return static_cast<std::uint32_t>(*value - 1);
}

std::optional<Scalar> parse_scalar(const Token& token, std::uint32_t line, Diagnostics& diags) {
    auto value = Scalar::parse(token.text);
    if (!value) diags.error(line, token.column, "malformed number '" + std::string(token.text) + "'");
    return value;
}

}  // namespace

std::string format_diagnostics(const std::vector<ParseDiagnostic>& diagnostics) {
    std::ostringstream out;
    for (const auto& d : diagnostics) {
        out << "line " << d.line << ", col " << d.column << ": "
            << (d.severity == ParseDiagnostic::Severity::kError ? "error" : "warning") << ": " << d.message << "\n";
    }
    return out.str();
}

SystemParseResult parse_system(std::string_view text) {
    Diagnostics diags;
    std::vector<Line> lines = detail::tokenize(text);

    if (lines.empty()) {
        diags.error(1, 1, "empty input, expected header 'dcs 1'");
        return {std::nullopt, diags.take()};
    }

    std::size_t cursor = 0;
    const Line& header = lines[0];
    if (header.tokens[0].text == "dcs") {
        ++cursor;
        if (header.tokens.size() != 2 || header.tokens[1].text != "1")
            diags.error(header.number, header.tokens[0].column, "unsupported version, expected 'dcs 1'");
    } else {
        diags.error(header.number, header.tokens[0].column, "expected header 'dcs 1'");
    }

    std::optional<std::uint32_t> num_vars;
    std::optional<std::vector<Scalar>> domain_values;
    bool saw_domain = false;
    std::vector<Constraint> constraints;

    for (; cursor < lines.size(); ++cursor) {
        const Line& line = lines[cursor];
        const Token& directive = line.tokens[0];

        if (directive.text == "vars") {
            if (num_vars) {
                diags.error(line.number, directive.column, "duplicate 'vars' directive");
                continue;
            }
            if (line.tokens.size() != 2) {
                diags.error(line.number, directive.column, "'vars' expects exactly one count");
                continue;
            }
            auto n = detail::parse_unsigned(line.tokens[1].text);
            if (!n || *n > 0xFFFFFFFFull) {
                diags.error(line.number, line.tokens[1].column,
                            "malformed unknown count '" + std::string(line.tokens[1].text) + "'");
                continue;
            }
            num_vars = static_cast<std::uint32_t>(*n);
        } else if (directive.text == "domain") {
            if (saw_domain) {
                diags.error(line.number, directive.column, "duplicate 'domain' directive");
                continue;
            }
            saw_domain = true;
            std::vector<Scalar> values;
            bool bad = false;
            for (std::size_t t = 1; t < line.tokens.size(); ++t) {
                auto v = parse_scalar(line.tokens[t], line.number, diags);
                if (!v) {
                    bad = true;
                    continue;
                }
                values.push_back(std::move(*v));
            }
            if (values.empty() && !bad) {
                diags.error(line.number, directive.column, "domain needs at least one value");
                continue;
            }
            for (std::size_t t = 0; t + 1 < values.size(); ++t) {
                if (!(values[t] < values[t + 1])) {
                    diags.error(line.number, directive.column, "domain not strictly increasing");
                    bad = true;
                    break;
                }
            }
            if (!bad) domain_values = std::move(values);
        } else if (directive.text == "con") {
            if (!num_vars) {
                diags.error(line.number, directive.column, "'con' before 'vars'");
                continue;
            }
            if (line.tokens.size() != 4) {
                diags.error(line.number, directive.column, "'con' expects <i> <j> <b>");
                continue;
            }
            auto i = parse_index(line.tokens[1], *num_vars, line.number, diags);
            auto j = parse_index(line.tokens[2], *num_vars, line.number, diags);
            auto b = parse_scalar(line.tokens[3], line.number, diags);
            if (i && j && b) constraints.push_back(Constraint{*i, *j, std::move(*b)});
        } else {
            diags.error(line.number, directive.column, "unknown directive '" + std::string(directive.text) + "'");
        }
    }

    const std::uint32_t last_line = lines.back().number;
    if (!num_vars) diags.error(last_line, 1, "missing 'vars' directive");
    if (!saw_domain) diags.error(last_line, 1, "missing 'domain' directive");

    if (!diags.clean()) return {std::nullopt, diags.take()};
    return {ParsedInstance{System(*num_vars, std::move(constraints)), Domain(std::move(*domain_values))},
            diags.take()};
}

std::string serialize_system(const System& system, const Domain& domain) {
    std::ostringstream out;
    out << "dcs 1\n";
    out << "vars " << system.num_vars() << "\n";
    out << "domain";
    for (const Scalar& v : domain.values()) out << ' ' << v.str();
    out << "\n";
    for (const Constraint& c : system.constraints())
        out << "con " << c.i + 1 << ' ' << c.j + 1 << ' ' << c.bound.str() << "\n";
    return out.str();
}

OutcomeParseResult parse_outcome(std::string_view text) {
    Diagnostics diags;
    std::vector<Line> lines = detail::tokenize(text);

    if (lines.empty()) {
        diags.error(1, 1, "empty input, expected 'feasible' or 'infeasible'");
        return {std::nullopt, diags.take()};
    }

    const Line& head = lines[0];
    const bool feasible = head.tokens[0].text == "feasible";
    if (head.tokens.size() != 1 || (!feasible && head.tokens[0].text != "infeasible")) {
        diags.error(head.number, head.tokens[0].column, "expected 'feasible' or 'infeasible'");
        return {std::nullopt, diags.take()};
    }

    if (feasible) {
        Assignment assignment;
        for (std::size_t cursor = 1; cursor < lines.size(); ++cursor) {
            const Line& line = lines[cursor];
            if (line.tokens[0].text != "x" || line.tokens.size() != 3) {
                diags.error(line.number, line.tokens[0].column, "expected 'x <index> <value>'");
                continue;
            }
            auto idx = detail::parse_unsigned(line.tokens[1].text);
            if (!idx || *idx != assignment.values.size() + 1) {
                diags.error(line.number, line.tokens[1].column,
                            "expected unknown " + std::to_string(assignment.values.size() + 1) + ", got '" +
                                std::string(line.tokens[1].text) + "'");
                continue;
            }
            auto value = parse_scalar(line.tokens[2], line.number, diags);
            if (value) assignment.values.push_back(std::move(*value));
        }
        if (!diags.clean()) return {std::nullopt, diags.take()};
        return {SolveOutcome(Feasible{std::move(assignment)}), diags.take()};
    }

    Infeasible infeasible;
    for (std::size_t cursor = 1; cursor < lines.size(); ++cursor) {
        const Line& line = lines[cursor];
        if (line.tokens[0].text != "witness" || line.tokens.size() != 4) {
            diags.error(line.number, line.tokens[0].column, "expected 'witness <i> <j> <b>'");
            continue;
        }
        if (infeasible.witness) {
            diags.error(line.number, line.tokens[0].column, "duplicate 'witness' line");
            continue;
        }
        auto i = detail::parse_unsigned(line.tokens[1].text);
        auto j = detail::parse_unsigned(line.tokens[2].text);
        auto b = parse_scalar(line.tokens[3], line.number, diags);
        if (!i || *i == 0 || *i > 0xFFFFFFFFull || !j || *j == 0 || *j > 0xFFFFFFFFull) {
            diags.error(line.number, line.tokens[1].column, "malformed witness indices");
            continue;
        }
        if (b)
            infeasible.witness = InfeasibleWitness{
                Constraint{static_cast<std::uint32_t>(*i - 1), static_cast<std::uint32_t>(*j - 1), std::move(*b)},
                std::nullopt, std::nullopt};
    }
    if (!diags.clean()) return {std::nullopt, diags.take()};
    return {SolveOutcome(std::move(infeasible)), diags.take()};
}

std::string serialize_outcome(const SolveOutcome& outcome) {
    std::ostringstream out;
    if (const Assignment* assignment = feasible_assignment(outcome)) {
        out << "feasible\n";
        for (std::uint32_t v = 0; v < assignment->size(); ++v)
            out << "x " << v + 1 << ' ' << assignment->values[v].str() << "\n";
    } else {
        out << "infeasible\n";
        const auto& infeasible = std::get<Infeasible>(outcome);
        if (infeasible.witness) {
            const Constraint& w = infeasible.witness->constraint;
            out << "witness " << w.i + 1 << ' ' << w.j + 1 << ' ' << w.bound.str() << "\n";
        }
    }
    return out.str();
}

}  // namespace dcs
