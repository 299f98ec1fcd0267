#include "dcs/csdp.hpp"

#include <string>

#include "dcs/error.hpp"
#include "line_tokens.hpp"

namespace dcs {

using detail::Diagnostics;
using detail::Line;
using detail::Token;

void validate(const TimingGraph& graph) {
    const Scalar zero(0);
    if (!(graph.period > zero)) throw Error("timing: period must be > 0");
    if (graph.setup < zero) throw Error("timing: setup must be >= 0");
    if (graph.hold < zero) throw Error("timing: hold must be >= 0");
    for (std::size_t p = 0; p < graph.paths.size(); ++p) {
        const TimingPath& path = graph.paths[p];
        if (path.from >= graph.registers || path.to >= graph.registers)
            throw Error("timing: path " + std::to_string(p + 1) + " references a register outside [1, " +
                        std::to_string(graph.registers) + "]");
        if (path.delay_min < zero || path.delay_max < path.delay_min)
            throw Error("timing: path " + std::to_string(p + 1) + " needs 0 <= dmin <= dmax");
    }
}

Instance timing_to_dcs(const TimingGraph& graph) {
    validate(graph);
    std::vector<Constraint> constraints;
    constraints.reserve(2 * graph.paths.size());
    for (const TimingPath& path : graph.paths) {
        constraints.push_back(Constraint{path.to, path.from, path.delay_min - graph.hold});
        constraints.push_back(Constraint{path.from, path.to, graph.period - path.delay_max - graph.setup});
    }
    return Instance{System(graph.registers, std::move(constraints)), graph.shifts};
}

TimingParseResult parse_timing(std::string_view text) {
    Diagnostics diags;
    std::vector<Line> lines = detail::tokenize(text);

    if (lines.empty()) {
        diags.error(1, 1, "empty input, expected header 'csdp 1'");
        return {std::nullopt, diags.take()};
    }

    auto scalar_at = [&diags](const Line& line, std::size_t t) -> std::optional<Scalar> {
        auto v = Scalar::parse(line.tokens[t].text);
        if (!v)
            diags.error(line.number, line.tokens[t].column,
                        "malformed number '" + std::string(line.tokens[t].text) + "'");
        return v;
    };

    std::size_t cursor = 0;
    const Line& header = lines[0];
    if (header.tokens[0].text == "csdp") {
        ++cursor;
        if (header.tokens.size() != 2 || header.tokens[1].text != "1")
            diags.error(header.number, header.tokens[0].column, "unsupported version, expected 'csdp 1'");
    } else {
        diags.error(header.number, header.tokens[0].column, "expected header 'csdp 1'");
    }

    std::optional<std::uint32_t> regs;
    std::optional<Scalar> period;
    std::optional<Scalar> setup;
    std::optional<Scalar> hold;
    std::optional<std::vector<Scalar>> shifts;
    bool saw_shifts = false;
    struct RawPath {
        std::uint64_t from, to;
        Scalar dmin, dmax;
        std::uint32_t line;
    };
    std::vector<RawPath> paths;

    for (; cursor < lines.size(); ++cursor) {
        const Line& line = lines[cursor];
        const Token& directive = line.tokens[0];

        auto single_value = [&](std::optional<Scalar>& slot) {
            if (slot || line.tokens.size() != 2) {
                diags.error(line.number, directive.column,
                            "'" + std::string(directive.text) + "' expects one value, exactly once");
                return;
            }
            slot = scalar_at(line, 1);
        };

        if (directive.text == "regs") {
            if (regs || line.tokens.size() != 2) {
                diags.error(line.number, directive.column, "'regs' expects one count, exactly once");
                continue;
            }
            auto r = detail::parse_unsigned(line.tokens[1].text);
            if (!r || *r > 0xFFFFFFFFull) {
                diags.error(line.number, line.tokens[1].column,
                            "malformed register count '" + std::string(line.tokens[1].text) + "'");
                continue;
            }
            regs = static_cast<std::uint32_t>(*r);
        } else if (directive.text == "period") {
            single_value(period);
        } else if (directive.text == "setup") {
            single_value(setup);
        } else if (directive.text == "hold") {
            single_value(hold);
        } else if (directive.text == "shifts") {
            if (saw_shifts) {
                diags.error(line.number, directive.column, "duplicate 'shifts' directive");
                continue;
            }
            saw_shifts = true;
            std::vector<Scalar> values;
            bool bad = false;
            for (std::size_t t = 1; t < line.tokens.size(); ++t) {
                auto v = scalar_at(line, t);
                if (!v) {
                    bad = true;
                    continue;
                }
                values.push_back(std::move(*v));
            }
            if (values.empty() && !bad) {
                diags.error(line.number, directive.column, "shifts needs at least one value");
                continue;
            }
            for (std::size_t t = 0; t + 1 < values.size(); ++t) {
                if (!(values[t] < values[t + 1])) {
                    diags.error(line.number, directive.column, "shifts not strictly increasing");
                    bad = true;
                    break;
                }
            }
            if (!bad) shifts = std::move(values);
        } else if (directive.text == "path") {
            if (line.tokens.size() != 5) {
                diags.error(line.number, directive.column, "'path' expects <i> <j> <dmin> <dmax>");
                continue;
            }
            auto i = detail::parse_unsigned(line.tokens[1].text);
            auto j = detail::parse_unsigned(line.tokens[2].text);
            auto dmin = scalar_at(line, 3);
            auto dmax = scalar_at(line, 4);
            if (!i || *i == 0 || !j || *j == 0) {
                diags.error(line.number, line.tokens[1].column, "malformed path registers");
                continue;
            }
            if (dmin && dmax) paths.push_back(RawPath{*i, *j, std::move(*dmin), std::move(*dmax), line.number});
        } else {
            diags.error(line.number, directive.column, "unknown directive '" + std::string(directive.text) + "'");
        }
    }

    const std::uint32_t last_line = lines.back().number;
    if (!regs) diags.error(last_line, 1, "missing 'regs' directive");
    if (!period) diags.error(last_line, 1, "missing 'period' directive");
    if (!saw_shifts) diags.error(last_line, 1, "missing 'shifts' directive");
    if (period && !(*period > Scalar(0))) diags.error(last_line, 1, "period must be > 0");
    if (setup && *setup < Scalar(0)) diags.error(last_line, 1, "setup must be >= 0");
    if (hold && *hold < Scalar(0)) diags.error(last_line, 1, "hold must be >= 0");
    if (regs) {
        for (const RawPath& p : paths)
            if (p.from > *regs || p.to > *regs)
                diags.error(p.line, 1, "path register out of range [1, " + std::to_string(*regs) + "]");
    }
    for (const RawPath& p : paths)
        if (p.dmin < Scalar(0) || p.dmax < p.dmin) diags.error(p.line, 1, "path needs 0 <= dmin <= dmax");

    if (!diags.clean()) return {std::nullopt, diags.take()};

    TimingGraph graph{*regs,
                      {},
                      setup ? std::move(*setup) : Scalar(0),
                      hold ? std::move(*hold) : Scalar(0),
                      std::move(*period),
                      Domain(std::move(*shifts))};
    graph.paths.reserve(paths.size());
    for (RawPath& p : paths)
        graph.paths.push_back(TimingPath{static_cast<std::uint32_t>(p.from - 1),
                                         static_cast<std::uint32_t>(p.to - 1), std::move(p.dmin),
                                         std::move(p.dmax)});
    return {std::move(graph), diags.take()};
}

}  // namespace dcs
