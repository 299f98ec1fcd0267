#include "dcs/bench.hpp"

#include <algorithm>
#include <sstream>

#include "dcs/error.hpp"
#include "line_tokens.hpp"

namespace dcs {

using detail::Diagnostics;
using detail::Line;

std::string_view algorithm_name(BenchAlgorithm algorithm) {
    return algorithm == BenchAlgorithm::kFast ? "fast" : "naive";
}

PlanParseResult parse_plan(std::string_view text) {
    Diagnostics diags;
    std::vector<Line> lines = detail::tokenize(text);

    if (lines.empty()) {
        diags.error(1, 1, "empty input, expected header 'plan 1'");
        return {std::nullopt, diags.take()};
    }

    std::size_t cursor = 0;
    const Line& header = lines[0];
    if (header.tokens[0].text == "plan") {
        ++cursor;
        if (header.tokens.size() != 2 || header.tokens[1].text != "1")
            diags.error(header.number, header.tokens[0].column, "unsupported version, expected 'plan 1'");
    } else {
        diags.error(header.number, header.tokens[0].column, "expected header 'plan 1'");
    }

    BenchPlan plan;
    std::optional<std::chrono::milliseconds> timeout;

    for (; cursor < lines.size(); ++cursor) {
        const Line& line = lines[cursor];
        const auto& directive = line.tokens[0];

        if (directive.text == "timeout_ms") {
            if (line.tokens.size() != 2) {
                diags.error(line.number, directive.column, "'timeout_ms' expects one value");
                continue;
            }
            auto t = detail::parse_unsigned(line.tokens[1].text);
            if (!t) {
                diags.error(line.number, line.tokens[1].column, "malformed timeout");
                continue;
            }
            if (*t == 0)
                timeout.reset();
            else
                timeout = std::chrono::milliseconds(*t);
        } else if (directive.text == "cell") {
            if (line.tokens.size() != 7) {
                diags.error(line.number, directive.column, "'cell' expects <family> <n> <m> <k> <seed> <algorithm>");
                continue;
            }
            BenchCell cell;
            const auto family = line.tokens[1].text;
            if (family == "uniform")
                cell.config.family = Family::kUniform;
            else if (family == "planted")
                cell.config.family = Family::kPlanted;
            else if (family == "restricted-infeasible")
                cell.config.family = Family::kRestrictedInfeasible;
            else {
                diags.error(line.number, line.tokens[1].column, "unknown family '" + std::string(family) + "'");
                continue;
            }
            auto n = detail::parse_unsigned(line.tokens[2].text);
            auto m = detail::parse_unsigned(line.tokens[3].text);
            auto k = detail::parse_unsigned(line.tokens[4].text);
            auto seed = detail::parse_unsigned(line.tokens[5].text);
            if (!n || !m || !k || !seed || *n > 0xFFFFFFFFull || *m > 0xFFFFFFFFull || *k > 0xFFFFFFFFull) {
                diags.error(line.number, line.tokens[2].column, "malformed cell counts");
                continue;
            }
            cell.config.n = static_cast<std::uint32_t>(*n);
            cell.config.m = static_cast<std::uint32_t>(*m);
            cell.config.k = static_cast<std::uint32_t>(*k);
            cell.config.seed = *seed;
            const auto algo = line.tokens[6].text;
            if (algo == "fast")
                cell.algorithm = BenchAlgorithm::kFast;
            else if (algo == "naive")
                cell.algorithm = BenchAlgorithm::kNaive;
            else {
                diags.error(line.number, line.tokens[6].column, "unknown algorithm '" + std::string(algo) + "'");
                continue;
            }
            cell.timeout = timeout;
            try {
                validate(cell.config);
            } catch (const Error& e) {
                diags.error(line.number, directive.column, e.what());
                continue;
            }
            plan.cells.push_back(std::move(cell));
        } else {
            diags.error(line.number, directive.column, "unknown directive '" + std::string(directive.text) + "'");
        }
    }

    if (!diags.clean()) return {std::nullopt, diags.take()};
    return {std::move(plan), diags.take()};
}

std::vector<BenchRow> run_bench(const BenchPlan& plan) {
    std::vector<BenchRow> rows;
    rows.reserve(plan.cells.size());

    for (const BenchCell& cell : plan.cells) {
        Instance instance = generate(cell.config);

        BenchRow row;
        row.family = family_name(cell.config.family);
        row.n = cell.config.n;
        row.m = cell.config.m;
        row.k = cell.config.k;
        row.seed = cell.config.seed;
        row.algorithm = algorithm_name(cell.algorithm);

        const auto started = std::chrono::steady_clock::now();
        if (cell.algorithm == BenchAlgorithm::kFast) {
            std::optional<FastResult> result;
            if (cell.timeout)
                result = solve_fast_limited(instance.system, instance.domain, {}, *cell.timeout);
            else
                result = solve_fast(instance.system, instance.domain);
            if (result) {
                row.outcome = is_feasible(result->outcome) ? "feasible" : "infeasible";
                row.stats = result->stats;
            } else {
                row.outcome = "timeout";
            }
        } else {
            std::optional<SolveOutcome> outcome;
            if (cell.timeout)
                outcome = solve_naive_limited(instance.system, instance.domain, *cell.timeout);
            else
                outcome = solve_naive(instance.system, instance.domain);
            row.outcome = !outcome ? "timeout" : is_feasible(*outcome) ? "feasible" : "infeasible";
        }
        const auto elapsed = std::chrono::steady_clock::now() - started;
        row.wall_time_ns = std::max<std::int64_t>(
            1, std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count());

        rows.push_back(std::move(row));
    }
    return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << kBenchCsvHeader << "\n";
    for (const BenchRow& row : rows) {
        out << row.family << ',' << row.n << ',' << row.m << ',' << row.k << ',' << row.seed << ','
            << row.algorithm << ',' << row.outcome << ',' << row.wall_time_ns << ',';
        if (row.stats)
            out << row.stats->removals << ',' << row.stats->scans << ',' << row.stats->walk_steps << ','
                << row.stats->updates;
        else
            out << ",,,";
        out << "\n";
    }
    return out.str();
}

}  // namespace dcs
