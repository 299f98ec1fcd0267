#ifndef DCS_BENCH_HPP
#define DCS_BENCH_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcs/generator.hpp"
#include "dcs/io.hpp"
#include "dcs/solver.hpp"

namespace dcs {

enum class BenchAlgorithm { kFast, kNaive };

std::string_view algorithm_name(BenchAlgorithm algorithm);

struct BenchCell {
    GenConfig config;
    BenchAlgorithm algorithm = BenchAlgorithm::kFast;
    std::optional<std::chrono::milliseconds> timeout;  // per-cell solve limit
};

// Plan text format:
//   plan 1
//   timeout_ms <t>                               (optional; 0 clears; applies
//                                                 to the cells that follow)
//   cell <family> <n> <m> <k> <seed> <fast|naive>
// '#' comments and blank lines as in the DCS format.
struct BenchPlan {
    std::vector<BenchCell> cells;
};

struct PlanParseResult {
    std::optional<BenchPlan> plan;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return plan.has_value(); }
};

PlanParseResult parse_plan(std::string_view text);

// One row per (instance, algorithm) cell. Counters are filled for the fast
// solver only and are bit-identical across runs; wall time is not.
struct BenchRow {
    std::string family;
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    std::uint32_t k = 0;
    std::uint64_t seed = 0;
    std::string algorithm;
    std::string outcome;  // feasible | infeasible | timeout
    std::uint64_t wall_time_ns = 0;
    std::optional<SolveStats> stats;
};

// Generates and solves each cell in plan order. A timed-out cell yields a
// row with outcome "timeout" rather than aborting the run.
std::vector<BenchRow> run_bench(const BenchPlan& plan);

inline constexpr std::string_view kBenchCsvHeader =
    "family,n,m,k,seed,algorithm,outcome,wall_time_ns,removals,scans,walk_steps,updates";

// Header plus one line per row; counter cells are empty for rows without stats.
std::string to_csv(const std::vector<BenchRow>& rows);

}  // namespace dcs

#endif
