#ifndef DCS_CSDP_HPP
#define DCS_CSDP_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dcs/generator.hpp"
#include "dcs/io.hpp"
#include "dcs/system.hpp"

namespace dcs {

// Register-to-register timing path with its extreme combinational delays.
// Register indices are 0-based in memory, 1-based in the text format.
struct TimingPath {
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    Scalar delay_min;
    Scalar delay_max;
};

// A circuit's timing view for one clock period: choose one shift per
// register out of `shifts` so that no path double-clocks (hold) or
// zero-clocks (setup).
struct TimingGraph {
    std::uint32_t registers = 0;
    std::vector<TimingPath> paths;
    Scalar setup;
    Scalar hold;
    Scalar period = Scalar(1);
    Domain shifts;
};

// Throws Error unless 0 <= delay_min <= delay_max on every path,
// period > 0, setup >= 0, hold >= 0, and path endpoints are in range.
void validate(const TimingGraph& graph);

// One unknown per register; per path (i -> j, dmin, dmax), in input order:
//   hold  (no double-clocking):  x_j - x_i <= dmin - hold
//   setup (no zero-clocking):    x_i - x_j <= period - dmax - setup
// The shift convention is launch at x_i, capture at x_j, single-cycle
// transfer. Exactly 2 * paths constraints, hold before setup.
Instance timing_to_dcs(const TimingGraph& graph);

// Timing text format:
//   csdp 1
//   regs <R>
//   period <t>
//   setup <s>        (optional, default 0)
//   hold <h>         (optional, default 0)
//   shifts <d_1> ... <d_k>
//   path <i> <j> <dmin> <dmax>   (any number, order preserved)
// '#' comments and blank lines as in the DCS format.
struct TimingParseResult {
    std::optional<TimingGraph> graph;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return graph.has_value(); }
};

TimingParseResult parse_timing(std::string_view text);

}  // namespace dcs

#endif
