// dcs: solve, check, generate, benchmark and translate difference
// constraint systems over finite domains.
//
// Exit codes: 0 feasible / ok, 1 infeasible / check failed, 2 input or
// usage error, 3 debug-mode invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dcs/bench.hpp"
#include "dcs/csdp.hpp"
#include "dcs/error.hpp"
#include "dcs/generator.hpp"
#include "dcs/io.hpp"
#include "dcs/oracles.hpp"
#include "dcs/solver.hpp"

namespace {

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInvariantViolation = 3;

// Reads a file, or stdin when the path is "-".
std::optional<std::string> read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return std::nullopt;
    }
    buffer << in.rdbuf();
    return buffer.str();
}

std::optional<dcs::ParsedInstance> load_instance(const std::string& path) {
    auto text = read_input(path);
    if (!text) return std::nullopt;
    auto parsed = dcs::parse_system(*text);
    if (!parsed.ok()) {
        std::cerr << dcs::format_diagnostics(parsed.diagnostics);
        return std::nullopt;
    }
    return std::move(parsed.instance);
}

std::uint64_t brute_cap_from_env() {
    if (const char* env = std::getenv("DCS_BRUTE_CAP")) {
        char* end = nullptr;
        unsigned long long cap = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && cap > 0) return cap;
        std::cerr << "warning: ignoring malformed DCS_BRUTE_CAP='" << env << "'\n";
    }
    return dcs::kDefaultBruteForceCap;
}

struct OrderSpec {
    dcs::RemovalPolicy policy = dcs::RemovalPolicy::kLifo;
    std::uint64_t seed = 0;
};

bool parse_order(const std::string& text, OrderSpec& out) {
    if (text == "lifo") {
        out.policy = dcs::RemovalPolicy::kLifo;
        return true;
    }
    if (text == "fifo") {
        out.policy = dcs::RemovalPolicy::kFifo;
        return true;
    }
    if (text.rfind("random:", 0) == 0) {
        char* end = nullptr;
        const std::string seed = text.substr(7);
        out.seed = std::strtoull(seed.c_str(), &end, 10);
        if (!seed.empty() && end && *end == '\0') {
            out.policy = dcs::RemovalPolicy::kRandom;
            return true;
        }
    }
    std::cerr << "error: --order expects lifo, fifo or random:<seed>\n";
    return false;
}

void print_stats(const dcs::SolveStats& stats) {
    std::cerr << "removals " << stats.removals << "\n"
              << "scans " << stats.scans << "\n"
              << "walk_steps " << stats.walk_steps << "\n"
              << "updates " << stats.updates << "\n";
}

int cmd_solve(const std::string& file, const std::string& algo, const std::string& order, bool stats,
              bool debug_invariants) {
    OrderSpec order_spec;
    if (!parse_order(order, order_spec)) return kExitInputError;

    auto instance = load_instance(file);
    if (!instance) return kExitInputError;

    dcs::SolveOutcome outcome{dcs::Infeasible{}};
    if (algo == "fast") {
        dcs::SolverOptions options;
        options.policy = order_spec.policy;
        options.random_seed = order_spec.seed;
        options.debug_invariants = debug_invariants;
        auto result = dcs::solve_fast(instance->system, instance->domain, options);
        if (stats) print_stats(result.stats);
        outcome = std::move(result.outcome);
    } else if (algo == "naive") {
        outcome = dcs::solve_naive(instance->system, instance->domain);
    } else if (algo == "brute") {
        auto result = dcs::brute_force(instance->system, instance->domain, brute_cap_from_env());
        if (result.pointwise_max)
            outcome = dcs::Feasible{std::move(*result.pointwise_max)};
        else
            outcome = dcs::Infeasible{};
        if (stats) std::cerr << "feasible_count " << result.feasible_count << "\n";
    } else if (algo == "bf") {
        // Unrestricted feasibility; the domain line is ignored.
        auto result = dcs::bellman_ford(instance->system);
        if (auto* feasible = std::get_if<dcs::UnrestrictedFeasible>(&result)) {
            outcome = dcs::Feasible{std::move(feasible->assignment)};
        } else {
            auto& infeasible = std::get<dcs::UnrestrictedInfeasible>(result);
            std::cerr << "negative cycle (total " << infeasible.cycle_total.str() << "): constraints";
            for (std::uint32_t p : infeasible.cycle) std::cerr << ' ' << p + 1;
            std::cerr << "\n";
            outcome = dcs::Infeasible{};
        }
    } else {
        std::cerr << "error: --algo expects fast, naive, brute or bf\n";
        return kExitInputError;
    }

    std::cout << dcs::serialize_outcome(outcome);
    return dcs::is_feasible(outcome) ? kExitFeasible : kExitInfeasible;
}

int cmd_check(const std::string& system_file, const std::string& solution_file) {
    auto instance = load_instance(system_file);
    if (!instance) return kExitInputError;

    auto solution_text = read_input(solution_file);
    if (!solution_text) return kExitInputError;
    auto parsed = dcs::parse_outcome(*solution_text);
    if (!parsed.ok()) {
        std::cerr << dcs::format_diagnostics(parsed.diagnostics);
        return kExitInputError;
    }
    const dcs::Assignment* assignment = dcs::feasible_assignment(*parsed.outcome);
    if (!assignment) {
        std::cerr << "error: solution file does not contain an assignment\n";
        return kExitInputError;
    }
    if (assignment->size() != instance->system.num_vars()) {
        std::cerr << "error: solution assigns " << assignment->size() << " unknowns, system has "
                  << instance->system.num_vars() << "\n";
        return kExitInputError;
    }
    for (std::uint32_t v = 0; v < assignment->size(); ++v) {
        if (!instance->domain.contains(assignment->values[v])) {
            std::cerr << "x " << v + 1 << " = " << assignment->values[v].str() << " is not in the domain\n";
            return kExitInfeasible;
        }
    }
    auto report = dcs::evaluate(instance->system, *assignment);
    if (!report.violated.empty()) {
        const dcs::Constraint& c = instance->system.constraints()[report.violated.front()];
        std::cerr << "violated: con " << c.i + 1 << ' ' << c.j + 1 << ' ' << c.bound.str() << " (constraint "
                  << report.violated.front() + 1 << ")\n";
        return kExitInfeasible;
    }
    return kExitFeasible;
}

int cmd_gen(const dcs::GenConfig& config) {
    dcs::Instance instance = dcs::generate(config);
    std::cout << dcs::serialize_system(instance.system, instance.domain);
    return kExitFeasible;
}

int cmd_bench(const std::string& plan_file) {
    auto text = read_input(plan_file);
    if (!text) return kExitInputError;
    auto parsed = dcs::parse_plan(*text);
    if (!parsed.ok()) {
        std::cerr << dcs::format_diagnostics(parsed.diagnostics);
        return kExitInputError;
    }
    std::cout << dcs::to_csv(dcs::run_bench(*parsed.plan));
    return kExitFeasible;
}

int cmd_csdp(const std::string& timing_file) {
    auto text = read_input(timing_file);
    if (!text) return kExitInputError;
    auto parsed = dcs::parse_timing(*text);
    if (!parsed.ok()) {
        std::cerr << dcs::format_diagnostics(parsed.diagnostics);
        return kExitInputError;
    }
    dcs::Instance instance = dcs::timing_to_dcs(*parsed.graph);
    std::cout << dcs::serialize_system(instance.system, instance.domain);
    return kExitFeasible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"difference constraint systems over finite domains"};
    app.require_subcommand(1);

    std::string file;
    std::string algo = "fast";
    std::string order = "lifo";
    bool stats = false;
    bool debug_invariants = false;
    auto* solve = app.add_subcommand("solve", "solve a DCS file");
    solve->add_option("file", file, "DCS input file, or - for stdin")->required();
    solve->add_option("--algo", algo, "fast | naive | brute | bf (default fast)");
    solve->add_option("--order", order, "lifo | fifo | random:<seed> (default lifo)");
    solve->add_flag("--stats", stats, "print solver counters to stderr");
    solve->add_flag("--debug-invariants", debug_invariants, "check solver invariants every iteration");

    std::string check_system, check_solution;
    auto* check = app.add_subcommand("check", "verify a solution against a system");
    check->add_option("system", check_system, "DCS input file")->required();
    check->add_option("solution", check_solution, "outcome file with an assignment")->required();

    dcs::GenConfig config;
    std::string family = "uniform";
    auto* gen = app.add_subcommand("gen", "generate an instance to stdout");
    gen->add_option("--family", family, "uniform | planted | restricted-infeasible");
    gen->add_option("--n", config.n, "unknown count")->required();
    gen->add_option("--m", config.m, "constraint count")->required();
    gen->add_option("--k", config.k, "domain size")->required();
    gen->add_option("--seed", config.seed, "PRNG seed");
    gen->add_option("--bound-lo", config.bound_lo, "uniform bound range, low");
    gen->add_option("--bound-hi", config.bound_hi, "uniform bound range, high");
    gen->add_option("--domain-lo", config.domain_lo, "domain value range, low");
    gen->add_option("--domain-hi", config.domain_hi, "domain value range, high");
    gen->add_option("--slack-max", config.slack_max, "max planted/padding slack");

    std::string plan_file;
    auto* bench = app.add_subcommand("bench", "run a bench plan, CSV to stdout");
    bench->add_option("plan", plan_file, "plan file, or - for stdin")->required();

    std::string timing_file;
    auto* csdp = app.add_subcommand("csdp", "translate a timing graph to DCS");
    csdp->add_option("timing", timing_file, "timing file, or - for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;  // keep --help at 0
    }

    try {
        if (solve->parsed()) return cmd_solve(file, algo, order, stats, debug_invariants);
        if (check->parsed()) return cmd_check(check_system, check_solution);
        if (gen->parsed()) {
            if (family == "uniform")
                config.family = dcs::Family::kUniform;
            else if (family == "planted")
                config.family = dcs::Family::kPlanted;
            else if (family == "restricted-infeasible")
                config.family = dcs::Family::kRestrictedInfeasible;
            else {
                std::cerr << "error: --family expects uniform, planted or restricted-infeasible\n";
                return kExitInputError;
            }
            return cmd_gen(config);
        }
        if (bench->parsed()) return cmd_bench(plan_file);
        if (csdp->parsed()) return cmd_csdp(timing_file);
    } catch (const dcs::InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariantViolation;
    } catch (const dcs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
