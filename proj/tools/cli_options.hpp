#pragma once

/// @file cli_options.hpp
/// @brief Command-line parsing for the ringga tool, kept in a header so the
/// test suite can drive it directly.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <ringga/ringga.hpp>

namespace ringga::cli {

enum class Command { run, bench, variety, list };
enum class Format { table, csv };

struct Options {
    Command command = Command::list;
    GaConfig config;
    FunctionId function = FunctionId::F1;
    /// Grid restriction for `bench`; empty means all six.
    std::vector<FunctionId> functions;
    std::vector<CrossoverKind> operators;
    std::size_t runs = 30;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::size_t d_min = 1;
    std::size_t d_max = 12;
    std::optional<std::string> out;
    Format format = Format::table;
};

struct ParseResult {
    /// Set when the invocation is complete after parsing (help, usage error).
    std::optional<int> exit_code;
    /// Help or error text for the caller to print.
    std::string message;
    Options options;
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

/// Reads `key = value` lines into `--key value` tokens. Blank lines and
/// lines starting with '#' are ignored.
inline std::vector<std::string> config_tokens(const std::string& path) {
    std::ifstream in{path};
    if (!in) throw CLI::FileError::Missing(path);
    std::vector<std::string> tokens;
    std::string line;
    for (int line_no = 1; std::getline(in, line); ++line_no) {
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ConversionError(path + ":" + std::to_string(line_no) +
                                       ": expected 'key = value', got '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.rfind("--", 0) != 0) key = "--" + key;
        tokens.push_back(key);
        tokens.push_back(value);
    }
    return tokens;
}

inline std::optional<std::string> find_config(const std::vector<std::string>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
    }
    return std::nullopt;
}

inline CLI::Validator function_tag() {
    return CLI::Validator(
        [](std::string& value) -> std::string {
            if (!parse_function(value)) return "unknown function '" + value + "' (expected F1..F6)";
            return {};
        },
        "F1..F6", "function tag");
}

inline CLI::Validator operator_tag() {
    return CLI::Validator(
        [](std::string& value) -> std::string {
            if (!parse_crossover(value))
                return "unknown operator '" + value + "' (expected spc|tpc|ic|hc|ac|rc)";
            return {};
        },
        "spc|tpc|ic|hc|ac|rc", "operator tag");
}

} // namespace detail

/// Parses `args` (without the program name). Flags override values read
/// from `--config <path>`.
inline ParseResult parse_args(std::vector<std::string> args) {
    ParseResult result;
    Options& o = result.options;
    GaConfig& cfg = o.config;

    CLI::App app{"Real-coded genetic algorithm with ring crossover", "ringga"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1, 1);

    std::string function_tag = "F1";
    std::string operator_tag = "rc";
    std::vector<std::string> function_tags;
    std::vector<std::string> operator_tags;
    std::string format = "table";
    std::string f4_variant = "normalized";
    std::string config_path;
    std::string out_path;

    auto add_ga_flags = [&](CLI::App* sub) {
        sub->add_option("--pop", cfg.population_size, "Population size")->check(CLI::Range(2, 1 << 20));
        sub->add_option("--dim", cfg.dimension, "Search-space dimension")->check(CLI::Range(1, 1 << 20));
        sub->add_option("--budget", cfg.eval_budget, "Objective evaluations per run")
            ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 40));
        sub->add_option("--pc", cfg.crossover_rate, "Crossover rate")->check(CLI::Range(0.0, 1.0));
        sub->add_option("--pm", cfg.mutation_rate, "Per-gene mutation rate")->check(CLI::Range(0.0, 1.0));
        sub->add_option("--sigma-frac", cfg.mutation_sigma_fraction,
                        "Mutation sigma as a fraction of the bound width")
            ->check(CLI::PositiveNumber);
        sub->add_option("--elite", cfg.elite_count, "Individuals copied unchanged")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--ic-ratio", cfg.crossover_params.ic_ratio, "Intermediate crossover ratio")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--hc-ratio", cfg.crossover_params.hc_ratio, "Heuristic crossover ratio")
            ->check(CLI::PositiveNumber);
        sub->add_option("--f4-variant", f4_variant, "Schwefel scaling")
            ->check(CLI::IsMember({"normalized", "raw"}));
        sub->add_option("--seed", o.seed, "Seed (master seed for bench)");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv"}));
        sub->add_option("--out", out_path, "Output file (default: standard output)");
        sub->add_option("--config", config_path, "File of 'key = value' lines");
    };

    CLI::App* run_cmd = app.add_subcommand("run", "Single GA run");
    add_ga_flags(run_cmd);
    run_cmd->add_option("--function", function_tag, "F1..F6")->check(detail::function_tag());
    run_cmd->add_option("--operator", operator_tag, "spc|tpc|ic|hc|ac|rc")->check(detail::operator_tag());

    CLI::App* bench_cmd = app.add_subcommand("bench", "Function x operator experiment grid");
    add_ga_flags(bench_cmd);
    bench_cmd->add_option("--function", function_tags, "Restrict to these functions")
        ->check(detail::function_tag())
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    bench_cmd->add_option("--operator", operator_tags, "Restrict to these operators")
        ->check(detail::operator_tag())
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    bench_cmd->add_option("--runs", o.runs, "Independent runs per cell")->check(CLI::Range(1, 1 << 20));
    bench_cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

    CLI::App* variety_cmd = app.add_subcommand("variety", "Distinct-offspring enumeration report");
    variety_cmd->add_option("--dmin", o.d_min, "Smallest parent length")
        ->check(CLI::Range(std::size_t{1}, max_variety_length));
    variety_cmd->add_option("--dmax", o.d_max, "Largest parent length")
        ->check(CLI::Range(std::size_t{1}, max_variety_length));
    variety_cmd->add_option("--out", out_path, "Output file (default: standard output)");
    variety_cmd->add_option("--config", config_path, "File of 'key = value' lines");

    app.add_subcommand("list", "Available functions and operators");

    try {
        if (auto path = detail::find_config(args); path && !args.empty()) {
            auto tokens = detail::config_tokens(*path);
            // file values go right after the subcommand so later flags win
            args.insert(args.begin() + 1, tokens.begin(), tokens.end());
        }
        std::reverse(args.begin(), args.end());
        app.parse(args);

        if (run_cmd->parsed()) o.command = Command::run;
        else if (bench_cmd->parsed()) o.command = Command::bench;
        else if (variety_cmd->parsed()) o.command = Command::variety;
        else o.command = Command::list;

        o.function = *parse_function(function_tag);
        cfg.crossover = *parse_crossover(operator_tag);
        for (const auto& tag : function_tags) o.functions.push_back(*parse_function(tag));
        for (const auto& tag : operator_tags) o.operators.push_back(*parse_crossover(tag));
        cfg.f4_variant = f4_variant == "raw" ? SchwefelVariant::raw : SchwefelVariant::normalized;
        cfg.seed = o.seed;
        o.format = format == "csv" ? Format::csv : Format::table;
        if (!out_path.empty()) o.out = out_path;

        if (o.command == Command::variety && o.d_min > o.d_max)
            throw CLI::ValidationError("--dmin", "must not exceed --dmax");
        if (o.command == Command::run || o.command == Command::bench) {
            if (cfg.elite_count >= cfg.population_size)
                throw CLI::ValidationError("--elite", "must be smaller than --pop");
            if (cfg.eval_budget < cfg.population_size)
                throw CLI::ValidationError("--budget", "must be at least --pop");
            const auto ops = o.command == Command::run
                                 ? std::vector<CrossoverKind>{cfg.crossover}
                                 : (o.operators.empty() ? std::vector<CrossoverKind>(
                                                              all_crossovers.begin(), all_crossovers.end())
                                                        : o.operators);
            for (CrossoverKind op : ops)
                if (cfg.dimension < min_crossover_length(op))
                    throw CLI::ValidationError("--dim", std::string(to_string(op)) + " needs at least " +
                                                            std::to_string(min_crossover_length(op)));
            const auto fns = o.command == Command::run
                                 ? std::vector<FunctionId>{o.function}
                                 : (o.functions.empty() ? std::vector<FunctionId>(
                                                              all_functions.begin(), all_functions.end())
                                                        : o.functions);
            for (FunctionId fn : fns)
                if (fn == FunctionId::F6 && cfg.dimension < 2)
                    throw CLI::ValidationError("--dim", "F6 needs at least 2");
        }
    } catch (const CLI::CallForHelp&) {
        result.exit_code = 0;
        result.message = app.help();
    } catch (const CLI::CallForAllHelp&) {
        result.exit_code = 0;
        result.message = app.help("", CLI::AppFormatMode::All);
    } catch (const CLI::Error& e) {
        result.exit_code = e.get_exit_code() == 0 ? 2 : e.get_exit_code();
        result.message = std::string("usage error: ") + e.what();
    }
    return result;
}

inline ParseResult parse_args(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return parse_args(std::move(args));
}

} // namespace ringga::cli
