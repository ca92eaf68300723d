#pragma once

/// @file experiment.hpp
/// @brief Repeated seeded runs over a function x operator grid, with CSV
/// and plain-text table output.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "benchmarks.hpp"
#include "crossover.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "rng.hpp"

namespace ringga {

/// Seed derivation recorded in the CSV `seed_scheme` column.
inline constexpr std::string_view seed_scheme = "mix64(master;fnv1a(function);fnv1a(operator);trial)";

struct ExperimentPlan {
    std::vector<FunctionId> functions{all_functions.begin(), all_functions.end()};
    std::vector<CrossoverKind> operators{all_crossovers.begin(), all_crossovers.end()};
    std::size_t runs_per_cell = 30;
    /// Crossover kind and seed are overridden per run.
    GaConfig base_config;
    std::uint64_t master_seed = 0;

    void validate() const {
        if (functions.empty()) throw invalid_parameter("experiment plan has no functions");
        if (operators.empty()) throw invalid_parameter("experiment plan has no operators");
        if (runs_per_cell < 1) throw invalid_parameter("runs per cell must be at least 1");
        for (CrossoverKind op : operators) {
            GaConfig cfg = base_config;
            cfg.crossover = op;
            cfg.validate();
        }
        for (FunctionId id : functions) (void)spec_of(id, base_config.dimension);
    }
};

struct CellStats {
    FunctionId function = FunctionId::F1;
    CrossoverKind op = CrossoverKind::SPC;
    double best = 0.0;
    double worst = 0.0;
    double average = 0.0;
    /// Final best value of each run, in trial order.
    std::vector<double> all_bests;

    std::size_t runs() const noexcept { return all_bests.size(); }

    friend bool operator==(const CellStats&, const CellStats&) = default;
};

/// Seed of trial `trial` in cell (function, op). Independent of plan order.
inline std::uint64_t trial_seed(std::uint64_t master_seed, FunctionId function, CrossoverKind op,
                                std::size_t trial) noexcept {
    std::uint64_t s = mix64(master_seed, hash_tag(to_string(function)));
    s = mix64(s, hash_tag(to_string(op)));
    return mix64(s, static_cast<std::uint64_t>(trial));
}

inline CellStats summarize(FunctionId function, CrossoverKind op, std::vector<double> bests) {
    if (bests.empty()) throw invalid_parameter("cannot summarize an empty cell");
    CellStats cell{function, op, 0.0, 0.0, 0.0, std::move(bests)};
    const auto [lo, hi] = std::minmax_element(cell.all_bests.begin(), cell.all_bests.end());
    cell.best = *lo;
    cell.worst = *hi;
    cell.average = std::accumulate(cell.all_bests.begin(), cell.all_bests.end(), 0.0) /
                   static_cast<double>(cell.all_bests.size());
    // the mean of rounded sums can drift past an extreme when all runs agree
    cell.average = std::clamp(cell.average, cell.best, cell.worst);
    return cell;
}

/// Runs every trial of the plan. `threads` = 0 uses the hardware
/// concurrency. Results are identical for any thread count.
inline std::vector<CellStats> run_experiment(const ExperimentPlan& plan, unsigned threads = 1,
                                             const std::function<void(const CellStats&)>& on_cell = {}) {
    plan.validate();
    const std::size_t cells = plan.functions.size() * plan.operators.size();
    const std::size_t jobs = cells * plan.runs_per_cell;
    std::vector<double> finals(jobs);

    auto run_job = [&](std::size_t job) {
        const std::size_t cell = job / plan.runs_per_cell;
        const std::size_t trial = job % plan.runs_per_cell;
        const FunctionId fn = plan.functions[cell / plan.operators.size()];
        const CrossoverKind op = plan.operators[cell % plan.operators.size()];
        GaConfig cfg = plan.base_config;
        cfg.crossover = op;
        cfg.seed = trial_seed(plan.master_seed, fn, op, trial);
        finals[job] = run(cfg, fn).best_value;
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads == 1 || jobs == 1) {
        for (std::size_t job = 0; job < jobs; ++job) run_job(job);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        std::exception_ptr failure;
        std::atomic<bool> failed{false};
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t job = next++; job < jobs; job = next++) {
                    try {
                        run_job(job);
                    } catch (...) {
                        if (!failed.exchange(true)) failure = std::current_exception();
                        next = jobs;
                    }
                }
            });
        }
        pool.clear();
        if (failure) std::rethrow_exception(failure);
    }

    std::vector<CellStats> stats;
    stats.reserve(cells);
    for (std::size_t cell = 0; cell < cells; ++cell) {
        auto first = finals.begin() + static_cast<std::ptrdiff_t>(cell * plan.runs_per_cell);
        stats.push_back(summarize(plan.functions[cell / plan.operators.size()],
                                  plan.operators[cell % plan.operators.size()],
                                  {first, first + static_cast<std::ptrdiff_t>(plan.runs_per_cell)}));
        if (on_cell) on_cell(stats.back());
    }
    return stats;
}

/// Six significant digits, trailing zeros kept ("0.00270000", "6.16300").
inline std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.6g", value);
    return buf;
}

inline constexpr std::string_view csv_header = "function,operator,best,worst,average,runs,seed_scheme";

inline std::string emit_csv(const std::vector<CellStats>& stats) {
    if (stats.empty()) throw invalid_parameter("no statistics to write");
    std::string out{csv_header};
    out += '\n';
    for (const auto& cell : stats) {
        out += to_string(cell.function);
        out += ',';
        out += to_string(cell.op);
        out += ',' + format_real(cell.best) + ',' + format_real(cell.worst) + ',' +
               format_real(cell.average) + ',' + std::to_string(cell.runs()) + ',';
        out += seed_scheme;
        out += '\n';
    }
    return out;
}

/// A row parsed back from emit_csv output. `runs` replaces all_bests.
struct CsvRow {
    FunctionId function = FunctionId::F1;
    CrossoverKind op = CrossoverKind::SPC;
    double best = 0.0;
    double worst = 0.0;
    double average = 0.0;
    std::size_t runs = 0;
};

/// Parses emit_csv output; lines starting with '#' are metadata and skipped.
inline std::vector<CsvRow> parse_csv(std::string_view text) {
    std::vector<CsvRow> rows;
    bool header_seen = false;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {
            if (line != csv_header) throw invalid_parameter("unexpected CSV header: " + line);
            header_seen = true;
            continue;
        }
        std::vector<std::string> fields;
        std::istringstream fs{line};
        for (std::string field; std::getline(fs, field, ',');) fields.push_back(field);
        if (fields.size() != 7) throw invalid_parameter("malformed CSV row: " + line);
        auto fn = parse_function(fields[0]);
        auto op = parse_crossover(fields[1]);
        if (!fn || !op) throw invalid_parameter("unknown function or operator in row: " + line);
        rows.push_back(CsvRow{*fn, *op, std::stod(fields[2]), std::stod(fields[3]),
                              std::stod(fields[4]), std::stoul(fields[5])});
    }
    if (!header_seen) throw invalid_parameter("CSV header missing");
    return rows;
}

/// Table with one block per function and one column per operator, rows
/// Best / Worst / Average. Every (function, operator) pair of the grid must
/// be present in `stats`.
inline std::string emit_table(const std::vector<CellStats>& stats,
                              const std::vector<FunctionId>& functions,
                              const std::vector<CrossoverKind>& operators) {
    auto find = [&](FunctionId fn, CrossoverKind op) -> const CellStats& {
        for (const auto& cell : stats)
            if (cell.function == fn && cell.op == op) return cell;
        throw missing_cell("missing cell " + std::string(to_string(fn)) + "/" +
                           std::string(to_string(op)));
    };
    for (FunctionId fn : functions)
        for (CrossoverKind op : operators) (void)find(fn, op);

    constexpr int label_width = 10;
    constexpr int column_width = 13;
    std::string out;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-*s%-*s", label_width, "Function", label_width, "Result");
    out += buf;
    for (CrossoverKind op : operators) {
        std::snprintf(buf, sizeof buf, "%*s", column_width, std::string(to_string(op)).c_str());
        out += buf;
    }
    out += '\n';

    constexpr std::array<std::string_view, 3> rows{"Best", "Worst", "Average"};
    for (FunctionId fn : functions) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::snprintf(buf, sizeof buf, "%-*s%-*s", label_width,
                          r == 0 ? std::string(to_string(fn)).c_str() : "", label_width,
                          std::string(rows[r]).c_str());
            out += buf;
            for (CrossoverKind op : operators) {
                const CellStats& cell = find(fn, op);
                const double v = r == 0 ? cell.best : r == 1 ? cell.worst : cell.average;
                std::snprintf(buf, sizeof buf, "%*.4g", column_width, v);
                out += buf;
            }
            out += '\n';
        }
    }
    return out;
}

/// Grid inferred from `stats`, in canonical function and operator order.
inline std::string emit_table(const std::vector<CellStats>& stats) {
    if (stats.empty()) throw invalid_parameter("no statistics to tabulate");
    std::vector<FunctionId> functions;
    std::vector<CrossoverKind> operators;
    for (FunctionId fn : all_functions)
        if (std::any_of(stats.begin(), stats.end(), [&](const auto& c) { return c.function == fn; }))
            functions.push_back(fn);
    for (CrossoverKind op : all_crossovers)
        if (std::any_of(stats.begin(), stats.end(), [&](const auto& c) { return c.op == op; }))
            operators.push_back(op);
    return emit_table(stats, functions, operators);
}

} // namespace ringga
