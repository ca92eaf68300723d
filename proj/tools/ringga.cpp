#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cli_options.hpp"

namespace {

using namespace ringga;
using ringga::cli::Command;
using ringga::cli::Format;
using ringga::cli::Options;

constexpr const char* budget_rule =
    "initial population counts toward the budget; the final generation is truncated to fit";

std::string metadata(const Options& o) {
    const GaConfig& c = o.config;
    std::ostringstream m;
    m << "# ringga " << (o.command == Command::run ? "run" : "bench") << '\n'
      << "# seed: " << o.seed << '\n'
      << "# prng: " << rng_name << '\n';
    if (o.command == Command::bench) {
        m << "# seed_scheme: " << seed_scheme << '\n' << "# runs: " << o.runs << '\n';
        m << "# functions:";
        for (FunctionId fn : o.functions) m << ' ' << to_string(fn);
        m << "\n# operators:";
        for (CrossoverKind op : o.operators) m << ' ' << to_string(op);
        m << '\n';
    } else {
        m << "# function: " << to_string(o.function) << '\n'
          << "# operator: " << to_string(c.crossover) << '\n';
    }
    m << "# pop: " << c.population_size << '\n'
      << "# dim: " << c.dimension << '\n'
      << "# budget: " << c.eval_budget << '\n'
      << "# pc: " << format_real(c.crossover_rate) << '\n'
      << "# pm: " << format_real(c.mutation_rate) << '\n'
      << "# sigma_frac: " << format_real(c.mutation_sigma_fraction) << '\n'
      << "# elite: " << c.elite_count << '\n'
      << "# ic_ratio: " << format_real(c.crossover_params.ic_ratio) << '\n'
      << "# hc_ratio: " << format_real(c.crossover_params.hc_ratio) << '\n'
      << "# f4_variant: " << to_string(c.f4_variant) << '\n'
      << "# budget_accounting: " << budget_rule << '\n';
    return m.str();
}

std::string run_command(const Options& o) {
    const RunResult r = run(o.config, o.function);
    std::string out = metadata(o);
    if (o.format == Format::csv) {
        out += "generation,best_so_far\n";
        for (std::size_t g = 0; g < r.best_by_generation.size(); ++g)
            out += std::to_string(g) + ',' + format_real(r.best_by_generation[g]) + '\n';
        return out;
    }
    const FunctionSpec spec = spec_of(o.function, o.config.dimension, o.config.f4_variant);
    out += "best value:       " + format_real(r.best_value) + '\n';
    out += "known optimum:    " + format_real(spec.optimum_value) + '\n';
    out += "evaluations used: " + std::to_string(r.evaluations_used) + '\n';
    out += "generations:      " + std::to_string(r.generations) + '\n';
    out += "best genome:     ";
    for (double g : r.best_genome) out += ' ' + format_real(g);
    out += '\n';
    return out;
}

std::string bench_command(Options o) {
    if (o.functions.empty()) o.functions.assign(all_functions.begin(), all_functions.end());
    if (o.operators.empty()) o.operators.assign(all_crossovers.begin(), all_crossovers.end());
    ExperimentPlan plan;
    plan.functions = o.functions;
    plan.operators = o.operators;
    plan.runs_per_cell = o.runs;
    plan.base_config = o.config;
    plan.master_seed = o.seed;
    const auto stats = run_experiment(plan, o.threads, [](const CellStats& cell) {
        std::fprintf(stderr, "done %s/%s\n", std::string(to_string(cell.function)).c_str(),
                     std::string(to_string(cell.op)).c_str());
    });
    return metadata(o) + (o.format == Format::csv ? emit_csv(stats)
                                                  : emit_table(stats, plan.functions, plan.operators));
}

std::string list_command() {
    std::string out = "functions:\n";
    char buf[160];
    for (FunctionId fn : all_functions) {
        const FunctionSpec s = spec_of(fn, 30);
        std::snprintf(buf, sizeof buf, "  %s  %-30s bounds [%g, %g]  optimum x=%g f=%g\n",
                      std::string(to_string(fn)).c_str(), std::string(function_name(fn)).c_str(),
                      s.bounds.lower, s.bounds.upper, s.optimum_point, s.optimum_value);
        out += buf;
    }
    out += "operators:\n";
    for (CrossoverKind op : all_crossovers) {
        std::string tag{to_string(op)};
        for (char& c : tag) c = static_cast<char>(c - 'A' + 'a');
        std::snprintf(buf, sizeof buf, "  %-4s %s crossover\n", tag.c_str(),
                      std::string(crossover_name(op)).c_str());
        out += buf;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    auto parsed = ringga::cli::parse_args(argc, argv);
    if (parsed.exit_code) {
        (*parsed.exit_code == 0 ? std::cout : std::cerr) << parsed.message << '\n';
        return *parsed.exit_code;
    }
    const Options& o = parsed.options;
    try {
        std::string text;
        switch (o.command) {
        case Command::run: text = run_command(o); break;
        case Command::bench: text = bench_command(o); break;
        case Command::variety: text = variety_report(o.d_min, o.d_max); break;
        case Command::list: text = list_command(); break;
        }
        if (o.out) {
            std::ofstream file{*o.out, std::ios::binary};
            if (!file || !(file << text) || !file.flush()) {
                std::cerr << "error: cannot write " << *o.out << '\n';
                return 1;
            }
        } else {
            std::cout << text;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
