#pragma once

/// @file engine.hpp
/// @brief Generational real-coded GA under a fixed evaluation budget.
///
/// One generation:
///   1. copy the `elite_count` best individuals unchanged;
///   2. pick parents by stochastic universal sampling over linear-rank
///      weights, shuffle them into mating pairs, and recombine each pair
///      with probability p_c (otherwise the parents pass through);
///   3. Gaussian-mutate and clamp every non-elite child;
///   4. evaluate children until the budget runs out. A generation cut
///      short by the budget is topped up with the previous generation's
///      next-ranked members so the population size never changes.
///
/// The initial population's evaluations count toward the budget.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "benchmarks.hpp"
#include "crossover.hpp"
#include "errors.hpp"
#include "genome.hpp"
#include "mutation.hpp"
#include "rng.hpp"
#include "selection.hpp"

namespace ringga {

template <typename F>
concept Objective = std::regular_invocable<const F&, std::span<const double>> &&
                    std::convertible_to<std::invoke_result_t<const F&, std::span<const double>>,
                                        double>;

struct GaConfig {
    std::size_t population_size = 20;
    std::size_t dimension = 30;
    double crossover_rate = 0.8;
    /// Per-gene probability of Gaussian mutation.
    double mutation_rate = 0.01;
    /// Mutation sigma as a fraction of the bound width.
    double mutation_sigma_fraction = 0.1;
    std::size_t elite_count = 2;
    std::size_t eval_budget = 10000;
    CrossoverKind crossover = CrossoverKind::RC;
    CrossoverParams crossover_params;
    SchwefelVariant f4_variant = SchwefelVariant::normalized;
    std::uint64_t seed = 0;

    void validate() const {
        if (population_size < 2) throw invalid_parameter("population size must be at least 2");
        if (dimension < 1) throw invalid_parameter("dimension must be at least 1");
        if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0))
            throw invalid_parameter("crossover rate must lie in [0, 1]");
        if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0))
            throw invalid_parameter("mutation rate must lie in [0, 1]");
        if (!(mutation_sigma_fraction > 0.0))
            throw invalid_parameter("mutation sigma fraction must be > 0");
        if (elite_count >= population_size)
            throw invalid_parameter("elite count must be smaller than the population size");
        if (eval_budget < population_size)
            throw invalid_parameter("evaluation budget must cover the initial population");
        if (dimension < min_crossover_length(crossover))
            throw invalid_parameter(std::string(to_string(crossover)) + " needs dimension >= " +
                                    std::to_string(min_crossover_length(crossover)));
        crossover_params.validate();
    }

    friend bool operator==(const GaConfig&, const GaConfig&) = default;
};

struct RunResult {
    double best_value = std::numeric_limits<double>::infinity();
    Genome best_genome;
    /// Best value found so far, one entry per generation including the
    /// initial population.
    std::vector<double> best_by_generation;
    std::size_t evaluations_used = 0;
    std::size_t generations = 0;
    std::uint64_t seed = 0;

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

namespace detail {
inline std::vector<double> fitness_values(const Population& pop) {
    std::vector<double> values;
    values.reserve(pop.size());
    for (const auto& ind : pop.members) {
        if (!ind.fitness) throw invalid_parameter("population contains unevaluated individuals");
        values.push_back(*ind.fitness);
    }
    return values;
}

/// Member indices from best to worst; ties keep index order.
inline std::vector<std::size_t> ranking(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    return order;
}
} // namespace detail

/// Evaluates every unevaluated member while the budget allows.
template <Objective F>
void evaluate_population(Population& pop, const F& objective, std::size_t budget) {
    for (auto& ind : pop.members) {
        if (ind.fitness) continue;
        if (pop.evaluations_used >= budget)
            throw budget_exhausted("evaluation budget exhausted during initial evaluation");
        ind.fitness = static_cast<double>(objective(std::span<const double>(ind.genome)));
        ++pop.evaluations_used;
    }
}

/// Mating pool for one generation: `count` member indices chosen by SUS on
/// rank weights, then shuffled. Depends only on the fitness ranking, so any
/// strictly increasing transform of the objective selects the same indices.
inline std::vector<std::size_t> select_parents(const Population& pop, std::size_t count,
                                               RngStream& rng) {
    const auto values = detail::fitness_values(pop);
    const auto weights = rank_scale(values);
    auto picked = sus_select(weights, count, rng);
    shuffle(picked, rng);
    return picked;
}

/// Produces the next generation. Throws budget_exhausted if the budget is
/// already spent.
template <Objective F>
Population step(const Population& pop, const GaConfig& cfg, const Bounds& bounds,
                const F& objective, RngStream& rng) {
    if (pop.evaluations_used >= cfg.eval_budget)
        throw budget_exhausted("evaluation budget of " + std::to_string(cfg.eval_budget) +
                               " already used");
    const auto values = detail::fitness_values(pop);
    const std::size_t n = pop.size();
    const std::size_t elites = std::min(cfg.elite_count, n);
    const std::size_t slots = n - elites;
    const auto ranked = detail::ranking(values);

    Population next;
    next.generation = pop.generation + 1;
    next.evaluations_used = pop.evaluations_used;
    next.members.reserve(n);
    for (std::size_t r = 0; r < elites; ++r) next.members.push_back(pop.members[ranked[r]]);
    if (slots == 0) return next;

    const bool single_child = cfg.crossover == CrossoverKind::HC;
    const std::size_t matings = single_child ? slots : (slots + 1) / 2;
    const auto parents = select_parents(pop, 2 * matings, rng);

    std::vector<Genome> children;
    children.reserve(2 * matings);
    for (std::size_t m = 0; m < matings && children.size() < slots; ++m) {
        std::size_t a = parents[2 * m];
        std::size_t b = parents[2 * m + 1];
        const bool mate = rng.uniform01() < cfg.crossover_rate;
        if (single_child) {
            if (values[b] < values[a]) std::swap(a, b);
            if (mate)
                children.push_back(std::move(heuristic(pop.members[a].genome, pop.members[b].genome,
                                                       cfg.crossover_params)
                                                 .children.front()));
            else
                children.push_back(pop.members[a].genome);
            continue;
        }
        if (mate) {
            auto outcome = apply_crossover(cfg.crossover, pop.members[a].genome,
                                           pop.members[b].genome, cfg.crossover_params, rng);
            for (auto& child : outcome.children) children.push_back(std::move(child));
        } else {
            children.push_back(pop.members[a].genome);
            children.push_back(pop.members[b].genome);
        }
    }
    // an odd slot count leaves one surplus child; the last one is dropped
    children.resize(slots);

    for (auto& child : children) {
        child = gaussian_mutate(std::move(child), bounds, cfg.mutation_rate,
                                cfg.mutation_sigma_fraction, rng);
        child = clamp(std::move(child), bounds);
    }

    const std::size_t remaining = cfg.eval_budget - next.evaluations_used;
    const std::size_t admitted = std::min(slots, remaining);
    for (std::size_t c = 0; c < admitted; ++c) {
        const double value = static_cast<double>(objective(std::span<const double>(children[c])));
        ++next.evaluations_used;
        next.members.push_back(Individual{std::move(children[c]), value});
    }
    // budget ran out mid-generation: keep the prior generation's next-ranked members
    for (std::size_t r = elites; next.members.size() < n; ++r)
        next.members.push_back(pop.members[ranked[r]]);
    return next;
}

inline const Individual& best_member(const Population& pop) {
    const auto values = detail::fitness_values(pop);
    return pop.members[detail::ranking(values).front()];
}

/// Full run on an arbitrary objective over `bounds`^dimension.
template <Objective F>
RunResult run_objective(const GaConfig& cfg, const Bounds& bounds, const F& objective) {
    cfg.validate();
    RngStream rng{cfg.seed};
    Population pop = init_population(cfg.dimension, bounds, cfg.population_size, rng);
    evaluate_population(pop, objective, cfg.eval_budget);

    RunResult result;
    result.seed = cfg.seed;
    auto record = [&](const Population& p) {
        const Individual& best = best_member(p);
        if (*best.fitness < result.best_value) {
            result.best_value = *best.fitness;
            result.best_genome = best.genome;
        }
        result.best_by_generation.push_back(result.best_value);
    };
    record(pop);
    while (pop.evaluations_used < cfg.eval_budget) {
        pop = step(pop, cfg, bounds, objective, rng);
        record(pop);
    }
    result.evaluations_used = pop.evaluations_used;
    result.generations = pop.generation;
    return result;
}

inline RunResult run(const GaConfig& cfg, FunctionId id) {
    cfg.validate();
    const FunctionSpec spec = spec_of(id, cfg.dimension, cfg.f4_variant);
    return run_objective(cfg, spec.bounds,
                         [&spec](std::span<const double> x) { return evaluate(spec, x); });
}

} // namespace ringga
