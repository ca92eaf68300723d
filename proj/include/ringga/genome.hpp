#pragma once

/// @file genome.hpp
/// @brief Value types shared by the operators, the engine and the harness.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"

namespace ringga {

/// A real-coded chromosome. Its length is the problem dimension.
using Genome = std::vector<double>;

/// Closed box [lower, upper] applied to every coordinate.
struct Bounds {
    double lower = 0.0;
    double upper = 0.0;

    Bounds() = default;
    Bounds(double lo, double hi) : lower{lo}, upper{hi} {
        if (!(lo < hi))
            throw invalid_parameter("bounds require lower < upper, got [" + std::to_string(lo) +
                                    ", " + std::to_string(hi) + "]");
    }

    double width() const noexcept { return upper - lower; }
    bool contains(double x) const noexcept { return lower <= x && x <= upper; }

    friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Genome plus its cached objective value. `fitness` is empty until evaluated.
struct Individual {
    Genome genome;
    std::optional<double> fitness;

    bool evaluated() const noexcept { return fitness.has_value(); }

    friend bool operator==(const Individual&, const Individual&) = default;
};

struct Population {
    std::vector<Individual> members;
    std::size_t generation = 0;
    std::size_t evaluations_used = 0;

    std::size_t size() const noexcept { return members.size(); }

    friend bool operator==(const Population&, const Population&) = default;
};

inline double clamp_gene(double gene, const Bounds& bounds) noexcept {
    return std::min(bounds.upper, std::max(bounds.lower, gene));
}

/// Maps each gene onto the box. In-bounds genomes come back unchanged.
inline Genome clamp(Genome genome, const Bounds& bounds) noexcept {
    for (double& g : genome) g = clamp_gene(g, bounds);
    return genome;
}

inline bool within(std::span<const double> genome, const Bounds& bounds) noexcept {
    return std::all_of(genome.begin(), genome.end(),
                       [&](double g) { return bounds.contains(g); });
}

/// `n` unevaluated individuals with genes drawn uniformly over the box.
inline Population init_population(std::size_t dimension, const Bounds& bounds, std::size_t n,
                                  RngStream& rng) {
    if (n < 2) throw invalid_parameter("population size must be at least 2");
    if (dimension < 1) throw invalid_parameter("dimension must be at least 1");
    Population pop;
    pop.members.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Genome genes(dimension);
        for (double& g : genes)
            g = clamp_gene(bounds.lower + bounds.width() * rng.uniform01(), bounds);
        pop.members.push_back(Individual{std::move(genes), std::nullopt});
    }
    return pop;
}

} // namespace ringga
