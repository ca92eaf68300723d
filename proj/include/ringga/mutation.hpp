#pragma once

#include <span>

#include "errors.hpp"
#include "genome.hpp"
#include "rng.hpp"

namespace ringga {

/// Per-gene Gaussian mutation.
///
/// Each gene is perturbed with probability `rate` by N(0, sigma^2),
/// sigma = sigma_fraction * (upper - lower), and the mutated gene is
/// clamped to the box. Untouched genes are returned bit for bit.
inline Genome gaussian_mutate(Genome genome, const Bounds& bounds, double rate,
                              double sigma_fraction, RngStream& rng) {
    if (!(rate >= 0.0 && rate <= 1.0)) throw invalid_parameter("mutation rate must lie in [0, 1]");
    if (!(sigma_fraction > 0.0)) throw invalid_parameter("mutation sigma fraction must be > 0");
    if (rate == 0.0) return genome;
    const double sigma = sigma_fraction * bounds.width();
    for (double& g : genome) {
        if (rng.uniform01() < rate) g = clamp_gene(g + sigma * rng.normal(), bounds);
    }
    return genome;
}

} // namespace ringga
