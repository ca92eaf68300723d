#pragma once

/// @file selection.hpp
/// @brief Linear rank scaling and stochastic universal sampling.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"

namespace ringga {

/// Linear ranking weights for a minimization problem, selection pressure 2.
///
/// The best value (rank 1) receives 2, the worst 0, and the weights in
/// between fall linearly, so they sum to N. Ties keep their original
/// index order. Weights are returned in input order.
inline std::vector<double> rank_scale(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0) throw invalid_parameter("rank_scale needs at least one value");
    if (n == 1) return {1.0};

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    constexpr double pressure = 2.0;
    std::vector<double> weights(n);
    const double denom = static_cast<double>(n - 1);
    for (std::size_t pos = 0; pos < n; ++pos) {
        const double below = static_cast<double>(n - 1 - pos); // N - r with r = pos + 1
        weights[order[pos]] = 2.0 - pressure + 2.0 * (pressure - 1.0) * below / denom;
    }
    return weights;
}

namespace detail {
inline double checked_total(std::span<const double> weights) {
    if (weights.empty()) throw invalid_parameter("selection needs at least one weight");
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w))
            throw invalid_parameter("selection weights must be finite and nonnegative");
        total += w;
    }
    if (!(total > 0.0)) throw invalid_parameter("selection weights must not all be zero");
    return total;
}
} // namespace detail

/// Stochastic universal sampling with an explicit first pointer.
///
/// Pointers sit at offset + k * S / count. `offset` must lie in
/// [0, S / count). Returned indices are in ascending order.
inline std::vector<std::size_t> sus_select_at(std::span<const double> weights, std::size_t count,
                                              double offset) {
    const double total = detail::checked_total(weights);
    if (count == 0) throw invalid_parameter("selection count must be positive");
    const double spacing = total / static_cast<double>(count);
    if (!(offset >= 0.0) || !(offset < spacing))
        throw invalid_parameter("selection offset must lie in [0, S/count)");

    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (weights[i] > 0.0) last_positive = i;

    std::vector<std::size_t> picked;
    picked.reserve(count);
    std::size_t index = 0;
    double cumulative = weights[0];
    for (std::size_t k = 0; k < count; ++k) {
        const double pointer = offset + static_cast<double>(k) * spacing;
        while (index < last_positive && !(pointer < cumulative)) {
            ++index;
            cumulative += weights[index];
        }
        picked.push_back(index);
    }
    return picked;
}

inline std::vector<std::size_t> sus_select(std::span<const double> weights, std::size_t count,
                                           RngStream& rng) {
    const double total = detail::checked_total(weights);
    if (count == 0) throw invalid_parameter("selection count must be positive");
    const double spacing = total / static_cast<double>(count);
    double offset = rng.uniform01() * spacing;
    if (!(offset < spacing)) offset = 0.0;
    return sus_select_at(weights, count, offset);
}

/// Fisher-Yates shuffle driven by RngStream, stable across standard libraries.
template <typename T>
void shuffle(std::vector<T>& items, RngStream& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = rng.below(i);
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace ringga
