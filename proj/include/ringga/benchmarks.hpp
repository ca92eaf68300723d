#pragma once

/// @file benchmarks.hpp
/// @brief The six minimization test functions F1..F6 with their boxes and optima.
///
///   F1  sphere                      [-5.12, 5.12]     min 0 at 0
///   F2  axis parallel ellipsoid     [-5.12, 5.12]     min 0 at 0
///   F3  rotated ellipsoid           [-65.536, 65.536] min 0 at 0
///   F4  Schwefel, normalized by D   [-500, 500]       min -418.9829 at 420.968
///   F5  Rastrigin                   [-5.12, 5.12]     min 0 at 0
///   F6  Rosenbrock                  [-2.048, 2.048]   min 0 at 1
///
/// Evaluation is defined everywhere; the engine is responsible for keeping
/// genomes inside the box.

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "genome.hpp"

namespace ringga {

enum class FunctionId { F1, F2, F3, F4, F5, F6 };

inline constexpr std::array<FunctionId, 6> all_functions{
    FunctionId::F1, FunctionId::F2, FunctionId::F3,
    FunctionId::F4, FunctionId::F5, FunctionId::F6};

/// F4 is divided by D by default; `raw` keeps the plain sum.
enum class SchwefelVariant { normalized, raw };

constexpr std::string_view to_string(FunctionId id) noexcept {
    constexpr std::array<std::string_view, 6> tags{"F1", "F2", "F3", "F4", "F5", "F6"};
    return tags[static_cast<std::size_t>(id)];
}

constexpr std::string_view to_string(SchwefelVariant v) noexcept {
    return v == SchwefelVariant::normalized ? "normalized" : "raw";
}

constexpr std::string_view function_name(FunctionId id) noexcept {
    switch (id) {
    case FunctionId::F1: return "sphere";
    case FunctionId::F2: return "axis parallel hyper-ellipsoid";
    case FunctionId::F3: return "rotated hyper-ellipsoid";
    case FunctionId::F4: return "normalized Schwefel";
    case FunctionId::F5: return "generalized Rastrigin";
    case FunctionId::F6: return "Rosenbrock valley";
    }
    return "?";
}

inline std::optional<FunctionId> parse_function(std::string_view tag) noexcept {
    for (FunctionId id : all_functions) {
        auto name = to_string(id);
        if (tag.size() == name.size() &&
            (tag == name || (tag[0] == 'f' && tag.substr(1) == name.substr(1))))
            return id;
    }
    return std::nullopt;
}

struct FunctionSpec {
    FunctionId id = FunctionId::F1;
    std::size_t dimension = 0;
    Bounds bounds;
    /// Coordinate of the minimizer, repeated in every dimension.
    double optimum_point = 0.0;
    double optimum_value = 0.0;
    SchwefelVariant variant = SchwefelVariant::normalized;
};

namespace detail {
inline constexpr double schwefel_point = 420.968;
inline constexpr double schwefel_value = -418.9829;

inline std::size_t min_dimension(FunctionId id) noexcept {
    return id == FunctionId::F6 ? 2 : 1;
}
} // namespace detail

inline FunctionSpec spec_of(FunctionId id, std::size_t dimension,
                            SchwefelVariant variant = SchwefelVariant::normalized) {
    if (dimension < detail::min_dimension(id))
        throw invalid_parameter(std::string(to_string(id)) + " requires dimension >= " +
                                std::to_string(detail::min_dimension(id)));
    FunctionSpec spec{id, dimension, {}, 0.0, 0.0, variant};
    switch (id) {
    case FunctionId::F1:
    case FunctionId::F2:
    case FunctionId::F5:
        spec.bounds = Bounds{-5.12, 5.12};
        break;
    case FunctionId::F3:
        spec.bounds = Bounds{-65.536, 65.536};
        break;
    case FunctionId::F4:
        spec.bounds = Bounds{-500.0, 500.0};
        spec.optimum_point = detail::schwefel_point;
        spec.optimum_value = variant == SchwefelVariant::normalized
                                 ? detail::schwefel_value
                                 : detail::schwefel_value * static_cast<double>(dimension);
        break;
    case FunctionId::F6:
        spec.bounds = Bounds{-2.048, 2.048};
        spec.optimum_point = 1.0;
        break;
    }
    return spec;
}

inline double sphere(std::span<const double> x) noexcept {
    double sum = 0.0;
    for (double v : x) sum += v * v;
    return sum;
}

inline double axis_parallel_ellipsoid(std::span<const double> x) noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += static_cast<double>(i + 1) * x[i] * x[i];
    return sum;
}

inline double rotated_ellipsoid(std::span<const double> x) noexcept {
    double sum = 0.0;
    double prefix = 0.0;
    for (double v : x) {
        prefix += v;
        sum += prefix * prefix;
    }
    return sum;
}

inline double schwefel(std::span<const double> x, SchwefelVariant variant) noexcept {
    double sum = 0.0;
    for (double v : x) sum += -v * std::sin(std::sqrt(std::abs(v)));
    return variant == SchwefelVariant::normalized ? sum / static_cast<double>(x.size()) : sum;
}

inline double rastrigin(std::span<const double> x) noexcept {
    double sum = 10.0 * static_cast<double>(x.size());
    for (double v : x) sum += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
    return sum;
}

inline double rosenbrock(std::span<const double> x) noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = 1.0 - x[i];
        sum += 100.0 * a * a + b * b;
    }
    return sum;
}

inline double evaluate(FunctionId id, std::span<const double> x,
                       SchwefelVariant variant = SchwefelVariant::normalized) {
    if (x.empty()) throw invalid_parameter("cannot evaluate an empty genome");
    if (x.size() < detail::min_dimension(id))
        throw invalid_parameter(std::string(to_string(id)) + " requires at least " +
                                std::to_string(detail::min_dimension(id)) + " genes");
    switch (id) {
    case FunctionId::F1: return sphere(x);
    case FunctionId::F2: return axis_parallel_ellipsoid(x);
    case FunctionId::F3: return rotated_ellipsoid(x);
    case FunctionId::F4: return schwefel(x, variant);
    case FunctionId::F5: return rastrigin(x);
    case FunctionId::F6: return rosenbrock(x);
    }
    return 0.0;
}

inline double evaluate(const FunctionSpec& spec, std::span<const double> x) {
    return evaluate(spec.id, x, spec.variant);
}

inline Population init_population(const FunctionSpec& spec, std::size_t n, RngStream& rng) {
    return init_population(spec.dimension, spec.bounds, n, rng);
}

} // namespace ringga
