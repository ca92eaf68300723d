#pragma once

/// @file variety.hpp
/// @brief Exhaustive count of the distinct children a structural operator
/// can produce.
///
/// Parents are fixed to p1 = [1..d] and p2 = [d+1..2d], so every gene is a
/// distinct symbol and two children are equal only when they are the same
/// arrangement. Every random choice of the operator is enumerated and both
/// children of each choice are collected.

#include <cstdio>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "crossover.hpp"
#include "errors.hpp"

namespace ringga {

inline constexpr std::size_t max_variety_length = 12;

using SymbolGenome = std::vector<int>;

struct OffspringSet {
    CrossoverKind op = CrossoverKind::RC;
    std::size_t parent_length = 0;
    std::set<SymbolGenome> children;
    /// Children produced before deduplication (choices x 2).
    std::size_t raw_count = 0;

    std::size_t distinct() const noexcept { return children.size(); }
};

inline std::pair<SymbolGenome, SymbolGenome> symbolic_parents(std::size_t d) {
    SymbolGenome p1(d);
    SymbolGenome p2(d);
    std::iota(p1.begin(), p1.end(), 1);
    std::iota(p2.begin(), p2.end(), static_cast<int>(d) + 1);
    return {std::move(p1), std::move(p2)};
}

/// True when `op` has at least one valid choice at length `d`.
inline bool variety_applicable(CrossoverKind op, std::size_t d) noexcept {
    return is_structural(op) && d >= min_crossover_length(op);
}

inline OffspringSet enumerate_offspring(CrossoverKind op, std::size_t d) {
    if (!is_structural(op))
        throw invalid_parameter("offspring enumeration supports SPC, TPC and RC only, got " +
                                std::string(to_string(op)));
    if (d < 1 || d > max_variety_length)
        throw invalid_parameter("parent length must lie in [1, " +
                                std::to_string(max_variety_length) + "]");

    OffspringSet result{op, d, {}, 0};
    if (!variety_applicable(op, d)) return result;

    const auto [p1, p2] = symbolic_parents(d);
    auto collect = [&](BasicCrossoverOutcome<int> outcome) {
        for (auto& child : outcome.children) {
            ++result.raw_count;
            result.children.insert(std::move(child));
        }
    };
    switch (op) {
    case CrossoverKind::SPC:
        for (std::size_t k = 1; k < d; ++k) collect(spc_at(p1, p2, k));
        break;
    case CrossoverKind::TPC:
        for (std::size_t i = 1; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) collect(tpc_at(p1, p2, i, j));
        break;
    case CrossoverKind::RC:
        for (std::size_t c = 0; c < 2 * d; ++c) collect(ring_at(p1, p2, c));
        break;
    default:
        break;
    }
    return result;
}

/// One row per length in [d_min, d_max]: distinct-children counts for SPC,
/// TPC and RC, and the RC/SPC ratio. "n/a" marks an operator with no valid
/// cut at that length.
inline std::string variety_report(std::size_t d_min, std::size_t d_max) {
    if (d_min < 1 || d_min > d_max || d_max > max_variety_length)
        throw invalid_parameter("variety range must satisfy 1 <= d_min <= d_max <= " +
                                std::to_string(max_variety_length));
    std::string out;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%4s %8s %8s %8s %10s\n", "D", "SPC", "TPC", "RC", "RC/SPC");
    out += buf;
    auto cell = [](CrossoverKind op, std::size_t d) -> std::string {
        if (!variety_applicable(op, d)) return "n/a";
        return std::to_string(enumerate_offspring(op, d).distinct());
    };
    for (std::size_t d = d_min; d <= d_max; ++d) {
        std::string ratio = "n/a";
        if (variety_applicable(CrossoverKind::SPC, d)) {
            const double r = static_cast<double>(enumerate_offspring(CrossoverKind::RC, d).distinct()) /
                             static_cast<double>(enumerate_offspring(CrossoverKind::SPC, d).distinct());
            std::snprintf(buf, sizeof buf, "%.3f", r);
            ratio = buf;
        }
        std::snprintf(buf, sizeof buf, "%4zu %8s %8s %8s %10s\n", d,
                      cell(CrossoverKind::SPC, d).c_str(), cell(CrossoverKind::TPC, d).c_str(),
                      cell(CrossoverKind::RC, d).c_str(), ratio.c_str());
        out += buf;
    }
    return out;
}

} // namespace ringga
