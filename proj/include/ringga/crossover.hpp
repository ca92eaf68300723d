#pragma once

/// @file crossover.hpp
/// @brief Two-parent recombination operators for fixed-length genomes.
///
/// Structural operators (single point, two point, ring) only move genes
/// around and are templates over the gene type, so the same code runs on
/// real genomes and on the integer-tagged genomes used for offspring
/// enumeration. The arithmetic family (intermediate, heuristic,
/// arithmetic) is defined for real genomes.
///
/// Every randomized operator has a `*_at` / `*_with` twin that takes the
/// random choice explicitly. The randomized form draws the choice and
/// delegates, and records it in the outcome metadata.
///
/// Outputs are not clamped; bound repair belongs to the engine.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "genome.hpp"
#include "rng.hpp"

namespace ringga {

enum class CrossoverKind { SPC, TPC, IC, HC, AC, RC };

inline constexpr std::array<CrossoverKind, 6> all_crossovers{
    CrossoverKind::SPC, CrossoverKind::TPC, CrossoverKind::IC,
    CrossoverKind::HC,  CrossoverKind::AC,  CrossoverKind::RC};

constexpr std::string_view to_string(CrossoverKind kind) noexcept {
    constexpr std::array<std::string_view, 6> tags{"SPC", "TPC", "IC", "HC", "AC", "RC"};
    return tags[static_cast<std::size_t>(kind)];
}

constexpr std::string_view crossover_name(CrossoverKind kind) noexcept {
    switch (kind) {
    case CrossoverKind::SPC: return "single point";
    case CrossoverKind::TPC: return "two point";
    case CrossoverKind::IC: return "intermediate";
    case CrossoverKind::HC: return "heuristic";
    case CrossoverKind::AC: return "arithmetic";
    case CrossoverKind::RC: return "ring";
    }
    return "?";
}

/// Accepts the short tag in either case ("rc", "RC").
inline std::optional<CrossoverKind> parse_crossover(std::string_view tag) noexcept {
    for (CrossoverKind kind : all_crossovers) {
        auto name = to_string(kind);
        if (tag.size() != name.size()) continue;
        bool same = true;
        for (std::size_t i = 0; i < tag.size(); ++i) {
            char c = tag[i];
            if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
            same = same && c == name[i];
        }
        if (same) return kind;
    }
    return std::nullopt;
}

/// True for operators that only rearrange parent genes.
constexpr bool is_structural(CrossoverKind kind) noexcept {
    return kind == CrossoverKind::SPC || kind == CrossoverKind::TPC || kind == CrossoverKind::RC;
}

struct CrossoverParams {
    /// Scale of the intermediate step; 1 keeps children inside the parents' box.
    double ic_ratio = 1.0;
    /// Extrapolation factor of the heuristic operator.
    double hc_ratio = 1.2;

    void validate() const {
        if (!(ic_ratio >= 0.0)) throw invalid_parameter("ic_ratio must be >= 0");
        if (!(hc_ratio > 0.0)) throw invalid_parameter("hc_ratio must be > 0");
    }

    friend bool operator==(const CrossoverParams&, const CrossoverParams&) = default;
};

/// Random choices made by one mating event.
struct CrossoverMetadata {
    std::vector<std::size_t> cuts;
    std::optional<double> alpha;
    std::vector<double> rands;

    friend bool operator==(const CrossoverMetadata&, const CrossoverMetadata&) = default;
};

template <typename T>
struct BasicCrossoverOutcome {
    std::vector<std::vector<T>> children;
    CrossoverMetadata metadata;
};

using CrossoverOutcome = BasicCrossoverOutcome<double>;

namespace detail {
template <typename T>
void require_same_length(std::span<const T> p1, std::span<const T> p2) {
    if (p1.size() != p2.size())
        throw invalid_parameter("parent lengths differ: " + std::to_string(p1.size()) + " vs " +
                                std::to_string(p2.size()));
}
} // namespace detail

// ---------------------------------------------------------------------------
// Single point

template <typename T>
BasicCrossoverOutcome<T> spc_at(std::span<const T> p1, std::span<const T> p2, std::size_t cut) {
    detail::require_same_length(p1, p2);
    const std::size_t d = p1.size();
    if (d < 2) throw invalid_parameter("single point crossover needs at least 2 genes");
    if (cut < 1 || cut > d - 1) throw invalid_parameter("single point cut must lie in [1, D-1]");

    std::vector<T> c1(p1.begin(), p1.end());
    std::vector<T> c2(p2.begin(), p2.end());
    for (std::size_t g = cut; g < d; ++g) std::swap(c1[g], c2[g]);
    return {{std::move(c1), std::move(c2)}, {{cut}, std::nullopt, {}}};
}

template <typename T>
BasicCrossoverOutcome<T> spc(std::span<const T> p1, std::span<const T> p2, RngStream& rng) {
    detail::require_same_length(p1, p2);
    if (p1.size() < 2) throw invalid_parameter("single point crossover needs at least 2 genes");
    const std::size_t cut = 1 + rng.below(p1.size() - 1);
    return spc_at(p1, p2, cut);
}

// ---------------------------------------------------------------------------
// Two point

/// Exchanges the segment [first, second) with 1 <= first < second <= D-1.
template <typename T>
BasicCrossoverOutcome<T> tpc_at(std::span<const T> p1, std::span<const T> p2, std::size_t first,
                                std::size_t second) {
    detail::require_same_length(p1, p2);
    const std::size_t d = p1.size();
    if (d < 3) throw invalid_parameter("two point crossover needs at least 3 genes");
    if (first < 1 || first >= second || second > d - 1)
        throw invalid_parameter("two point cuts must satisfy 1 <= i < j <= D-1");

    std::vector<T> c1(p1.begin(), p1.end());
    std::vector<T> c2(p2.begin(), p2.end());
    for (std::size_t g = first; g < second; ++g) std::swap(c1[g], c2[g]);
    return {{std::move(c1), std::move(c2)}, {{first, second}, std::nullopt, {}}};
}

template <typename T>
BasicCrossoverOutcome<T> tpc(std::span<const T> p1, std::span<const T> p2, RngStream& rng) {
    detail::require_same_length(p1, p2);
    const std::size_t d = p1.size();
    if (d < 3) throw invalid_parameter("two point crossover needs at least 3 genes");
    // two distinct interior positions, ordered: uniform over the unordered pairs
    const std::size_t a = 1 + rng.below(d - 1);
    std::size_t b = 1 + rng.below(d - 2);
    if (b >= a) ++b;
    return tpc_at(p1, p2, std::min(a, b), std::max(a, b));
}

// ---------------------------------------------------------------------------
// Ring

/// Joins p1 and p2 into a ring of length 2D and cuts it at `cut`.
/// The first child reads D genes clockwise from the cut, the second reads
/// D genes anti-clockwise from the position before the cut. Together they
/// use every ring position exactly once.
template <typename T>
BasicCrossoverOutcome<T> ring_at(std::span<const T> p1, std::span<const T> p2, std::size_t cut) {
    detail::require_same_length(p1, p2);
    const std::size_t d = p1.size();
    if (d < 1) throw invalid_parameter("ring crossover needs at least 1 gene");
    const std::size_t n = 2 * d;
    if (cut >= n) throw invalid_parameter("ring cut must lie in [0, 2D-1]");

    auto at = [&](std::size_t pos) -> const T& { return pos < d ? p1[pos] : p2[pos - d]; };
    std::vector<T> c1;
    std::vector<T> c2;
    c1.reserve(d);
    c2.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
        c1.push_back(at((cut + k) % n));
        c2.push_back(at((cut + n - 1 - k) % n));
    }
    return {{std::move(c1), std::move(c2)}, {{cut}, std::nullopt, {}}};
}

template <typename T>
BasicCrossoverOutcome<T> ring(std::span<const T> p1, std::span<const T> p2, RngStream& rng) {
    detail::require_same_length(p1, p2);
    if (p1.empty()) throw invalid_parameter("ring crossover needs at least 1 gene");
    return ring_at(p1, p2, rng.below(2 * p1.size()));
}

// ---------------------------------------------------------------------------
// Intermediate, heuristic, arithmetic

/// child1 = p1 + r * ratio * (p2 - p1), child2 mirrors it with the same r.
inline CrossoverOutcome intermediate_with(std::span<const double> p1, std::span<const double> p2,
                                          const CrossoverParams& params,
                                          std::span<const double> rands) {
    detail::require_same_length(p1, p2);
    if (rands.size() != p1.size())
        throw invalid_parameter("intermediate crossover needs one random weight per gene");
    Genome c1(p1.size());
    Genome c2(p1.size());
    for (std::size_t g = 0; g < p1.size(); ++g) {
        const double w = rands[g] * params.ic_ratio;
        c1[g] = p1[g] + w * (p2[g] - p1[g]);
        c2[g] = p2[g] + w * (p1[g] - p2[g]);
    }
    return {{std::move(c1), std::move(c2)},
            {{}, std::nullopt, std::vector<double>(rands.begin(), rands.end())}};
}

inline CrossoverOutcome intermediate(std::span<const double> p1, std::span<const double> p2,
                                     const CrossoverParams& params, RngStream& rng) {
    detail::require_same_length(p1, p2);
    std::vector<double> rands(p1.size());
    for (double& r : rands) r = rng.uniform01();
    return intermediate_with(p1, p2, params, rands);
}

/// Single child extrapolated past `better`, away from `worse`. No randomness.
inline CrossoverOutcome heuristic(std::span<const double> better, std::span<const double> worse,
                                  const CrossoverParams& params) {
    detail::require_same_length(better, worse);
    Genome child(better.size());
    for (std::size_t g = 0; g < better.size(); ++g)
        // same line as worse + ratio * (better - worse), anchored on `better`
        // so that ratio 1 returns it exactly
        child[g] = better[g] + (params.hc_ratio - 1.0) * (better[g] - worse[g]);
    return {{std::move(child)}, {}};
}

inline CrossoverOutcome arithmetic_with(std::span<const double> p1, std::span<const double> p2,
                                        double alpha) {
    detail::require_same_length(p1, p2);
    Genome c1(p1.size());
    Genome c2(p1.size());
    for (std::size_t g = 0; g < p1.size(); ++g) {
        c1[g] = alpha * p1[g] + (1.0 - alpha) * p2[g];
        c2[g] = alpha * p2[g] + (1.0 - alpha) * p1[g];
    }
    return {{std::move(c1), std::move(c2)}, {{}, alpha, {}}};
}

/// One scalar alpha per mating event.
inline CrossoverOutcome arithmetic(std::span<const double> p1, std::span<const double> p2,
                                   RngStream& rng) {
    detail::require_same_length(p1, p2);
    return arithmetic_with(p1, p2, rng.uniform01());
}

/// Dispatches on `kind`. For HC the caller passes the fitter parent first.
inline CrossoverOutcome apply_crossover(CrossoverKind kind, std::span<const double> p1,
                                        std::span<const double> p2, const CrossoverParams& params,
                                        RngStream& rng) {
    switch (kind) {
    case CrossoverKind::SPC: return spc(p1, p2, rng);
    case CrossoverKind::TPC: return tpc(p1, p2, rng);
    case CrossoverKind::IC: return intermediate(p1, p2, params, rng);
    case CrossoverKind::HC: return heuristic(p1, p2, params);
    case CrossoverKind::AC: return arithmetic(p1, p2, rng);
    case CrossoverKind::RC: return ring(p1, p2, rng);
    }
    throw invalid_parameter("unknown crossover kind");
}

/// Smallest genome length each operator accepts.
constexpr std::size_t min_crossover_length(CrossoverKind kind) noexcept {
    switch (kind) {
    case CrossoverKind::SPC: return 2;
    case CrossoverKind::TPC: return 3;
    default: return 1;
    }
}

// Vector conveniences for the structural templates, which cannot deduce T
// through the implicit vector-to-span conversion.

template <typename T>
BasicCrossoverOutcome<T> spc_at(const std::vector<T>& p1, const std::vector<T>& p2,
                                std::size_t cut) {
    return spc_at(std::span<const T>(p1), std::span<const T>(p2), cut);
}

template <typename T>
BasicCrossoverOutcome<T> spc(const std::vector<T>& p1, const std::vector<T>& p2, RngStream& rng) {
    return spc(std::span<const T>(p1), std::span<const T>(p2), rng);
}

template <typename T>
BasicCrossoverOutcome<T> tpc_at(const std::vector<T>& p1, const std::vector<T>& p2,
                                std::size_t first, std::size_t second) {
    return tpc_at(std::span<const T>(p1), std::span<const T>(p2), first, second);
}

template <typename T>
BasicCrossoverOutcome<T> tpc(const std::vector<T>& p1, const std::vector<T>& p2, RngStream& rng) {
    return tpc(std::span<const T>(p1), std::span<const T>(p2), rng);
}

template <typename T>
BasicCrossoverOutcome<T> ring_at(const std::vector<T>& p1, const std::vector<T>& p2,
                                 std::size_t cut) {
    return ring_at(std::span<const T>(p1), std::span<const T>(p2), cut);
}

template <typename T>
BasicCrossoverOutcome<T> ring(const std::vector<T>& p1, const std::vector<T>& p2, RngStream& rng) {
    return ring(std::span<const T>(p1), std::span<const T>(p2), rng);
}

} // namespace ringga
