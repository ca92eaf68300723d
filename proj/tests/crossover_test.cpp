#include <ringga/crossover.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

using namespace ringga;

namespace {
using Sym = std::vector<int>;

Genome random_genome(std::size_t d, RngStream& rng, double lo = -10.0, double hi = 10.0) {
    Genome g(d);
    for (double& x : g) x = rng.uniform(lo, hi);
    return g;
}

template <typename T>
std::vector<T> sorted_concat(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> all = a;
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    return all;
}
} // namespace

// --- single point ----------------------------------------------------------

TEST(SinglePoint, HandTrace) {
    const auto out = spc_at(Genome{1, 2, 3, 4}, Genome{5, 6, 7, 8}, 2);
    ASSERT_EQ(out.children.size(), 2u);
    EXPECT_EQ(out.children[0], (Genome{1, 2, 7, 8}));
    EXPECT_EQ(out.children[1], (Genome{5, 6, 3, 4}));
    EXPECT_EQ(out.metadata.cuts, (std::vector<std::size_t>{2}));
}

TEST(SinglePoint, IdenticalParentsAreFixedPoint) {
    const Genome p{9, 9, 9};
    for (std::size_t k : {1u, 2u}) {
        const auto out = spc_at(p, p, k);
        EXPECT_EQ(out.children[0], p);
        EXPECT_EQ(out.children[1], p);
    }
}

TEST(SinglePoint, ThreeGeneEnumerationGivesFourChildren) {
    const Sym a{1, 2, 3};
    const Sym x{4, 5, 6};
    std::set<Sym> children;
    for (std::size_t k = 1; k <= 2; ++k)
        for (auto& c : spc_at(a, x, k).children) children.insert(c);
    EXPECT_EQ(children.size(), 4u);
}

TEST(SinglePoint, RandomCutStaysInterior) {
    RngStream rng{1};
    const Genome p1{1, 2, 3, 4, 5};
    const Genome p2{6, 7, 8, 9, 10};
    std::set<std::size_t> seen;
    for (int t = 0; t < 2000; ++t) {
        const auto out = spc(p1, p2, rng);
        const std::size_t k = out.metadata.cuts.at(0);
        ASSERT_GE(k, 1u);
        ASSERT_LE(k, 4u);
        EXPECT_EQ(out.children, spc_at(p1, p2, k).children);
        seen.insert(k);
    }
    EXPECT_EQ(seen.size(), 4u);
}

TEST(SinglePoint, Errors) {
    RngStream rng{1};
    EXPECT_THROW(spc(Genome{1}, Genome{2}, rng), invalid_parameter);
    EXPECT_THROW(spc(Genome{1, 2}, Genome{2}, rng), invalid_parameter);
    EXPECT_THROW(spc_at(Genome{1, 2, 3}, Genome{4, 5, 6}, 0), invalid_parameter);
    EXPECT_THROW(spc_at(Genome{1, 2, 3}, Genome{4, 5, 6}, 3), invalid_parameter);
}

// --- two point -------------------------------------------------------------

TEST(TwoPoint, HandTrace) {
    const auto out = tpc_at(Genome{1, 2, 3, 4, 5}, Genome{6, 7, 8, 9, 10}, 1, 3);
    EXPECT_EQ(out.children[0], (Genome{1, 7, 8, 4, 5}));
    EXPECT_EQ(out.children[1], (Genome{6, 2, 3, 9, 10}));
}

TEST(TwoPoint, IdenticalParentsAndSwapSymmetry) {
    const Sym p{4, 4, 4, 4, 4, 4};
    const Sym a{1, 2, 3, 4, 5, 6};
    const Sym b{7, 8, 9, 10, 11, 12};
    for (std::size_t i = 1; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
            const auto same = tpc_at(p, p, i, j);
            EXPECT_EQ(same.children[0], p);
            EXPECT_EQ(same.children[1], p);
            const auto ab = tpc_at(a, b, i, j);
            const auto ba = tpc_at(b, a, i, j);
            EXPECT_EQ(ab.children[0], ba.children[1]);
            EXPECT_EQ(ab.children[1], ba.children[0]);
        }
}

TEST(TwoPoint, RandomCutsCoverAllPairsUniformly) {
    RngStream rng{2};
    const Sym a{1, 2, 3, 4, 5};
    const Sym b{6, 7, 8, 9, 10};
    std::map<std::pair<std::size_t, std::size_t>, int> counts;
    constexpr int n = 60000;
    for (int t = 0; t < n; ++t) {
        const auto out = tpc(a, b, rng);
        const auto& cuts = out.metadata.cuts;
        ASSERT_EQ(cuts.size(), 2u);
        ASSERT_LT(cuts[0], cuts[1]);
        ASSERT_GE(cuts[0], 1u);
        ASSERT_LE(cuts[1], 4u);
        ++counts[{cuts[0], cuts[1]}];
    }
    ASSERT_EQ(counts.size(), 6u); // C(4, 2)
    for (const auto& [pair, c] : counts) EXPECT_NEAR(c, n / 6.0, 5.0 * std::sqrt(n / 6.0));
}

TEST(TwoPoint, Errors) {
    RngStream rng{1};
    EXPECT_THROW(tpc(Genome{1, 2}, Genome{3, 4}, rng), invalid_parameter);
    EXPECT_THROW(tpc_at(Genome{1, 2, 3}, Genome{4, 5, 6}, 2, 2), invalid_parameter);
    EXPECT_THROW(tpc_at(Genome{1, 2, 3}, Genome{4, 5, 6}, 1, 3), invalid_parameter);
}

// --- ring ------------------------------------------------------------------

TEST(Ring, HandTraces) {
    const Sym p1{1, 2, 3, 4}; // a b c d
    const Sym p2{5, 6, 7, 8}; // e f g h
    const auto c0 = ring_at(p1, p2, 0);
    EXPECT_EQ(c0.children[0], (Sym{1, 2, 3, 4}));
    EXPECT_EQ(c0.children[1], (Sym{8, 7, 6, 5}));
    const auto c2 = ring_at(p1, p2, 2);
    EXPECT_EQ(c2.children[0], (Sym{3, 4, 5, 6}));
    EXPECT_EQ(c2.children[1], (Sym{2, 1, 8, 7}));
}

TEST(Ring, DegenerateSingleGene) {
    const Genome p1{1.5};
    const Genome p2{-2.5};
    for (std::size_t c : {0u, 1u}) {
        const auto out = ring_at(p1, p2, c);
        std::multiset<double> got{out.children[0][0], out.children[1][0]};
        EXPECT_EQ(got, (std::multiset<double>{1.5, -2.5}));
    }
}

TEST(Ring, ChildrenPartitionTheRing) {
    RngStream rng{3};
    for (int t = 0; t < 2000; ++t) {
        const std::size_t d = 1 + rng.below(64);
        const Genome p1 = random_genome(d, rng);
        const Genome p2 = random_genome(d, rng);
        const auto out = ring(p1, p2, rng);
        ASSERT_LT(out.metadata.cuts.at(0), 2 * d);
        EXPECT_EQ(sorted_concat(out.children[0], out.children[1]), sorted_concat(p1, p2));
    }
}

TEST(Ring, EveryCutReachable) {
    RngStream rng{4};
    const Sym p1{1, 2, 3};
    const Sym p2{4, 5, 6};
    std::set<std::size_t> cuts;
    for (int t = 0; t < 600; ++t) cuts.insert(ring(p1, p2, rng).metadata.cuts.at(0));
    EXPECT_EQ(cuts.size(), 6u);
}

TEST(Ring, Errors) {
    RngStream rng{1};
    EXPECT_THROW(ring(Genome{}, Genome{}, rng), invalid_parameter);
    EXPECT_THROW(ring(Genome{1, 2}, Genome{1}, rng), invalid_parameter);
    EXPECT_THROW(ring_at(Genome{1, 2}, Genome{3, 4}, 4), invalid_parameter);
}

TEST(Structural, ChildGenesComeFromParents) {
    RngStream rng{5};
    for (int t = 0; t < 1000; ++t) {
        const std::size_t d = 3 + rng.below(20);
        const Genome p1 = random_genome(d, rng);
        const Genome p2 = random_genome(d, rng);
        const auto all = sorted_concat(p1, p2);
        const std::multiset<double> pool(all.begin(), all.end());
        for (const auto& out : {spc(p1, p2, rng), tpc(p1, p2, rng), ring(p1, p2, rng)}) {
            ASSERT_EQ(out.children.size(), 2u);
            EXPECT_EQ(sorted_concat(out.children[0], out.children[1]), all);
            for (const auto& child : out.children) {
                ASSERT_EQ(child.size(), d);
                for (double g : child) EXPECT_TRUE(pool.count(g) > 0);
            }
        }
    }
}

// --- intermediate ----------------------------------------------------------

TEST(Intermediate, ZeroWeightsReturnParents) {
    const Genome p1{1, 2, 3};
    const Genome p2{-4, 5, 0.5};
    const auto out = intermediate_with(p1, p2, {}, std::vector<double>(3, 0.0));
    EXPECT_EQ(out.children[0], p1);
    EXPECT_EQ(out.children[1], p2);
}

TEST(Intermediate, Substitution) {
    const auto out = intermediate_with(Genome{0, 0}, Genome{2, 4}, {1.0, 1.2}, std::vector<double>{0.5, 0.5});
    EXPECT_EQ(out.children[0], (Genome{1, 2}));
    EXPECT_EQ(out.children[1], (Genome{1, 2}));
}

TEST(Intermediate, ChildrenStayInParentBox) {
    RngStream rng{6};
    for (int t = 0; t < 10000; ++t) {
        const std::size_t d = 1 + rng.below(16);
        const Genome p1 = random_genome(d, rng);
        const Genome p2 = random_genome(d, rng);
        const auto out = intermediate(p1, p2, {}, rng);
        ASSERT_EQ(out.children.size(), 2u);
        ASSERT_EQ(out.metadata.rands.size(), d);
        for (const auto& child : out.children)
            for (std::size_t g = 0; g < d; ++g) {
                ASSERT_GE(child[g], std::min(p1[g], p2[g]));
                ASSERT_LE(child[g], std::max(p1[g], p2[g]));
            }
    }
}

TEST(Intermediate, Errors) {
    RngStream rng{1};
    EXPECT_THROW(intermediate(Genome{1, 2}, Genome{1}, {}, rng), invalid_parameter);
    EXPECT_THROW(intermediate_with(Genome{1, 2}, Genome{1, 2}, {}, std::vector<double>{0.5}),
                 invalid_parameter);
}

// --- heuristic -------------------------------------------------------------

TEST(Heuristic, Substitution) {
    const auto out = heuristic(Genome{1}, Genome{0}, {});
    ASSERT_EQ(out.children.size(), 1u);
    EXPECT_DOUBLE_EQ(out.children[0][0], 1.2);
}

TEST(Heuristic, DegenerateCases) {
    for (double ratio : {0.3, 1.2, 7.0})
        EXPECT_EQ(heuristic(Genome{3, 3}, Genome{3, 3}, {1.0, ratio}).children[0], (Genome{3, 3}));
    RngStream rng{7};
    for (int t = 0; t < 100; ++t) {
        const Genome b = random_genome(5, rng);
        const Genome w = random_genome(5, rng);
        const auto once = heuristic(b, w, {1.0, 1.0});
        EXPECT_EQ(once.children[0], b);
        EXPECT_EQ(heuristic(b, w, {}).children[0], heuristic(b, w, {}).children[0]);
    }
    EXPECT_THROW(heuristic(Genome{1, 2}, Genome{1}, {}), invalid_parameter);
}

// --- arithmetic ------------------------------------------------------------

TEST(Arithmetic, Substitution) {
    const auto one = arithmetic_with(Genome{1, -2}, Genome{3, 4}, 1.0);
    EXPECT_EQ(one.children[0], (Genome{1, -2}));
    EXPECT_EQ(one.children[1], (Genome{3, 4}));
    const auto quarter = arithmetic_with(Genome{0, 0}, Genome{4, 8}, 0.25);
    EXPECT_EQ(quarter.children[0], (Genome{3, 6}));
    EXPECT_EQ(quarter.children[1], (Genome{1, 2}));
    EXPECT_EQ(quarter.metadata.alpha, 0.25);
}

TEST(Arithmetic, MirrorPairPreservesSum) {
    RngStream rng{8};
    for (int t = 0; t < 10000; ++t) {
        const std::size_t d = 1 + rng.below(16);
        const Genome p1 = random_genome(d, rng, -500, 500);
        const Genome p2 = random_genome(d, rng, -500, 500);
        const auto out = arithmetic(p1, p2, rng);
        ASSERT_TRUE(out.metadata.alpha.has_value());
        for (std::size_t g = 0; g < d; ++g) {
            const double expected = p1[g] + p2[g];
            const double scale = std::max({std::abs(p1[g]), std::abs(p2[g]), 1e-300});
            ASSERT_NEAR(out.children[0][g] + out.children[1][g], expected, 1e-12 * scale);
        }
    }
}

// --- dispatch --------------------------------------------------------------

TEST(Dispatch, ChildCountsAndLengths) {
    RngStream rng{9};
    const Genome p1 = random_genome(6, rng);
    const Genome p2 = random_genome(6, rng);
    for (CrossoverKind kind : all_crossovers) {
        const auto out = apply_crossover(kind, p1, p2, {}, rng);
        EXPECT_EQ(out.children.size(), kind == CrossoverKind::HC ? 1u : 2u) << to_string(kind);
        for (const auto& c : out.children) EXPECT_EQ(c.size(), 6u);
    }
}

TEST(Dispatch, SameStreamSameChildren) {
    const Genome p1{1, 2, 3, 4, 5, 6};
    const Genome p2{-1, -2, -3, -4, -5, -6};
    for (CrossoverKind kind : all_crossovers) {
        RngStream a{77};
        RngStream b{77};
        EXPECT_EQ(apply_crossover(kind, p1, p2, {}, a).children,
                  apply_crossover(kind, p1, p2, {}, b).children);
    }
}

TEST(Params, Validation) {
    EXPECT_NO_THROW((CrossoverParams{}.validate()));
    EXPECT_THROW((CrossoverParams{-0.1, 1.2}.validate()), invalid_parameter);
    EXPECT_THROW((CrossoverParams{1.0, 0.0}.validate()), invalid_parameter);
}

TEST(Kinds, TagsRoundTrip) {
    for (CrossoverKind kind : all_crossovers) EXPECT_EQ(parse_crossover(to_string(kind)), kind);
    EXPECT_EQ(parse_crossover("rc"), CrossoverKind::RC);
    EXPECT_FALSE(parse_crossover("xx").has_value());
}
