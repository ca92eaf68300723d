#include <ringga/benchmarks.hpp>
#include <ringga/genome.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace ringga;

TEST(Bounds, RejectsEmptyBox) {
    EXPECT_THROW(Bounds(1.0, 1.0), invalid_parameter);
    EXPECT_THROW(Bounds(2.0, 1.0), invalid_parameter);
    EXPECT_NO_THROW(Bounds(-1.0, 1.0));
}

TEST(Clamp, MapsOutsideGenesOntoTheBox) {
    const Bounds b{-5.12, 5.12};
    EXPECT_EQ(clamp({6.0, -6.0, 1.0}, b), (Genome{5.12, -5.12, 1.0}));
    EXPECT_EQ(clamp({0.0, 0.0, 0.0}, b), (Genome{0.0, 0.0, 0.0}));
    EXPECT_EQ(clamp({-500.0001}, Bounds{-500.0, 500.0}), (Genome{-500.0}));
}

TEST(Clamp, IsIdempotent) {
    RngStream rng{17};
    const Bounds b{-2.048, 2.048};
    for (int t = 0; t < 1000; ++t) {
        Genome g(8);
        for (double& x : g) x = rng.uniform(-10.0, 10.0);
        const Genome once = clamp(g, b);
        EXPECT_EQ(clamp(once, b), once);
        EXPECT_TRUE(within(once, b));
    }
}

TEST(InitPopulation, ShapeAndBounds) {
    RngStream rng{42};
    const auto spec = spec_of(FunctionId::F1, 30);
    const Population pop = init_population(spec, 20, rng);
    ASSERT_EQ(pop.size(), 20u);
    EXPECT_EQ(pop.generation, 0u);
    EXPECT_EQ(pop.evaluations_used, 0u);
    for (const auto& ind : pop.members) {
        EXPECT_EQ(ind.genome.size(), 30u);
        EXPECT_FALSE(ind.evaluated());
        EXPECT_TRUE(within(ind.genome, spec.bounds));
    }
}

TEST(InitPopulation, DeterministicForSeed) {
    const auto spec = spec_of(FunctionId::F3, 4);
    RngStream a{123};
    RngStream b{123};
    EXPECT_EQ(init_population(spec, 2, a), init_population(spec, 2, b));
}

TEST(InitPopulation, UniformMeanOnSchwefelBox) {
    RngStream rng{7};
    const auto spec = spec_of(FunctionId::F4, 5);
    const Population pop = init_population(spec, 100, rng);
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& ind : pop.members)
        for (double g : ind.genome) {
            sum += g;
            ++n;
        }
    // uniform on [-500, 500]: sd = 1000 / sqrt(12)
    const double se = 1000.0 / std::sqrt(12.0) / std::sqrt(static_cast<double>(n));
    EXPECT_LT(std::abs(sum / static_cast<double>(n)), 3.0 * se);
}

TEST(InitPopulation, RejectsTinyPopulation) {
    RngStream rng{1};
    EXPECT_THROW(init_population(spec_of(FunctionId::F1, 3), 1, rng), invalid_parameter);
}
