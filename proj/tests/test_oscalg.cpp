#include <gtest/gtest.h>

#include "doubling/oscalg.hpp"
#include "doubling/sampling.hpp"

using namespace doubling;

namespace {
const DoubleCase dh_cases[] = {DoubleCase::DualHahnI, DoubleCase::DualHahnII, DoubleCase::DualHahnIII};
}

TEST(Algebra, RandomInstances) {
    Rng rng(19);
    for (auto c : dh_cases)
        for (long N = 1; N <= 10; ++N) {
            DualHahnParams p{random_rational(rng, -1, 4, 7), random_rational(rng, -1, 4, 7), N};
            auto gen = build_generators(c, p);
            EXPECT_TRUE(verify_algebra(gen, p).is_zero()) << to_string(c) << " " << describe(p);
            EXPECT_TRUE(verify_algebra(gen, p, structure_constants(c, p)).is_zero()) << to_string(c);
        }
}

TEST(Algebra, GradingRelations) {
    DualHahnParams p{Rational(1, 2), Rational(1, 3), 4};
    auto r = verify_algebra(DoubleCase::DualHahnIII, p);
    for (const auto& v : r.parity_jpm) EXPECT_TRUE(v.is_zero());
    for (const auto& v : r.j0_jplus) EXPECT_TRUE(v.is_zero());
    for (const auto& v : r.j0_jminus) EXPECT_TRUE(v.is_zero());
}

TEST(Algebra, Su2Coincidence) {
    DualHahnParams p{Rational(-1, 2), Rational(-1, 2), 5};
    auto k = structure_constants(DoubleCase::DualHahnI, p);
    EXPECT_EQ(k.tau, 1);
    EXPECT_TRUE(k.nu.is_zero());
    EXPECT_TRUE(k.sigma.is_zero());
    EXPECT_TRUE(k.rho.is_zero());
    EXPECT_TRUE(verify_algebra(DoubleCase::DualHahnI, p).is_zero());
}

TEST(Algebra, DualHahnOneNu) {
    DualHahnParams p{Rational(2, 7), Rational(5, 3), 3};
    EXPECT_EQ(structure_constants(DoubleCase::DualHahnI, p).nu, p.gamma + p.delta + 1);
}

TEST(Algebra, NoQuadraticTermOnLine) {
    Rational g(3, 4);
    DualHahnParams p{g, -g - 1, 4};
    auto k = structure_constants(DoubleCase::DualHahnI, p);
    EXPECT_TRUE(k.nu.is_zero());
    EXPECT_FALSE(k.sigma.is_zero());
}

TEST(Algebra, DualHahnThreeEqualParameters) {
    DualHahnParams p{Rational(2, 3), Rational(2, 3), 3};
    EXPECT_TRUE(structure_constants(DoubleCase::DualHahnIII, p).nu.is_zero());
}

TEST(Algebra, DualHahnTwoOrientation) {
    DualHahnParams p{Rational(1, 2), Rational(1, 3), 3};
    auto k = structure_constants(DoubleCase::DualHahnII, p);
    EXPECT_EQ(k.tau, -1);
    EXPECT_EQ(k.nu, p.gamma + p.delta + 2 * 3 + 1);
}

TEST(Algebra, NonDualHahnRejected) {
    EXPECT_THROW(build_generators(DoubleCase::HahnI, HahnParams{1, 1, 2}), Unsupported);
    EXPECT_THROW(build_generators(DoubleCase::DualHahnI, HahnParams{1, 1, 2}), FamilyMismatch);
}
