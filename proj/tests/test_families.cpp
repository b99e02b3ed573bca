#include <gtest/gtest.h>

#include "doubling/sampling.hpp"

using namespace doubling;

namespace {
const Rational half(1, 2), third(1, 3);
}

TEST(Hahn, FrozenValues) {
    HahnParams p{half, third, 3};
    EXPECT_EQ(hahn_eval(0, 2, p), Rational(1));
    EXPECT_EQ(hahn_eval(2, 0, p), Rational(1));
    EXPECT_EQ(hahn_eval(2, 1, p), Rational(-19, 27));
    EXPECT_EQ(hahn_eval(3, 2, p), Rational(56, 27));
    EXPECT_EQ(hahn_eval(1, 1, HahnParams{0, 0, 2}), Rational(0));
}

TEST(Hahn, DegreeAboveNIsRejected) {
    EXPECT_THROW(hahn_eval(4, 1, HahnParams{half, third, 3}), DegreeOutOfRange);
    EXPECT_THROW(hahn_eval(-1, 1, HahnParams{half, third, 3}), DegreeOutOfRange);
}

TEST(Hahn, PoleAtAlphaMinusOne) {
    EXPECT_THROW(hahn_eval(2, 3, HahnParams{-1, 0, 3}), DenominatorPole);
}

TEST(DualHahn, FrozenValues) {
    DualHahnParams p{half, third, 4};
    EXPECT_EQ(dual_hahn_eval(2, 3, p), Rational(-2, 27));
    EXPECT_EQ(dual_hahn_eval(3, 0, p), Rational(1));
    // Degree one: 1 - x(x+g+d+1)/((g+1)N).
    for (long x = 0; x <= 4; ++x)
        EXPECT_EQ(dual_hahn_eval(1, x, p), 1 - Rational(x) * (x + half + third + 1) / ((half + 1) * 4));
}

TEST(DualHahn, DualityWithHahn) {
    Rational g(2, 7), d(5, 3);
    long N = 5;
    for (long n = 0; n <= N; ++n)
        for (long x = 0; x <= N; ++x) EXPECT_EQ(dual_hahn_eval(n, x, {g, d, N}), hahn_eval(x, n, {g, d, N}));
}

TEST(DualHahn, LambdaFormMatchesGrid) {
    DualHahnParams p{half, third, 4};
    for (long x = 0; x <= 4; ++x)
        EXPECT_EQ(dual_hahn_eval_lambda(2, x * (x + half + third + 1), p), dual_hahn_eval(2, x, p));
}

TEST(Racah, FrozenValues) {
    auto p = RacahParams::with_alpha_minus_n(2, half, half, half);
    EXPECT_EQ(p.alpha(), Rational(-3));
    EXPECT_EQ(p.N(), 2);
    EXPECT_EQ(racah_eval(0, 1, p), Rational(1));
    EXPECT_EQ(racah_eval(2, 0, p), Rational(1));
    EXPECT_EQ(racah_eval(1, 1, p), Rational(5, 4));
    EXPECT_EQ(racah_eval(2, 1, p), Rational(1, 2));
    EXPECT_EQ(racah_eval(2, 2, RacahParams::with_alpha_minus_n(3, half, third, Rational(2, 5))), Rational(55, 29));
}

TEST(Racah, SelectorsDeriveN) {
    EXPECT_EQ(RacahParams::with_gamma_minus_n(4, half, third, half).N(), 4);
    auto p = RacahParams::with_beta_delta_minus_n(3, half, third, half);
    EXPECT_EQ(p.beta() + p.delta() + 1, Rational(-3));
    EXPECT_THROW(RacahParams(half, half, half, half, RacahMinusN::Alpha), InadmissibleParams);
}

TEST(Krawtchouk, Values) {
    for (long x = 0; x <= 2; ++x) EXPECT_EQ(krawtchouk_eval(1, x, half, 2), 1 - Rational(x));
    EXPECT_EQ(krawtchouk_eval(2, 1, third, 3), Rational(-1));
    EXPECT_EQ(krawtchouk_eval(0, 3, third, 3), Rational(1));
}

TEST(Krawtchouk, RecurrenceResidueVanishes) {
    KrawtchoukParams p{half, 6};
    auto rec = recurrence_data(p);
    for (long n = 0; n < 6; ++n)
        for (long x = 0; x <= 6; ++x) {
            Rational prev = n ? krawtchouk_eval(n - 1, x, half, 6) : Rational(0);
            Rational lhs = rec.Lambda(x) * krawtchouk_eval(n, x, half, 6);
            Rational rhs = rec.A(n) * krawtchouk_eval(n + 1, x, half, 6) -
                           (rec.A(n) + rec.C(n)) * krawtchouk_eval(n, x, half, 6) + rec.C(n) * prev;
            EXPECT_EQ(lhs, rhs) << "n=" << n << " x=" << x;
        }
}

TEST(Recurrence, DualHahnCoefficients) {
    DualHahnParams p{half, third, 5};
    auto rec = recurrence_data(p);
    EXPECT_EQ(rec.C(0), Rational(0));
    for (long n = 0; n <= 5; ++n) {
        EXPECT_EQ(rec.A(n), (n + half + 1) * Rational(n - 5));
        EXPECT_EQ(rec.C(n), n * (n - third - 5 - 1));
    }
}

TEST(Recurrence, ResidueVanishesForAllFamilies) {
    Rng rng(7);
    for (int trial = 0; trial < 8; ++trial) {
        long N = 2 + trial % 6;
        std::vector<FamilyParams> ps = {
            HahnParams{random_rational(rng, -1, 4, 7), random_rational(rng, -1, 4, 7), N},
            DualHahnParams{random_rational(rng, -1, 4, 7), random_rational(rng, -1, 4, 7), N},
            RacahParams::with_alpha_minus_n(N, random_fraction(rng, -1, 4), random_fraction(rng, -1, 4),
                                            random_fraction(rng, -1, 4)),
        };
        for (const auto& p : ps) {
            auto rec = recurrence_data(p);
            for (long n = 0; n < N; ++n)
                for (long x = 0; x <= N; ++x) {
                    Rational prev = n ? evaluate(p, n - 1, x) : Rational(0);
                    Rational res = rec.A(n) * evaluate(p, n + 1, x) - (rec.A(n) + rec.C(n)) * evaluate(p, n, x) +
                                   rec.C(n) * prev - rec.Lambda(x) * evaluate(p, n, x);
                    EXPECT_TRUE(res.is_zero()) << describe(p) << " n=" << n << " x=" << x;
                }
        }
    }
}

TEST(Recurrence, UpwardEvaluationMatchesSeries) {
    FamilyParams p = RacahParams::with_gamma_minus_n(6, Rational(3, 7), Rational(5, 2), Rational(-1, 3));
    for (long x = 0; x <= 6; ++x) {
        auto all = evaluate_all_degrees(p, x);
        for (long n = 0; n <= 6; ++n) EXPECT_EQ(all[n], evaluate(p, n, x));
    }
}

TEST(Weights, Hahn) {
    for (long x = 0; x <= 4; ++x) EXPECT_EQ(hahn_weight(x, {0, 0, 4}), Rational(1));
    HahnParams p{half, third, 3};
    EXPECT_EQ(hahn_weight(0, p), pochhammer(third + 1, 3) / factorial(3));
    EXPECT_EQ(hahn_weight(2, p), Rational(5, 2));
    EXPECT_EQ(hahn_norm(1, p), Rational(17255, 4374));
}

TEST(Weights, DualHahn) {
    DualHahnParams p{half, third, 4};
    EXPECT_EQ(dual_hahn_weight(2, p), Rational(1574640, 8997163));
    EXPECT_EQ(dual_hahn_norm(0, p), factorial(4) / pochhammer(third + 1, 4));
    EXPECT_EQ(dual_hahn_norm(1, p), Rational(27, 70));
}

TEST(Weights, OrthogonalitySums) {
    Rng rng(11);
    for (long N = 1; N <= 8; ++N) {
        HahnParams h{random_rational(rng, -1, 4, 7), random_rational(rng, -1, 4, 7), N};
        DualHahnParams d{random_rational(rng, -1, 4, 7), random_rational(rng, -1, 4, 7), N};
        for (long n = 0; n <= N; ++n)
            for (long m = 0; m <= N; ++m) {
                Rational sh = 0, sd = 0;
                for (long x = 0; x <= N; ++x) {
                    sh += hahn_weight(x, h) * hahn_eval(n, x, h) * hahn_eval(m, x, h);
                    sd += dual_hahn_weight(x, d) * dual_hahn_eval(n, x, d) * dual_hahn_eval(m, x, d);
                }
                EXPECT_EQ(sh, n == m ? hahn_norm(n, h) : Rational(0));
                EXPECT_EQ(sd, n == m ? dual_hahn_norm(n, d) : Rational(0));
            }
    }
}

TEST(Weights, RecurrenceNormalizationAgreesWithClosedForm) {
    HahnParams h{Rational(2, 7), Rational(5, 3), 5};
    auto rn = recurrence_normalization(h);
    for (long x = 0; x <= 5; ++x) EXPECT_EQ(rn.weight[x] / rn.weight[0], hahn_weight(x, h) / hahn_weight(0, h));
    for (long n = 0; n <= 5; ++n) EXPECT_EQ(rn.norm[n], hahn_norm(n, h) / hahn_norm(0, h));
}

TEST(Admissibility, Ranges) {
    EXPECT_TRUE(is_admissible(HahnParams{half, third, 3}));
    EXPECT_FALSE(is_admissible(HahnParams{Rational(-2), third, 3}));
    EXPECT_TRUE(is_admissible(DualHahnParams{Rational(-9, 2), Rational(-5), 3}));
    EXPECT_TRUE(is_admissible(KrawtchoukParams{third, 3}));
    EXPECT_FALSE(is_admissible(KrawtchoukParams{Rational(1), 3}));
}
