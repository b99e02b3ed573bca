#include <gtest/gtest.h>

#include "doubling/sampling.hpp"

using namespace doubling;

namespace {
const Rational half(1, 2), third(1, 3);
}

TEST(ChristoffelData, DualHahnAtZero) {
    DualHahnParams p{half, third, 5};
    auto data = christoffel_data(p, 0);
    for (long n = 0; n < 5; ++n) EXPECT_EQ(data.a_seq(n), Rational(1));
    EXPECT_EQ(data.b_seq(0), Rational(0));
}

TEST(ChristoffelData, DualHahnAtN) {
    DualHahnParams p{half, third, 5};
    auto rn = [&](long n) { return pochhammer(-5 - p.delta, n) / pochhammer(p.gamma + 1, n); };
    for (long n = 0; n <= 5; ++n) EXPECT_EQ(dual_hahn_eval(n, 5, p), rn(n));
    auto data = christoffel_data(p, 5);
    for (long n = 0; n < 5; ++n) EXPECT_EQ(data.a_seq(n), rn(n + 1) / rn(n));
}

TEST(ChristoffelData, DualHahnAtMinusDelta) {
    DualHahnParams p{half, third, 5};
    for (long n = 0; n <= 5; ++n)
        EXPECT_EQ(dual_hahn_eval(n, -p.delta, p), pochhammer(-5 - p.delta, n) / pochhammer(Rational(-5), n));
}

TEST(ChristoffelData, ZeroAtNu) {
    // y_1(nu) = 1 - nu/(pN) vanishes at nu = pN for Krawtchouk.
    KrawtchoukParams p{half, 4};
    auto data = christoffel_data(p, 2);
    EXPECT_THROW(data.a_seq(1), ZeroAtNu);
}

TEST(Kernel, SupportCollision) {
    DualHahnParams p{half, third, 4};
    EXPECT_THROW(christoffel_kernel(p, 0, 1, 0), SupportCollision);
}

TEST(Kernel, DualHahnConstants) {
    DualHahnParams p{half, third, 5};
    const auto &g = p.gamma;
    EXPECT_EQ(kernel_constant(DoubleCase::DualHahnI, p, 2), -1 / (5 * (g + 1)));
    EXPECT_EQ(kernel_constant(DoubleCase::DualHahnII, p, 2), -1 / (5 * (2 + g + 1)));
    EXPECT_EQ(kernel_constant(DoubleCase::DualHahnIII, p, 2), 1 / ((g + 1) * Rational(2 - 5)));
}

TEST(Kernel, DualHahnTwoPartnerIdentity) {
    // (-(n-N)/N) R_n(lambda(x); g, d, N-1) + (n/N) R_{n-1}(...) = R_n(x)
    DualHahnParams p{half, third, 5};
    DualHahnParams q{half, third, 4};
    for (long n = 1; n < 5; ++n)
        for (long x = 0; x <= 4; ++x) {
            Rational lam = x * (x + half + third + 1);
            Rational lhs = Rational(-(n - 5), 5) * dual_hahn_eval_lambda(n, lam, q) +
                           Rational(n, 5) * dual_hahn_eval_lambda(n - 1, lam, q);
            EXPECT_EQ(lhs, dual_hahn_eval(n, x, p)) << "n=" << n << " x=" << x;
        }
}

TEST(SameFamily, AllCases) {
    Rng rng(17);
    for (auto c : all_double_cases)
        for (long N = 1; N <= 6; ++N) {
            auto p = draw_valid_params(rng, c, N, static_cast<int>(N));
            for (const auto& g : verify_same_family(coefficients(c, p)))
                EXPECT_TRUE(g.residue.is_zero()) << to_string(c) << " " << describe(p) << " n=" << g.n << " x=" << g.x.str();
        }
}

TEST(Geronimus, BaCAndRoundTrip) {
    Rng rng(23);
    for (auto c : all_double_cases)
        for (long N = 2; N <= 6; ++N) {
            auto p = draw_valid_params(rng, c, N, static_cast<int>(N));
            auto data = christoffel_data(p, christoffel_nu(c, p));
            auto rec = recurrence_data(p);
            EXPECT_EQ(data.b_seq(0), Rational(0));
            for (long n = 1; n < N; ++n) EXPECT_TRUE(verify_baC(p, data, n).is_zero()) << to_string(c);
            KernelFn k = [&](long n, const Rational& x) { return christoffel_kernel(p, data, n, x); };
            for (long n = 0; n < N; ++n)
                for (long x = 0; x <= N; ++x) {
                    if (rec.Lambda(x) == rec.Lambda(data.nu)) continue;
                    EXPECT_EQ(geronimus_reconstruct(p, data, k, n, x), evaluate(p, n, x))
                        << to_string(c) << " " << describe(p) << " n=" << n << " x=" << x;
                }
        }
}

TEST(Geronimus, DegreeZeroLine) {
    DualHahnParams p{half, third, 4};
    auto data = christoffel_data(p, 0);
    auto rec = recurrence_data(p);
    for (long x = 1; x <= 4; ++x)
        EXPECT_EQ(rec.A(0) * christoffel_kernel(p, data, 0, x), dual_hahn_eval(0, x, p));
}
