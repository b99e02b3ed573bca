#include <gtest/gtest.h>

#include "doubling/sampling.hpp"
#include "doubling/specmat.hpp"

using namespace doubling;

namespace {
const Rational half(1, 2), third(1, 3);

std::vector<Rational> poly(std::initializer_list<long> c) {
    std::vector<Rational> out;
    for (long v : c) out.emplace_back(v);
    return out;
}

Spectrum spectrum_of(std::initializer_list<std::pair<int, long>> entries) {
    std::vector<SqrtRational> e;
    for (auto [s, r] : entries) e.push_back(SqrtRational(s, Rational(r)));
    return Spectrum(e);
}
}  // namespace

TEST(Charpoly, SmallCases) {
    EXPECT_EQ(charpoly_from_products({Rational(5)}), poly({-5, 0, 1}));
    EXPECT_EQ(charpoly_from_products({Rational(2), Rational(3)}), poly({0, -5, 0, 1}));
    EXPECT_EQ(charpoly(sylvester_kac(3).matrix), poly({9, 0, -10, 0, 1}));
}

TEST(SylvesterKac, Construction) {
    auto k = sylvester_kac(2);
    EXPECT_EQ(k.matrix.super, poly({1, 2}));
    EXPECT_EQ(k.matrix.sub, poly({2, 1}));
    EXPECT_EQ(k.spectrum, spectrum_of({{-1, 4}, {0, 0}, {1, 4}}));
    EXPECT_EQ(sylvester_kac(1).spectrum, spectrum_of({{-1, 1}, {1, 1}}));
    EXPECT_THROW(sylvester_kac(0), std::invalid_argument);
}

TEST(SylvesterKac, CertifiedUpToTwenty) {
    for (long N = 1; N <= 20; ++N) {
        auto k = sylvester_kac(N);
        EXPECT_TRUE(verify_spectrum_exact(k.matrix, k.spectrum)) << N;
    }
}

TEST(SylvesterKac, SymmetrizedPattern) {
    long N = 6;
    auto s = symmetrize(sylvester_kac(N).matrix);
    for (long k = 1; k <= N; ++k) EXPECT_EQ(s.off[k - 1], SqrtRational::sqrt(Rational(k * (N + 1 - k))));
}

TEST(ExtendedKac, OddSmallCase) {
    auto m = extended_kac_odd(1, 1, 0);
    EXPECT_EQ(m.spectrum, spectrum_of({{-1, 12}, {0, 0}, {1, 12}}));
    EXPECT_TRUE(verify_spectrum_exact(m.matrix, m.spectrum));
}

TEST(ExtendedKac, EvenSmallCase) {
    auto m = extended_kac_even(2, 0, 1);
    EXPECT_EQ(m.spectrum, spectrum_of({{-1, 24}, {-1, 8}, {1, 8}, {1, 24}}));
    EXPECT_TRUE(verify_spectrum_exact(m.matrix, m.spectrum));
}

TEST(ExtendedKac, ReductionAtMinusHalf) {
    for (long N = 1; N <= 12; ++N) {
        EXPECT_EQ(extended_kac_odd(N, -half, -half).matrix, sylvester_kac(2 * N).matrix);
        EXPECT_EQ(extended_kac_even(N, -half, -half).matrix, sylvester_kac(2 * N - 1).matrix);
    }
}

TEST(ExtendedKac, IntegerLine) {
    for (long N = 1; N <= 12; ++N) {
        Rational g(3, 5);
        auto m = extended_kac_odd(N, g, -g - 1);
        EXPECT_EQ(m.spectrum, sylvester_kac(2 * N).spectrum);
        EXPECT_TRUE(verify_spectrum_exact(m.matrix, m.spectrum));
    }
}

TEST(ExtendedKac, RandomCertificates) {
    Rng rng(1);
    for (long N = 1; N <= 12; ++N) {
        Rational g = random_rational(rng, -1, 4, 7), d = random_rational(rng, -1, 4, 7);
        auto o = extended_kac_odd(N, g, d), e = extended_kac_even(N, g, d);
        EXPECT_TRUE(verify_spectrum_exact(o.matrix, o.spectrum));
        EXPECT_TRUE(verify_spectrum_exact(e.matrix, e.spectrum));
    }
}

TEST(Certificate, PerturbationIsDetected) {
    auto k = sylvester_kac(5);
    auto m = k.matrix;
    m.super[2] += 1;
    EXPECT_FALSE(verify_spectrum_exact(m, k.spectrum));
    auto o = extended_kac_odd(3, half, third);
    o.matrix.sub[0] += 1;
    EXPECT_FALSE(verify_spectrum_exact(o.matrix, o.spectrum));
}

TEST(Certificate, DimensionMismatchFails) {
    EXPECT_FALSE(verify_spectrum_exact(sylvester_kac(3).matrix, sylvester_kac(4).spectrum));
}

TEST(DoubleMatrix, DualHahnThreeEntries) {
    DualHahnParams p{half, third, 4};
    auto sq = double_matrix_squares(DoubleCase::DualHahnIII, p);
    ASSERT_EQ(sq.size(), 9u);
    for (long k = 0; k <= 4; ++k) EXPECT_EQ(sq[2 * k], (k + half + 1) * (4 + third + 1 - k));
    for (long k = 0; k < 4; ++k) EXPECT_EQ(sq[2 * k + 1], Rational((k + 1) * (4 - k)));
}

TEST(DoubleMatrix, DisplayedEigenvalues) {
    HahnParams h{Rational(2, 7), Rational(3, 5), 3};
    auto e1 = double_matrix(DoubleCase::HahnI, h).spectrum;
    auto e3 = double_matrix(DoubleCase::HahnIII, h).spectrum;
    for (long k = 0; k <= 3; ++k) {
        EXPECT_EQ(e1.entries()[4 + k], SqrtRational::sqrt(k + h.alpha + 1));
        EXPECT_EQ(e3.entries()[4 + k], SqrtRational::sqrt(k + h.beta + 1));
    }
    auto e2 = double_matrix(DoubleCase::HahnII, h).spectrum;
    EXPECT_EQ(e2, spectrum_of({{-1, 3}, {-1, 2}, {-1, 1}, {0, 0}, {1, 1}, {1, 2}, {1, 3}}));
    auto d3 = double_matrix(DoubleCase::DualHahnIII, DualHahnParams{2, 2, 2}).spectrum;
    EXPECT_EQ(d3, spectrum_of({{-1, 25}, {-1, 16}, {-1, 9}, {1, 9}, {1, 16}, {1, 25}}));
}

TEST(DoubleMatrix, AllCasesCertified) {
    Rng rng(2);
    for (auto c : all_double_cases)
        for (long N = 1; N <= 12; ++N) {
            auto p = draw_matrix_params(rng, c, N);
            if (!has_double_matrix(c, p)) continue;
            try {
                auto m = double_matrix(c, p);
                EXPECT_TRUE(verify_spectrum_exact(m.matrix, m.spectrum)) << to_string(c) << " " << describe(p);
            } catch (const InadmissibleParams&) {
            } catch (const DivisionByZero&) {
            }
        }
}

TEST(DoubleMatrix, Errors) {
    EXPECT_THROW(double_matrix(DoubleCase::HahnI, DualHahnParams{half, third, 2}), FamilyMismatch);
    auto r = RacahParams::with_alpha_minus_n(3, half, third, half);
    EXPECT_THROW(double_matrix(DoubleCase::RacahII, r), Unsupported);
    EXPECT_THROW(double_matrix(DoubleCase::DualHahnI, DualHahnParams{Rational(-3), third, 2}), InadmissibleParams);
}

TEST(Nonsymmetric, ProductsMatchSquares) {
    DualHahnParams p{Rational(2, 7), Rational(5, 3), 5};
    EXPECT_EQ(nonsymmetric_form(DoubleCase::DualHahnI, p).matrix.products(),
              double_matrix_squares(DoubleCase::DualHahnI, p));
    EXPECT_EQ(nonsymmetric_form(DoubleCase::DualHahnIII, p).matrix.products(),
              double_matrix_squares(DoubleCase::DualHahnIII, p));
    DualHahnParams swapped{p.delta, p.gamma, p.N};
    EXPECT_EQ(nonsymmetric_form(DoubleCase::DualHahnII, p).matrix.products(),
              double_matrix_squares(DoubleCase::DualHahnII, swapped));
    for (auto c : {DoubleCase::DualHahnI, DoubleCase::DualHahnII, DoubleCase::DualHahnIII}) {
        auto m = nonsymmetric_form(c, p);
        EXPECT_TRUE(verify_spectrum_exact(m.matrix, m.spectrum)) << to_string(c);
    }
}

TEST(Nonsymmetric, IntegerForms) {
    auto m3 = nonsymmetric_form(DoubleCase::DualHahnIII, DualHahnParams{3, 3, 4});
    for (const auto& v : m3.matrix.super) EXPECT_TRUE(v.is_integer());
    for (const auto& v : m3.matrix.sub) EXPECT_TRUE(v.is_integer());
    for (const auto& e : m3.spectrum.entries()) EXPECT_TRUE(e.is_rational());

    auto m1 = nonsymmetric_form(DoubleCase::DualHahnI, DualHahnParams{1, -2, 3});
    auto ev = m1.spectrum.to_doubles();
    ASSERT_EQ(ev.size(), 7u);
    for (std::size_t i = 0; i < ev.size(); ++i) EXPECT_EQ(ev[i], static_cast<double>(i) - 3);
    EXPECT_TRUE(verify_spectrum_exact(m1.matrix, m1.spectrum));
    EXPECT_THROW(symmetrize(m1.matrix), NegativeProduct);
    EXPECT_THROW(nonsymmetric_form(DoubleCase::HahnI, DualHahnParams{1, 1, 2}), Unsupported);
}

TEST(Symmetrize, PreservesCharpoly) {
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
        TwoDiagonal m;
        long dim = 2 + t % 9;
        for (long i = 0; i + 1 < dim; ++i) {
            m.super.push_back(random_rational(rng, 0, 5, 6));
            m.sub.push_back(random_rational(rng, 0, 5, 6));
        }
        EXPECT_EQ(charpoly(m), charpoly(symmetrize(m)));
    }
}

TEST(Symmetrize, ZeroMatrixAndDiagonal) {
    TwoDiagonal z{poly({0, 0}), poly({0, 0})};
    auto s = symmetrize(z);
    for (const auto& e : s.off) EXPECT_TRUE(e.is_zero());
    auto d = symmetrizing_diagonal(sylvester_kac(3).matrix);
    ASSERT_EQ(d.size(), 4u);
    // d_{i+1}^2 = d_i^2 b_i / c_i
    EXPECT_EQ(d[1].signed_square(), Rational(1, 3));
    EXPECT_EQ(d[2].signed_square(), Rational(1, 3));
    EXPECT_EQ(d[3].signed_square(), Rational(1));
}
