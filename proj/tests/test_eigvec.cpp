#include <gtest/gtest.h>

#include "doubling/eigvec.hpp"
#include "doubling/sampling.hpp"

using namespace doubling;

namespace {
std::pair<FamilyParams, CertifiedSymTridiag> admissible(Rng& rng, DoubleCase c, long N) {
    for (;;) {
        auto p = draw_matrix_params(rng, c, N);
        try {
            return {p, double_matrix(c, p)};
        } catch (const Error&) {
        }
    }
}

const DoubleCase u_cases[] = {DoubleCase::DualHahnI, DoubleCase::DualHahnII, DoubleCase::DualHahnIII,
                              DoubleCase::HahnI,     DoubleCase::HahnII,     DoubleCase::HahnIII,
                              DoubleCase::HahnIV,    DoubleCase::RacahI,     DoubleCase::RacahIII};
}  // namespace

TEST(Eigvec, SmallInstancesExact) {
    Rng rng(31);
    for (auto c : u_cases)
        for (long N = 1; N <= 4; ++N) {
            auto [p, m] = admissible(rng, c, N);
            auto u = eigvec_matrix(c, p);
            EXPECT_EQ(u.dim, m.matrix.dim());
            EXPECT_TRUE(eigen_relation_exact(u, m.matrix)) << to_string(c) << " " << describe(p);
            EXPECT_EQ(Spectrum(u.eigenvalues), m.spectrum);
        }
}

TEST(Eigvec, DualHahnThreeFourByFour) {
    DualHahnParams p{Rational(1, 2), Rational(1, 3), 1};
    auto m = double_matrix(DoubleCase::DualHahnIII, p);
    auto u = eigvec_matrix(DoubleCase::DualHahnIII, p);
    ASSERT_EQ(u.dim, 4u);
    EXPECT_TRUE(eigen_relation_exact(u, m.matrix));
    // Columns are unit vectors exactly.
    for (std::size_t j = 0; j < 4; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < 4; ++i) s += u.at(i, j).radicand();
        EXPECT_EQ(s, Rational(1));
    }
}

TEST(Eigvec, FloatOrthogonalityUpToForty) {
    Rng rng(37);
    for (auto c : u_cases)
        for (long N : {5L, 13L, 27L, 40L}) {
            auto [p, m] = admissible(rng, c, N);
            auto u = eigvec_matrix(c, p);
            double scale = 0;
            for (const auto& e : m.matrix.off) scale = std::max(scale, e.to_double());
            EXPECT_LE(orthogonality_error(u), 1e-12) << to_string(c) << " N=" << N;
            EXPECT_LE(eigen_residual(u, m.matrix), 1e-12 * scale) << to_string(c) << " N=" << N;
        }
}

TEST(Eigvec, UnsupportedCases) {
    auto r = RacahParams::with_alpha_minus_n(3, Rational(9, 2), Rational(1, 2), Rational(1, 3));
    EXPECT_THROW(eigvec_matrix(DoubleCase::RacahII, r), Unsupported);
    EXPECT_THROW(eigvec_matrix(DoubleCase::HahnI, DualHahnParams{1, 1, 2}), FamilyMismatch);
}
