#pragma once

#include <cstdint>
#include <random>

#include "doubling/transforms.hpp"

namespace doubling {

using Rng = std::mt19937_64;

// Uniform over p/q with 1 <= q <= max_den and lo < p/q <= hi.
inline Rational random_rational(Rng& rng, long lo, long hi, long max_den) {
    long q = std::uniform_int_distribution<long>(1, max_den)(rng);
    long p = std::uniform_int_distribution<long>(lo * q + 1, hi * q)(rng);
    return Rational(p, q);
}

// Non-integer draw, for parameters that sit in hypergeometric denominators.
inline Rational random_fraction(Rng& rng, long lo, long hi, long max_den = 9) {
    for (;;) {
        Rational r = random_rational(rng, lo, hi, max_den);
        if (!r.is_integer()) return r;
    }
}

// Evaluates everything the suites touch; throws on any degeneracy.
inline void validate_instance(const CoefficientSextet& s) {
    long N = s.N();
    auto rec = recurrence_data(s.params);
    auto hrec = recurrence_data(s.hatted);
    for (long n = -1; n <= N + 1; ++n) {
        s.a(n), s.b(n), s.a_hat(n), s.b_hat(n);
        if (n >= 0 && n <= N) rec.A(n), rec.C(n), hrec.A(n), hrec.C(n);
    }
    for (long x = 0; x <= N; ++x) {
        s.d(x), s.d_hat(x);
        for (long n = 0; n <= N; ++n) s.y(n, x);
        for (long n = 0; n <= s.N_hat(); ++n) s.y_hat(n, x);
    }
    auto data = christoffel_data(s.params, christoffel_nu(s.kind, s.params));
    for (long n = 0; n < N; ++n) {
        data.a_seq(n);
        data.b_seq(n);
        if (n <= s.N_hat()) kernel_constant(s.kind, s.params, n);
    }
}

// Random parameters for a case; Racah cycles through the three -N choices.
inline FamilyParams draw_params(Rng& rng, DoubleCase c, long N, int draw_index = 0) {
    switch (family_of(c)) {
        case Family::DualHahn:
            return DualHahnParams{random_rational(rng, -1, 4, 7), random_rational(rng, -1, 4, 7), N};
        case Family::Hahn:
            return HahnParams{random_rational(rng, -1, 4, 7), random_rational(rng, -1, 4, 7), N};
        default:
            switch (draw_index % 3) {
                case 0:
                    return RacahParams::with_alpha_minus_n(N, random_fraction(rng, -3, 6), random_fraction(rng, -1, 4),
                                                           random_fraction(rng, -1, 4));
                case 1:
                    return RacahParams::with_beta_delta_minus_n(N, random_fraction(rng, -1, 4),
                                                                random_fraction(rng, -3, 6), random_fraction(rng, -1, 4));
                default:
                    return RacahParams::with_gamma_minus_n(N, random_fraction(rng, -1, 4), random_fraction(rng, -3, 6),
                                                           random_fraction(rng, -1, 4));
            }
    }
}

// A draw that passes validate_instance; degenerate draws are redrawn.
inline FamilyParams draw_valid_params(Rng& rng, DoubleCase c, long N, int draw_index = 0) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        FamilyParams p = draw_params(rng, c, N, draw_index);
        try {
            validate_instance(coefficients(c, p));
            return p;
        } catch (const Error&) {
        }
    }
    throw Error("could not draw nondegenerate parameters for " + to_string(c));
}

// Admissible parameters for the matrix propositions (real off-diagonals).
inline FamilyParams draw_matrix_params(Rng& rng, DoubleCase c, long N) {
    switch (family_of(c)) {
        case Family::DualHahn:
            return DualHahnParams{random_rational(rng, -1, 4, 7), random_rational(rng, -1, 4, 7), N};
        case Family::Hahn:
            return HahnParams{random_rational(rng, -1, 4, 7), random_rational(rng, -1, 4, 7), N};
        default: {
            Rational g = random_fraction(rng, -1, 3), d = random_fraction(rng, -1, 3);
            Rational b = N + g + random_fraction(rng, 0, 4);
            return RacahParams::with_alpha_minus_n(N, b, g, d);
        }
    }
}

}  // namespace doubling
