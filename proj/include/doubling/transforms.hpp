#pragma once

#include <vector>

#include "doubling/doubles.hpp"

namespace doubling {

struct ChristoffelData {
    Rational nu;
    SeqFn a_seq;  // a_n = y_{n+1}(nu) / y_n(nu)
    SeqFn b_seq;  // b_n = C(n) / a_{n-1}, b_0 = 0
};

inline ChristoffelData christoffel_data(const FamilyParams& params, const Rational& nu) {
    auto rec = recurrence_data(params);
    auto a_seq = [params, nu](long n) {
        Rational yn = evaluate(params, n, nu);
        if (yn.is_zero())
            throw ZeroAtNu("y_" + std::to_string(n) + " vanishes at nu=" + nu.str());
        return evaluate(params, n + 1, nu) / yn;
    };
    auto b_seq = [rec, a_seq](long n) {
        if (n == 0) return Rational(0);
        return rec.C(n) / a_seq(n - 1);
    };
    return {nu, a_seq, b_seq};
}

// P_n(x) = (y_{n+1}(x) - a_n y_n(x)) / (Lambda(x) - Lambda(nu))
inline Rational christoffel_kernel(const FamilyParams& params, const ChristoffelData& data, long n,
                                   const Rational& x) {
    auto rec = recurrence_data(params);
    Rational gap = rec.Lambda(x) - rec.Lambda(data.nu);
    if (gap.is_zero())
        throw SupportCollision("Lambda(x) = Lambda(nu) at x=" + x.str() + ", nu=" + data.nu.str());
    return (evaluate(params, n + 1, x) - data.a_seq(n) * evaluate(params, n, x)) / gap;
}

inline Rational christoffel_kernel(const FamilyParams& params, const Rational& nu, long n, const Rational& x) {
    return christoffel_kernel(params, christoffel_data(params, nu), n, x);
}

using KernelFn = std::function<Rational(long, const Rational&)>;

// A(n) P_n(x) - b_n P_{n-1}(x); the A(n) term is dropped when A(n) = 0 (n = N).
inline Rational geronimus_reconstruct(const FamilyParams& params, const ChristoffelData& data,
                                      const KernelFn& kernel, long n, const Rational& x) {
    auto rec = recurrence_data(params);
    Rational out = 0;
    Rational A = rec.A(n);
    if (!A.is_zero()) out += A * kernel(n, x);
    if (n > 0) out -= data.b_seq(n) * kernel(n - 1, x);
    return out;
}

struct BaCResidue {
    Rational product;  // b_n a_{n-1} - C(n)
    Rational sum;      // A(n) a_n + b_n - (A(n) + C(n) + Lambda(nu))
    bool is_zero() const { return product.is_zero() && sum.is_zero(); }
};

inline BaCResidue verify_baC(const FamilyParams& params, const ChristoffelData& data, long n) {
    auto rec = recurrence_data(params);
    Rational A = rec.A(n), C = rec.C(n), b = data.b_seq(n);
    return {b * data.a_seq(n - 1) - C, A * data.a_seq(n) + b - (A + C + rec.Lambda(data.nu))};
}

// Constant c_n with P_n(x) = c_n yHat_n(x) at the classified nu.
inline Rational kernel_constant(DoubleCase c, const FamilyParams& params, long n) {
    switch (family_of(c)) {
        case Family::DualHahn: {
            const auto& p = std::get<DualHahnParams>(params);
            const auto &g = p.gamma;
            long N = p.N;
            if (c == DoubleCase::DualHahnI) return -1 / (N * (g + 1));
            if (c == DoubleCase::DualHahnII) return -1 / (N * (n + g + 1));
            return 1 / ((g + 1) * Rational(n - N));
        }
        case Family::Hahn: {
            const auto& p = std::get<HahnParams>(params);
            const auto &a = p.alpha, &b = p.beta;
            long N = p.N;
            Rational D2 = 2 * n + a + b + 2;
            switch (c) {
                case DoubleCase::HahnI: return D2 / ((a + 1) * Rational(N - n));
                case DoubleCase::HahnII: return D2 / (N * (a + 1));
                case DoubleCase::HahnIII: return D2 / (Rational(N - n) * (n + a + 1));
                default: return D2 / (N * (n + a + 1));
            }
        }
        default: {
            const auto& p = std::get<RacahParams>(params);
            const auto &a = p.alpha(), &b = p.beta(), &g = p.gamma(), &d = p.delta();
            Rational D2 = 2 * n + a + b + 2;
            switch (c) {
                case DoubleCase::RacahI: return D2 / ((g + 1) * (n + b + d + 1) * (n + a + 1));
                case DoubleCase::RacahII: return D2 / ((b + d + 1) * (n + g + 1) * (n + a + 1));
                case DoubleCase::RacahIII: return D2 / ((g + 1) * (b + d + 1) * (a + 1));
                default: return D2 / ((a + 1) * (n + g + 1) * (n + b + d + 1));
            }
        }
    }
}

struct GridResidue {
    long n;
    Rational x;
    Rational residue;
};

// P_n(x) - c_n yHat_n(x) over 0 <= n < N, 0 <= x <= N, skipping points with
// Lambda(x) = Lambda(nu) and degrees beyond the hatted family.
inline std::vector<GridResidue> verify_same_family(const CoefficientSextet& s) {
    const FamilyParams& params = s.params;
    auto data = christoffel_data(params, christoffel_nu(s.kind, params));
    auto rec = recurrence_data(params);
    Rational lam_nu = rec.Lambda(data.nu);
    std::vector<GridResidue> out;
    long N = s.N();
    for (long n = 0; n < N && n <= s.N_hat(); ++n) {
        Rational cn = kernel_constant(s.kind, params, n);
        for (long xi = 0; xi <= N; ++xi) {
            Rational x = xi;
            if (rec.Lambda(x) == lam_nu) continue;
            Rational P = christoffel_kernel(params, data, n, x);
            out.push_back({n, x, P - cn * s.y_hat(n, x)});
        }
    }
    return out;
}

inline std::vector<GridResidue> verify_same_family(DoubleCase c, const FamilyParams& params) {
    return verify_same_family(coefficients(c, params));
}

}  // namespace doubling
