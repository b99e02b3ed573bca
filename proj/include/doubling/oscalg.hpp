#pragma once

#include <vector>

#include "doubling/specmat.hpp"

namespace doubling {

// J+ has 2M_k on its subdiagonal, J- = J+^T, J0 is diagonal, P = diag(1,-1,...).
struct AlgebraRealization {
    DoubleCase kind;
    std::size_t dim = 0;
    std::vector<Rational> m_squared;   // M_k^2
    std::vector<SqrtRational> jplus;   // (J+)_{k+1,k} = 2 M_k
    std::vector<Rational> j0;
    std::vector<int> parity;

    Rational jplus_square(std::size_t k) const { return 4 * m_squared[k]; }
};

// [J+, J-] = 2 tau J0 + 2 nu J0 P + (sigma/2) P + (rho/2) I
struct StructureConstants {
    int tau = 1;
    Rational nu, sigma, rho;
};

namespace detail {
inline const DualHahnParams& dual_hahn_only(DoubleCase c, const FamilyParams& p) {
    if (c != DoubleCase::DualHahnI && c != DoubleCase::DualHahnII && c != DoubleCase::DualHahnIII)
        throw Unsupported("algebra realization exists for the dual Hahn cases only");
    if (!std::holds_alternative<DualHahnParams>(p))
        throw FamilyMismatch("case " + to_string(c) + " does not take " + describe(p));
    return std::get<DualHahnParams>(p);
}
}  // namespace detail

inline AlgebraRealization build_generators(DoubleCase c, const FamilyParams& params) {
    const auto& p = detail::dual_hahn_only(c, params);
    AlgebraRealization r;
    r.kind = c;
    r.m_squared = double_matrix_squares(c, params);
    r.dim = r.m_squared.size() + 1;
    for (std::size_t k = 0; k < r.m_squared.size(); ++k) {
        if (r.m_squared[k].sign() < 0)
            throw InadmissibleParams("M_" + std::to_string(k) + "^2 = " + r.m_squared[k].str() + " < 0");
        r.jplus.push_back(SqrtRational::sqrt(4 * r.m_squared[k]));
    }
    Rational start = c == DoubleCase::DualHahnIII ? -Rational(2 * p.N + 1, 2) : Rational(-p.N);
    for (std::size_t i = 0; i < r.dim; ++i) {
        r.j0.push_back(start + static_cast<long>(i));
        r.parity.push_back(i % 2 ? -1 : 1);
    }
    return r;
}

inline StructureConstants structure_constants(DoubleCase c, const FamilyParams& params) {
    const auto& p = detail::dual_hahn_only(c, params);
    const auto &g = p.gamma, &d = p.delta;
    long N = p.N;
    switch (c) {
        case DoubleCase::DualHahnI:
            return {1, g + d + 1, -2 * (2 * N + 1) * (g - d), 2 * (g - d)};
        case DoubleCase::DualHahnII:
            return {-1, g + d + 2 * N + 1, 2 * (2 * N + 1) * (g - d), -2 * (g - d)};
        default:
            return {1, g - d, -2 * ((2 * N + 2) * (g + d + 1) + (2 * g + 1) * (2 * d + 1)), 2 * (g - d)};
    }
}

// Right-hand side of the commutator relation as printed for each case.
inline Rational displayed_commutator_diagonal(DoubleCase c, const DualHahnParams& p, const Rational& j0, int P) {
    const auto &g = p.gamma, &d = p.delta;
    long N = p.N;
    switch (c) {
        case DoubleCase::DualHahnI:
            return 2 * j0 + 2 * (g + d + 1) * j0 * P - (2 * N + 1) * (g - d) * P + (g - d);
        case DoubleCase::DualHahnII:
            return -2 * j0 + 2 * (g + d + 2 * N + 1) * j0 * P + (2 * N + 1) * (g - d) * P - (g - d);
        default:
            return 2 * j0 + 2 * (g - d) * j0 * P - ((2 * N + 2) * (g + d + 1) + (2 * g + 1) * (2 * d + 1)) * P + (g - d);
    }
}

inline Rational normal_form_diagonal(const StructureConstants& s, const Rational& j0, int P) {
    return 2 * s.tau * j0 + 2 * s.nu * j0 * P + s.sigma / 2 * P + s.rho / 2;
}

struct AlgebraResidues {
    std::vector<Rational> parity_square;    // P^2 - I
    std::vector<Rational> parity_j0;        // P J0 - J0 P
    std::vector<SqrtRational> parity_jpm;   // P J+ + J+ P (J- is the transpose)
    std::vector<SqrtRational> j0_jplus;     // [J0, J+] - J+
    std::vector<SqrtRational> j0_jminus;    // [J0, J-] + J-
    std::vector<Rational> commutator;       // [J+, J-] - RHS, dense row-major

    bool is_zero() const {
        auto zero = [](const auto& v) {
            for (const auto& e : v)
                if (!e.is_zero()) return false;
            return true;
        };
        return zero(parity_square) && zero(parity_j0) && zero(parity_jpm) && zero(j0_jplus) &&
               zero(j0_jminus) && zero(commutator);
    }
};

namespace detail {
// Product of two signed square roots that must be rational.
inline Rational rational_product(const SqrtRational& a, const SqrtRational& b) {
    SqrtRational p = a * b;
    if (!p.is_rational()) throw Error("product " + p.str() + " is not rational");
    return p.to_rational();
}
}  // namespace detail

// Residues of all relations; RHS is the case's displayed commutator, or the
// normal form with the given constants when supplied.
inline AlgebraResidues verify_algebra(const AlgebraRealization& r, const DualHahnParams& p,
                                      const std::optional<StructureConstants>& normal = std::nullopt) {
    std::size_t n = r.dim;
    AlgebraResidues out;
    for (std::size_t i = 0; i < n; ++i) {
        out.parity_square.push_back(Rational(r.parity[i] * r.parity[i]) - 1);
        out.parity_j0.push_back(r.parity[i] * r.j0[i] - r.j0[i] * r.parity[i]);
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const auto& jp = r.jplus[k];  // entry (k+1, k)
        out.parity_jpm.push_back(jp * Rational(r.parity[k + 1] + r.parity[k]));
        out.j0_jplus.push_back(jp * (r.j0[k + 1] - r.j0[k] - 1));
        out.j0_jminus.push_back(jp * (r.j0[k] - r.j0[k + 1] + 1));
    }
    // Dense exact [J+, J-] = J+ J+^T - J+^T J+.
    auto jp = [&](std::size_t i, std::size_t j) { return i == j + 1 ? r.jplus[j] : SqrtRational(); };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = 0;
            for (std::size_t k = 0; k < n; ++k) {
                v += detail::rational_product(jp(i, k), jp(j, k));
                v -= detail::rational_product(jp(k, i), jp(k, j));
            }
            if (i == j)
                v -= normal ? normal_form_diagonal(*normal, r.j0[i], r.parity[i])
                            : displayed_commutator_diagonal(r.kind, p, r.j0[i], r.parity[i]);
            out.commutator.push_back(v);
        }
    }
    return out;
}

inline AlgebraResidues verify_algebra(DoubleCase c, const FamilyParams& params) {
    return verify_algebra(build_generators(c, params), detail::dual_hahn_only(c, params));
}

}  // namespace doubling
