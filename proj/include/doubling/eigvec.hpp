#pragma once

#include <cmath>
#include <vector>

#include "doubling/specmat.hpp"

namespace doubling {

// Orthogonal matrix U with M U = U D. Rows are indexed by degree (even rows
// from the first family, odd rows from the partner), columns by eigenvalue.
// Every entry has the form sign*sqrt(rational), so it is stored exactly.
struct EigvecMatrix {
    DoubleCase kind;
    std::size_t dim = 0;
    std::vector<SqrtRational> entries;      // row-major
    std::vector<SqrtRational> eigenvalues;  // diagonal of D, column order

    const SqrtRational& at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
    SqrtRational& at(std::size_t i, std::size_t j) { return entries[i * dim + j]; }

    std::vector<double> to_doubles() const {
        std::vector<double> out;
        out.reserve(entries.size());
        for (const auto& e : entries) out.push_back(e.to_double());
        return out;
    }
};

namespace detail {

// y_n(x) for one family on the grid, with weights and norms.
struct NormalizedTable {
    std::vector<std::vector<Rational>> y;  // y[x][n]
    std::vector<Rational> weight;
    std::vector<Rational> norm;

    // sqrt(w(x)/h_n) y_n(x), optionally divided by sqrt(2), times sign.
    SqrtRational value(long n, long x, bool halve, int sign) const {
        const Rational& v = y[x][n];
        Rational r = weight[x] / norm[n];
        if (r.sign() < 0)
            throw InadmissibleParams("w(x)/h_n < 0 at n=" + std::to_string(n) + ", x=" + std::to_string(x));
        r *= v * v;
        if (halve) r /= 2;
        return SqrtRational(sign * v.sign(), r);
    }
};

inline NormalizedTable normalized_table(const FamilyParams& params) {
    NormalizedTable t;
    long N = degree_cap(params);
    for (long x = 0; x <= N; ++x) t.y.push_back(evaluate_all_degrees(params, x));
    if (const auto* h = std::get_if<HahnParams>(&params)) {
        for (long x = 0; x <= N; ++x) t.weight.push_back(hahn_weight(x, *h));
        for (long n = 0; n <= N; ++n) t.norm.push_back(hahn_norm(n, *h));
    } else if (const auto* d = std::get_if<DualHahnParams>(&params)) {
        for (long x = 0; x <= N; ++x) t.weight.push_back(dual_hahn_weight(x, *d));
        for (long n = 0; n <= N; ++n) t.norm.push_back(dual_hahn_norm(n, *d));
    } else {
        auto rn = recurrence_normalization(params);
        t.weight = std::move(rn.weight);
        t.norm = std::move(rn.norm);
    }
    return t;
}

inline int alt(long n) { return n % 2 ? -1 : 1; }

// Dimension 2N+2: both families on x = 0..N, columns N-x and N+x+1.
inline void fill_paired(EigvecMatrix& u, const NormalizedTable& even, const NormalizedTable& odd, long N) {
    for (long n = 0; n <= N; ++n) {
        for (long x = 0; x <= N; ++x) {
            auto e = even.value(n, x, true, alt(n));
            u.at(2 * n, N - x) = e;
            u.at(2 * n, N + x + 1) = e;
            auto o = odd.value(n, x, true, alt(n));
            u.at(2 * n + 1, N - x) = -o;
            u.at(2 * n + 1, N + x + 1) = o;
        }
    }
}

// Dimension 2N+1: even family on x = 0..N (x = 0 in the middle column),
// odd family of size N-1 evaluated at x-1.
inline void fill_centered(EigvecMatrix& u, const NormalizedTable& even, const NormalizedTable& odd, long N) {
    for (long n = 0; n <= N; ++n) {
        for (long x = 1; x <= N; ++x) {
            auto e = even.value(n, x, true, alt(n));
            u.at(2 * n, N - x) = e;
            u.at(2 * n, N + x) = e;
            if (n < N) {
                auto o = odd.value(n, x - 1, true, alt(n));
                u.at(2 * n + 1, N - x) = -o;
                u.at(2 * n + 1, N + x) = o;
            }
        }
        u.at(2 * n, N) = even.value(n, 0, false, alt(n));
    }
}

// Dual Hahn II ordering: columns x and 2N-x, middle column from x = N.
inline void fill_reversed(EigvecMatrix& u, const NormalizedTable& even, const NormalizedTable& odd, long N) {
    for (long n = 0; n <= N; ++n) {
        for (long x = 0; x < N; ++x) {
            auto e = even.value(n, x, true, 1);
            u.at(2 * n, x) = e;
            u.at(2 * n, 2 * N - x) = e;
            if (n < N) {
                auto o = odd.value(n, x, true, 1);
                u.at(2 * n + 1, x) = -o;
                u.at(2 * n + 1, 2 * N - x) = o;
            }
        }
        u.at(2 * n, N) = even.value(n, N, false, 1);
    }
}

}  // namespace detail

inline EigvecMatrix eigvec_matrix(DoubleCase c, const FamilyParams& params) {
    detail::require_double_matrix(c, params);
    EigvecMatrix u;
    u.kind = c;
    u.eigenvalues = displayed_eigenvalues(c, params);
    u.dim = u.eigenvalues.size();
    u.entries.assign(u.dim * u.dim, SqrtRational());
    using detail::normalized_table;
    switch (c) {
        case DoubleCase::DualHahnI:
        case DoubleCase::DualHahnII:
        case DoubleCase::DualHahnIII: {
            const auto& p = std::get<DualHahnParams>(params);
            long N = p.N;
            if (c == DoubleCase::DualHahnI) {
                detail::fill_centered(u, normalized_table(p), normalized_table(DualHahnParams{p.gamma + 1, p.delta + 1, N - 1}), N);
            } else if (c == DoubleCase::DualHahnII) {
                detail::fill_reversed(u, normalized_table(p), normalized_table(DualHahnParams{p.gamma, p.delta, N - 1}), N);
            } else {
                detail::fill_paired(u, normalized_table(DualHahnParams{p.gamma, p.delta + 1, N}),
                                    normalized_table(DualHahnParams{p.gamma + 1, p.delta, N}), N);
            }
            break;
        }
        case DoubleCase::HahnI:
        case DoubleCase::HahnIII:
        case DoubleCase::HahnII:
        case DoubleCase::HahnIV: {
            const auto& p = std::get<HahnParams>(params);
            bool swap = c == DoubleCase::HahnIII || c == DoubleCase::HahnIV;
            Rational a = swap ? p.beta : p.alpha, b = swap ? p.alpha : p.beta;
            long N = p.N;
            if (c == DoubleCase::HahnI || c == DoubleCase::HahnIII)
                detail::fill_paired(u, normalized_table(HahnParams{a, b, N}), normalized_table(HahnParams{a + 1, b, N}), N);
            else
                detail::fill_centered(u, normalized_table(HahnParams{a, b, N}), normalized_table(HahnParams{a + 1, b, N - 1}), N);
            break;
        }
        default: {
            const auto& p = std::get<RacahParams>(params);
            const auto &a = p.alpha(), &b = p.beta(), &g = p.gamma(), &d = p.delta();
            long N = p.N();
            if (c == DoubleCase::RacahI)
                detail::fill_paired(u, normalized_table(RacahParams(a, b, g, d + 1, RacahMinusN::Alpha)),
                                    normalized_table(RacahParams(a, b + 1, g + 1, d, RacahMinusN::Alpha)), N);
            else
                detail::fill_centered(u, normalized_table(p),
                                      normalized_table(RacahParams(a + 1, b, g + 1, d + 1, RacahMinusN::Alpha)), N);
            break;
        }
    }
    return u;
}

// max over entries of |U^T U - I| and |U U^T - I|.
inline double orthogonality_error(const EigvecMatrix& u) {
    std::size_t n = u.dim;
    auto v = u.to_doubles();
    double err = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double cols = 0, rows = 0;
            for (std::size_t k = 0; k < n; ++k) {
                cols += v[k * n + i] * v[k * n + j];
                rows += v[i * n + k] * v[j * n + k];
            }
            double id = i == j ? 1.0 : 0.0;
            err = std::max({err, std::abs(cols - id), std::abs(rows - id)});
        }
    }
    return err;
}

// max |M U - U D| in floating point.
inline double eigen_residual(const EigvecMatrix& u, const SymTridiag& m) {
    std::size_t n = u.dim;
    if (m.dim() != n) throw std::invalid_argument("eigen_residual: dimension mismatch");
    auto v = u.to_doubles();
    std::vector<double> off;
    for (const auto& e : m.off) off.push_back(e.to_double());
    double err = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double mu = 0;
            if (i > 0) mu += off[i - 1] * v[(i - 1) * n + j];
            if (i + 1 < n) mu += off[i] * v[(i + 1) * n + j];
            err = std::max(err, std::abs(mu - v[i * n + j] * u.eigenvalues[j].to_double()));
        }
    }
    return err;
}

// Exact M U = U D: each entry of M U is a sum of two signed square roots.
inline bool eigen_relation_exact(const EigvecMatrix& u, const SymTridiag& m) {
    std::size_t n = u.dim;
    if (m.dim() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            SqrtRational left = i > 0 ? m.off[i - 1] * u.at(i - 1, j) : SqrtRational();
            SqrtRational right = i + 1 < n ? m.off[i] * u.at(i + 1, j) : SqrtRational();
            if (!sum_equals(left, right, u.at(i, j) * u.eigenvalues[j])) return false;
        }
    }
    return true;
}

}  // namespace doubling
