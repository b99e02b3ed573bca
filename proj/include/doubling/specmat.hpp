#pragma once

#include <algorithm>
#include <vector>

#include "doubling/doubles.hpp"

namespace doubling {

// Zero-diagonal tridiagonal matrix: super[i] = A(i,i+1), sub[i] = A(i+1,i).
struct TwoDiagonal {
    std::vector<Rational> super;
    std::vector<Rational> sub;

    std::size_t dim() const { return super.size() + 1; }

    // b_i c_i, which is all the characteristic polynomial depends on.
    std::vector<Rational> products() const {
        std::vector<Rational> out;
        out.reserve(super.size());
        for (std::size_t i = 0; i < super.size(); ++i) out.push_back(super[i] * sub[i]);
        return out;
    }

    friend bool operator==(const TwoDiagonal&, const TwoDiagonal&) = default;
};

// Symmetric zero-diagonal tridiagonal matrix with off-diagonal sign*sqrt(r).
struct SymTridiag {
    std::vector<SqrtRational> off;

    std::size_t dim() const { return off.size() + 1; }

    std::vector<Rational> squares() const {
        std::vector<Rational> out;
        for (const auto& m : off) out.push_back(m.radicand());
        return out;
    }
};

// Closed-form eigenvalues, sorted ascending.
class Spectrum {
public:
    Spectrum() = default;

    explicit Spectrum(std::vector<SqrtRational> entries) : entries_(std::move(entries)) {
        std::sort(entries_.begin(), entries_.end());
    }

    // {0 (zero_count times)} U {+-sqrt(r) : r in radicands}
    static Spectrum symmetric(const std::vector<Rational>& radicands, int zero_count) {
        std::vector<SqrtRational> e;
        for (const auto& r : radicands) {
            e.push_back(SqrtRational(1, r));
            e.push_back(SqrtRational(-1, r));
        }
        for (int i = 0; i < zero_count; ++i) e.emplace_back();
        return Spectrum(std::move(e));
    }

    const std::vector<SqrtRational>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    std::size_t zero_count() const {
        return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(),
                                                      [](const SqrtRational& s) { return s.is_zero(); }));
    }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (!(entries_[i] == -entries_[entries_.size() - 1 - i])) return false;
        return true;
    }

    std::vector<double> to_doubles() const {
        std::vector<double> out;
        for (const auto& e : entries_) out.push_back(e.to_double());
        return out;
    }

    friend bool operator==(const Spectrum&, const Spectrum&) = default;

private:
    std::vector<SqrtRational> entries_;
};

struct CertifiedTwoDiagonal {
    TwoDiagonal matrix;
    Spectrum spectrum;
};

struct CertifiedSymTridiag {
    SymTridiag matrix;
    Spectrum spectrum;
};

// det(lambda I - A), coefficients from degree 0 upward, via
// p_k = lambda p_{k-1} - q_{k-2} p_{k-2} with q the products b_i c_i.
inline std::vector<Rational> charpoly_from_products(const std::vector<Rational>& q) {
    std::vector<Rational> p0{Rational(1)};
    std::vector<Rational> p1{Rational(0), Rational(1)};
    for (const auto& qi : q) {
        std::vector<Rational> p2(p1.size() + 1);
        for (std::size_t i = 0; i < p1.size(); ++i) p2[i + 1] = p1[i];
        for (std::size_t i = 0; i < p0.size(); ++i) p2[i] -= qi * p0[i];
        p0 = std::move(p1);
        p1 = std::move(p2);
    }
    return p1;
}

inline std::vector<Rational> charpoly(const TwoDiagonal& m) { return charpoly_from_products(m.products()); }
inline std::vector<Rational> charpoly(const SymTridiag& m) { return charpoly_from_products(m.squares()); }

// lambda^z prod (lambda^2 - eps^2); empty when the spectrum is not symmetric.
inline std::vector<Rational> spectrum_polynomial(const Spectrum& s) {
    if (!s.is_symmetric()) return {};
    std::vector<Rational> p(s.zero_count() + 1);
    p.back() = 1;
    for (const auto& e : s.entries()) {
        if (e.sign() <= 0) continue;
        std::vector<Rational> next(p.size() + 2);
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i + 2] += p[i];
            next[i] -= e.radicand() * p[i];
        }
        p = std::move(next);
    }
    return p;
}

inline bool verify_spectrum_exact(const std::vector<Rational>& products, const Spectrum& s) {
    if (s.size() != products.size() + 1) return false;
    auto target = spectrum_polynomial(s);
    return !target.empty() && charpoly_from_products(products) == target;
}

inline bool verify_spectrum_exact(const TwoDiagonal& m, const Spectrum& s) {
    return verify_spectrum_exact(m.products(), s);
}

inline bool verify_spectrum_exact(const SymTridiag& m, const Spectrum& s) {
    return verify_spectrum_exact(m.squares(), s);
}

inline CertifiedTwoDiagonal sylvester_kac(long N) {
    if (N < 1) throw std::invalid_argument("sylvester_kac: N must be >= 1");
    TwoDiagonal m;
    for (long i = 1; i <= N; ++i) {
        m.super.emplace_back(i);
        m.sub.emplace_back(N + 1 - i);
    }
    std::vector<Rational> r;
    for (long e = N; e > 0; e -= 2) r.push_back(Rational(e * e));
    return {std::move(m), Spectrum::symmetric(r, N % 2 == 0 ? 1 : 0)};
}

// Dimension 2N+1, spectrum {0, +-2 sqrt(k(g+d+k+1))}.
inline CertifiedTwoDiagonal extended_kac_odd(long N, const Rational& g, const Rational& d) {
    if (N < 1) throw std::invalid_argument("extended_kac_odd: N must be >= 1");
    TwoDiagonal m;
    for (long j = 0; j < N; ++j) {
        m.super.push_back(2 * g + 2 * (j + 1));
        m.super.emplace_back(2 * (j + 1));
        m.sub.emplace_back(2 * (N - j));
        m.sub.push_back(2 * d + 2 * (N - j));
    }
    std::vector<Rational> r;
    for (long k = 1; k <= N; ++k) r.push_back(4 * k * (g + d + k + 1));
    return {std::move(m), Spectrum::symmetric(r, 1)};
}

// Dimension 2N, spectrum {+-2 sqrt((g+k)(d+k))}.
inline CertifiedTwoDiagonal extended_kac_even(long N, const Rational& g, const Rational& d) {
    if (N < 1) throw std::invalid_argument("extended_kac_even: N must be >= 1");
    TwoDiagonal m;
    for (long j = 0; j < N; ++j) {
        m.super.push_back(2 * g + 2 * (j + 1));
        m.sub.push_back(2 * d + 2 * (N - j));
        if (j < N - 1) {
            m.super.emplace_back(2 * (j + 1));
            m.sub.emplace_back(2 * (N - 1 - j));
        }
    }
    std::vector<Rational> r;
    for (long k = 1; k <= N; ++k) r.push_back(4 * (g + k) * (d + k));
    return {std::move(m), Spectrum::symmetric(r, 0)};
}

inline bool has_double_matrix(DoubleCase c, const FamilyParams& p) {
    switch (c) {
        case DoubleCase::RacahII:
        case DoubleCase::RacahIV: return false;
        case DoubleCase::RacahI:
        case DoubleCase::RacahIII:
            return std::holds_alternative<RacahParams>(p) &&
                   std::get<RacahParams>(p).selector() == RacahMinusN::Alpha;
        default: return family_of(p) == family_of(c);
    }
}

namespace detail {

inline void require_double_matrix(DoubleCase c, const FamilyParams& p) {
    if (family_of(p) != family_of(c))
        throw FamilyMismatch("case " + to_string(c) + " does not take " + describe(p));
    if (!has_double_matrix(c, p))
        throw Unsupported("no matrix proposition for " + to_string(c) + " with " + describe(p));
}

// M_k^2 for the Hahn I form; Hahn III uses it with alpha and beta swapped.
inline std::vector<Rational> hahn_one_squares(const Rational& a, const Rational& b, long N) {
    std::vector<Rational> out;
    for (long k = 0; k <= N; ++k) {
        out.push_back((k + a + 1) * (k + a + b + 1) * (k + a + b + 2 + N) /
                      ((2 * k + a + b + 1) * (2 * k + a + b + 2)));
        if (k < N)
            out.push_back((k + b + 1) * Rational((k + 1) * (N - k)) / ((2 * k + a + b + 2) * (2 * k + a + b + 3)));
    }
    return out;
}

inline std::vector<Rational> hahn_two_squares(const Rational& a, const Rational& b, long N) {
    std::vector<Rational> out;
    for (long k = 0; k < N; ++k) {
        out.push_back((k + a + 1) * (k + a + b + 1) * Rational(N - k) / ((2 * k + a + b + 1) * (2 * k + a + b + 2)));
        out.push_back((k + b + 1) * (k + a + b + 2 + N) * Rational(k + 1) / ((2 * k + a + b + 2) * (2 * k + a + b + 3)));
    }
    return out;
}

}  // namespace detail

// Squares M_k^2 of the off-diagonal entries of the doubled Jacobi matrix.
// DualHahnIII and RacahI follow their propositions, which are stated after
// the delta -> delta+1 shift of the underlying pair.
inline std::vector<Rational> double_matrix_squares(DoubleCase c, const FamilyParams& params) {
    detail::require_double_matrix(c, params);
    std::vector<Rational> out;
    switch (c) {
        case DoubleCase::DualHahnI: {
            const auto& p = std::get<DualHahnParams>(params);
            for (long k = 0; k < p.N; ++k) {
                out.push_back((k + p.gamma + 1) * Rational(p.N - k));
                out.push_back(Rational(k + 1) * (p.N + p.delta - k));
            }
            return out;
        }
        case DoubleCase::DualHahnII: {
            const auto& p = std::get<DualHahnParams>(params);
            for (long k = 0; k < p.N; ++k) {
                out.push_back((p.N + p.delta - k) * Rational(p.N - k));
                out.push_back(Rational(k + 1) * (k + p.gamma + 1));
            }
            return out;
        }
        case DoubleCase::DualHahnIII: {
            const auto& p = std::get<DualHahnParams>(params);
            for (long k = 0; k <= p.N; ++k) {
                out.push_back((k + p.gamma + 1) * (p.N + p.delta + 1 - k));
                if (k < p.N) out.emplace_back((k + 1) * (p.N - k));
            }
            return out;
        }
        case DoubleCase::HahnI: {
            const auto& p = std::get<HahnParams>(params);
            return detail::hahn_one_squares(p.alpha, p.beta, p.N);
        }
        case DoubleCase::HahnIII: {
            const auto& p = std::get<HahnParams>(params);
            return detail::hahn_one_squares(p.beta, p.alpha, p.N);
        }
        case DoubleCase::HahnII: {
            const auto& p = std::get<HahnParams>(params);
            return detail::hahn_two_squares(p.alpha, p.beta, p.N);
        }
        case DoubleCase::HahnIV: {
            const auto& p = std::get<HahnParams>(params);
            return detail::hahn_two_squares(p.beta, p.alpha, p.N);
        }
        case DoubleCase::RacahI: {
            const auto& p = std::get<RacahParams>(params);
            const auto &b = p.beta(), &g = p.gamma(), &d = p.delta();
            long N = p.N();
            for (long k = 0; k <= N; ++k) {
                out.push_back((N - b - k) * (g + 1 + k) * (N + d + 1 - k) * (k + b + 1) /
                              ((N - b - 2 * k) * (2 * k - N + 1 + b)));
                if (k < N)
                    out.push_back((g + N - b - k) * Rational((k + 1) * (N - k)) * (k + b + d + 2) /
                                  ((N - b - 2 * k - 2) * (2 * k - N + 1 + b)));
            }
            return out;
        }
        default: {  // RacahIII
            const auto& p = std::get<RacahParams>(params);
            const auto &b = p.beta(), &g = p.gamma(), &d = p.delta();
            long N = p.N();
            for (long k = 0; k < N; ++k) {
                out.push_back((k + g + 1) * (-N + b + k) * Rational(N - k) * (k + b + d + 1) /
                              ((N - b - 2 * k) * (N - b - 2 * k - 1)));
                out.push_back((g + N - b - k) * Rational(k + 1) * (k + b + 1) * (k - d - N) /
                              ((N - b - 2 * k - 2) * (N - b - 2 * k - 1)));
            }
            return out;
        }
    }
}

// eps_k^2 in k order and the number of zero eigenvalues.
struct SpectrumData {
    std::vector<Rational> radicands;
    int zeros = 0;
};

inline SpectrumData double_spectrum_data(DoubleCase c, const FamilyParams& params) {
    detail::require_double_matrix(c, params);
    SpectrumData s;
    switch (c) {
        case DoubleCase::DualHahnI: {
            const auto& p = std::get<DualHahnParams>(params);
            for (long k = 1; k <= p.N; ++k) s.radicands.push_back(k * (k + p.gamma + p.delta + 1));
            s.zeros = 1;
            break;
        }
        case DoubleCase::DualHahnII: {
            const auto& p = std::get<DualHahnParams>(params);
            for (long k = 1; k <= p.N; ++k) s.radicands.push_back(k * (p.gamma + p.delta + 1 + 2 * p.N - k));
            s.zeros = 1;
            break;
        }
        case DoubleCase::DualHahnIII: {
            const auto& p = std::get<DualHahnParams>(params);
            for (long k = 0; k <= p.N; ++k) s.radicands.push_back((k + p.gamma + 1) * (k + p.delta + 1));
            break;
        }
        case DoubleCase::HahnI:
        case DoubleCase::HahnIII: {
            const auto& p = std::get<HahnParams>(params);
            const Rational& a = c == DoubleCase::HahnI ? p.alpha : p.beta;
            for (long k = 0; k <= p.N; ++k) s.radicands.push_back(k + a + 1);
            break;
        }
        case DoubleCase::HahnII:
        case DoubleCase::HahnIV: {
            const auto& p = std::get<HahnParams>(params);
            for (long k = 1; k <= p.N; ++k) s.radicands.emplace_back(k);
            s.zeros = 1;
            break;
        }
        case DoubleCase::RacahI: {
            const auto& p = std::get<RacahParams>(params);
            for (long k = 0; k <= p.N(); ++k) s.radicands.push_back((k + p.gamma() + 1) * (k + p.delta() + 1));
            break;
        }
        default: {  // RacahIII
            const auto& p = std::get<RacahParams>(params);
            for (long k = 1; k <= p.N(); ++k) s.radicands.push_back(k * (k + p.gamma() + p.delta() + 1));
            s.zeros = 1;
            break;
        }
    }
    return s;
}

// Symmetric doubled Jacobi matrix and its closed-form spectrum.
inline CertifiedSymTridiag double_matrix(DoubleCase c, const FamilyParams& params) {
    auto squares = double_matrix_squares(c, params);
    auto sd = double_spectrum_data(c, params);
    SymTridiag m;
    for (std::size_t i = 0; i < squares.size(); ++i) {
        if (squares[i].sign() < 0)
            throw InadmissibleParams(to_string(c) + ": M_" + std::to_string(i) + "^2 = " + squares[i].str() +
                                     " is negative for " + describe(params));
        m.off.push_back(SqrtRational::sqrt(squares[i]));
    }
    for (const auto& r : sd.radicands)
        if (r.sign() < 0)
            throw InadmissibleParams(to_string(c) + ": eigenvalue square " + r.str() + " is negative");
    return {std::move(m), Spectrum::symmetric(sd.radicands, sd.zeros)};
}

// Spectrum of a double matrix as displayed in D: -eps_N..-eps_0, [0], eps_0..eps_N.
inline std::vector<SqrtRational> displayed_eigenvalues(DoubleCase c, const FamilyParams& params) {
    auto sd = double_spectrum_data(c, params);
    std::vector<SqrtRational> out;
    for (auto it = sd.radicands.rbegin(); it != sd.radicands.rend(); ++it) out.push_back(SqrtRational(-1, *it));
    for (int i = 0; i < sd.zeros; ++i) out.emplace_back();
    for (const auto& r : sd.radicands) out.push_back(SqrtRational(1, r));
    return out;
}

// Non-symmetric integer-friendly forms of the dual Hahn matrices.
inline CertifiedTwoDiagonal nonsymmetric_form(DoubleCase c, const DualHahnParams& p) {
    const auto &g = p.gamma, &d = p.delta;
    long N = p.N;
    TwoDiagonal m;
    switch (c) {
        case DoubleCase::DualHahnI:
            for (long j = 0; j < N; ++j) {
                m.super.push_back(g + 1 + j);
                m.super.emplace_back(j + 1);
                m.sub.emplace_back(N - j);
                m.sub.push_back(N - j + d);
            }
            break;
        case DoubleCase::DualHahnII:
            for (long j = 0; j < N; ++j) {
                m.super.push_back(g + N - j);
                m.super.emplace_back(j + 1);
                m.sub.emplace_back(N - j);
                m.sub.push_back(d + 1 + j);
            }
            break;
        case DoubleCase::DualHahnIII:
            for (long j = 0; j <= N; ++j) {
                m.super.push_back(g + 1 + j);
                m.sub.push_back(d + N + 1 - j);
                if (j < N) {
                    m.super.emplace_back(j + 1);
                    m.sub.emplace_back(N - j);
                }
            }
            break;
        default:
            throw Unsupported("nonsymmetric_form is defined for the dual Hahn cases only");
    }
    auto sd = double_spectrum_data(c, p);
    return {std::move(m), Spectrum::symmetric(sd.radicands, sd.zeros)};
}

inline SymTridiag symmetrize(const TwoDiagonal& m) {
    SymTridiag s;
    for (std::size_t i = 0; i < m.super.size(); ++i) {
        Rational q = m.super[i] * m.sub[i];
        if (q.sign() < 0)
            throw NegativeProduct("b_" + std::to_string(i) + " c_" + std::to_string(i) + " = " + q.str() + " < 0");
        s.off.push_back(SqrtRational::sqrt(q));
    }
    return s;
}

// Diagonal D with D A D^{-1} = symmetrize(A); d_0 = 1, d_{i+1}^2 = d_i^2 b_i / c_i.
inline std::vector<SqrtRational> symmetrizing_diagonal(const TwoDiagonal& m) {
    std::vector<SqrtRational> d{SqrtRational::sqrt(1)};
    Rational sq = 1;
    for (std::size_t i = 0; i < m.super.size(); ++i) {
        const auto &b = m.super[i], &c = m.sub[i];
        if (b.is_zero() && c.is_zero()) {
            sq = 1;  // decoupled blocks, restart the scaling
        } else if (b.is_zero() || c.is_zero()) {
            throw NegativeProduct("one-sided zero at position " + std::to_string(i) + "; not symmetrizable");
        } else {
            sq = sq * b / c;
            if (sq.sign() < 0) throw NegativeProduct("b_i c_i < 0 at position " + std::to_string(i));
        }
        d.push_back(SqrtRational::sqrt(sq));
    }
    return d;
}

}  // namespace doubling
