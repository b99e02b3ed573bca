#pragma once

#include <map>
#include <vector>

#include "doubling/specmat.hpp"

namespace doubling {

// scale * (even + odd * q)
struct EvenOddValue {
    SqrtRational scale;
    Rational even;
    Rational odd;

    double to_double(const SqrtRational& q) const {
        return scale.to_double() * (even.to_double() + odd.to_double() * q.to_double());
    }
};

// Polynomials P_0..P_{dim-1} in q, orthogonal on a symmetric square-root
// support. Built for DualHahnI, HahnI and HahnII.
class DoubledSystem {
public:
    DoubledSystem(DoubleCase kind, FamilyParams params) : kind_(kind), params_(std::move(params)) {
        if (kind_ != DoubleCase::DualHahnI && kind_ != DoubleCase::HahnI && kind_ != DoubleCase::HahnII)
            throw Unsupported("no doubled system constructed for " + to_string(kind_));
        if (family_of(params_) != family_of(kind_))
            throw FamilyMismatch("case " + to_string(kind_) + " does not take " + describe(params_));
        long N = degree_cap(params_);
        auto add = [&](long k, const Rational& t) {
            if (t.sign() < 0) throw InadmissibleParams("support point q^2 = " + t.str() + " < 0");
            if (t.is_zero()) {
                points_.push_back({SqrtRational(), k});
            } else {
                points_.push_back({SqrtRational(-1, t), k});
                points_.push_back({SqrtRational(1, t), k});
            }
        };
        switch (kind_) {
            case DoubleCase::DualHahnI: {
                const auto& p = std::get<DualHahnParams>(params_);
                for (long k = 0; k <= N; ++k) add(k, k * (k + p.gamma + p.delta + 1));
                break;
            }
            case DoubleCase::HahnI: {
                const auto& p = std::get<HahnParams>(params_);
                for (long k = 0; k <= N; ++k) add(k, k + p.alpha + 1);
                break;
            }
            default:
                for (long k = 0; k <= N; ++k) add(k, Rational(k));
                break;
        }
        std::sort(points_.begin(), points_.end(), [](const Point& a, const Point& b) { return a.q < b.q; });
    }

    DoubleCase kind() const { return kind_; }
    const FamilyParams& params() const { return params_; }
    std::size_t dim() const { return points_.size(); }

    std::vector<SqrtRational> support() const {
        std::vector<SqrtRational> out;
        for (const auto& p : points_) out.push_back(p.q);
        return out;
    }

    // Index k of the underlying grid point; UnsupportedPoint if q is not in S.
    long grid_index(const SqrtRational& q) const {
        for (const auto& p : points_)
            if (p.q == q) return p.k;
        throw UnsupportedPoint("q = " + q.str() + " is not in the support");
    }

    Rational weight(const SqrtRational& q) const {
        long k = grid_index(q);
        Rational doubling = q.is_zero() ? 2 : 1;
        switch (kind_) {
            case DoubleCase::DualHahnI: return dual_hahn_weight(k, std::get<DualHahnParams>(params_)) * doubling;
            case DoubleCase::HahnI: return hahn_weight(k, std::get<HahnParams>(params_));
            default: return hahn_weight(k, std::get<HahnParams>(params_)) * doubling;
        }
    }

    Rational norm(long n) const {
        if (kind_ == DoubleCase::DualHahnI) return dual_hahn_norm(n / 2, std::get<DualHahnParams>(params_));
        return hahn_norm(n / 2, std::get<HahnParams>(params_));
    }

private:
    struct Point {
        SqrtRational q;
        long k;
    };
    DoubleCase kind_;
    FamilyParams params_;
    std::vector<Point> points_;
};

inline EvenOddValue doubled_eval(const DoubledSystem& s, long n, const SqrtRational& q) {
    if (n < 0 || n >= static_cast<long>(s.dim()))
        throw DegreeOutOfRange("doubled_eval: degree " + std::to_string(n) + " out of range");
    s.grid_index(q);
    Rational t = q.radicand();
    long m = n / 2;
    int sgn = m % 2 ? -1 : 1;
    EvenOddValue v;
    if (n % 2 == 0) {
        v.scale = SqrtRational(sgn, Rational(1, 2));
        if (s.kind() == DoubleCase::DualHahnI) {
            v.even = dual_hahn_eval_lambda(m, t, std::get<DualHahnParams>(s.params()));
        } else {
            const auto& p = std::get<HahnParams>(s.params());
            Rational x = s.kind() == DoubleCase::HahnI ? t - p.alpha - 1 : t;
            v.even = hahn_eval(m, x, p);
        }
        return v;
    }
    Rational c2;
    switch (s.kind()) {
        case DoubleCase::DualHahnI: {
            const auto& p = std::get<DualHahnParams>(s.params());
            c2 = (m + p.gamma + 1) * Rational(p.N - m) / pow((p.gamma + 1) * p.N, 2);
            v.odd = dual_hahn_eval_lambda(m, t - p.gamma - p.delta - 2, DualHahnParams{p.gamma + 1, p.delta + 1, p.N - 1});
            break;
        }
        case DoubleCase::HahnI: {
            const auto& p = std::get<HahnParams>(s.params());
            const auto &a = p.alpha, &b = p.beta;
            c2 = (m + a + 1) * (m + a + b + 1) * (2 * m + 2 + a + b) /
                 (pow(a + 1, 2) * (m + p.N + a + b + 2) * (2 * m + a + b + 1));
            v.odd = hahn_eval(m, t - a - 1, HahnParams{a + 1, b, p.N});
            break;
        }
        default: {
            const auto& p = std::get<HahnParams>(s.params());
            const auto &a = p.alpha, &b = p.beta;
            c2 = Rational(p.N - m) * (m + a + 1) * (m + a + b + 1) * (2 * m + a + b + 2) /
                 ((2 * m + a + b + 1) * pow((a + 1) * p.N, 2));
            v.odd = hahn_eval(m, t - 1, HahnParams{a + 1, b, p.N - 1});
            break;
        }
    }
    if (c2.sign() < 0) throw InadmissibleParams("odd prefactor squared is negative");
    v.scale = SqrtRational(-sgn, c2 / 2);
    return v;
}

// Residue of sum_q w(q) P_n(q) P_m(q) - norm(n) delta_nm as an exact sum of
// signed square roots; an empty list means exactly zero.
struct OrthogonalityResidue {
    long n, m;
    std::vector<SqrtRational> terms;

    bool is_zero() const { return terms.empty(); }
};

inline std::vector<OrthogonalityResidue> verify_discrete_orthogonality(const DoubledSystem& s) {
    auto S = s.support();
    long dim = static_cast<long>(s.dim());
    std::vector<Rational> w;
    for (const auto& q : S) w.push_back(s.weight(q));
    std::vector<std::vector<EvenOddValue>> P(dim);
    for (long n = 0; n < dim; ++n)
        for (const auto& q : S) P[n].push_back(doubled_eval(s, n, q));
    std::vector<OrthogonalityResidue> out;
    for (long n = 0; n < dim; ++n) {
        for (long m = n; m < dim; ++m) {
            OrthogonalityResidue r{n, m, {}};
            SqrtRational scale = P[n][0].scale * P[m][0].scale;
            if ((n - m) % 2 == 0) {
                Rational sum = 0;
                for (std::size_t i = 0; i < S.size(); ++i) {
                    const auto &u = P[n][i], &v = P[m][i];
                    sum += w[i] * (u.even * v.even + u.odd * v.odd * S[i].radicand());
                }
                if (n == m) {
                    Rational res = scale.to_rational() * sum - s.norm(n);
                    if (!res.is_zero()) r.terms.push_back(SqrtRational::from_rational(res));
                } else if (!sum.is_zero()) {
                    r.terms.push_back(scale * sum);
                }
            } else {
                // Linear in q: group by |q| so the +q and -q contributions meet.
                std::map<Rational, Rational> groups;
                for (std::size_t i = 0; i < S.size(); ++i) {
                    if (S[i].is_zero()) continue;
                    const auto &u = P[n][i], &v = P[m][i];
                    Rational c = w[i] * (u.even * v.odd + u.odd * v.even);
                    groups[S[i].radicand()] += S[i].sign() > 0 ? c : -c;
                }
                for (const auto& [rad, g] : groups)
                    if (!g.is_zero()) r.terms.push_back(scale * SqrtRational::sqrt(rad) * g);
            }
            out.push_back(std::move(r));
        }
    }
    return out;
}

// Degree of P_n in q from its values on the support (Newton divided differences in t = q^2).
inline long degree_in_q(const DoubledSystem& s, long n) {
    std::vector<Rational> t, f;
    for (const auto& q : s.support()) {
        if (q.sign() < 0) continue;
        auto v = doubled_eval(s, n, q);
        t.push_back(q.radicand());
        f.push_back(n % 2 ? v.odd : v.even);
    }
    long deg = -1;
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (!f[j].is_zero()) deg = static_cast<long>(j);
        for (std::size_t i = f.size() - 1; i > j; --i) f[i] = (f[i] - f[i - 1]) / (t[i] - t[i - j - 1]);
    }
    if (deg < 0) return -1;
    return 2 * deg + (n % 2);
}

}  // namespace doubling
