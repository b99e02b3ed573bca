#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "doubling/hypergeometric.hpp"

namespace doubling {

struct HahnParams {
    Rational alpha, beta;
    long N = 1;

    // Orthogonality range: both above -1, or both below -N.
    bool is_admissible() const {
        return (alpha > -1 && beta > -1) || (alpha < -N && beta < -N);
    }
};

struct DualHahnParams {
    Rational gamma, delta;
    long N = 1;

    bool is_admissible() const {
        return (gamma > -1 && delta > -1) || (gamma < -N && delta < -N);
    }
};

// Which denominator parameter of the 4F3 equals -N.
enum class RacahMinusN { Alpha, BetaDelta, Gamma };

class RacahParams {
public:
    RacahParams(Rational alpha, Rational beta, Rational gamma, Rational delta, RacahMinusN selector)
        : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)),
          delta_(std::move(delta)), selector_(selector) {
        Rational v = selected_denominator(alpha_, beta_, gamma_, delta_, selector_);
        auto n = (-v).to_long();
        if (!n || *n < 0)
            throw InadmissibleParams("Racah parameters: selected denominator " + v.str() +
                                     " is not -N for a nonnegative integer N");
        N_ = *n;
    }

    // Build with the selected parameter solved from N.
    static RacahParams with_alpha_minus_n(long N, Rational beta, Rational gamma, Rational delta) {
        return RacahParams(Rational(-N - 1), std::move(beta), std::move(gamma), std::move(delta),
                           RacahMinusN::Alpha);
    }
    static RacahParams with_gamma_minus_n(long N, Rational alpha, Rational beta, Rational delta) {
        return RacahParams(std::move(alpha), std::move(beta), Rational(-N - 1), std::move(delta),
                           RacahMinusN::Gamma);
    }
    static RacahParams with_beta_delta_minus_n(long N, Rational alpha, Rational beta, Rational gamma) {
        Rational delta = Rational(-N - 1) - beta;
        return RacahParams(std::move(alpha), std::move(beta), std::move(gamma), std::move(delta),
                           RacahMinusN::BetaDelta);
    }

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }
    const Rational& gamma() const { return gamma_; }
    const Rational& delta() const { return delta_; }
    RacahMinusN selector() const { return selector_; }
    long N() const { return N_; }

    // Positivity of the Jacobi matrix: A(n-1) C(n) > 0 for 1 <= n <= N.
    bool is_admissible() const;

    static Rational selected_denominator(const Rational& a, const Rational& b, const Rational& g,
                                         const Rational& d, RacahMinusN s) {
        switch (s) {
            case RacahMinusN::Alpha: return a + 1;
            case RacahMinusN::BetaDelta: return b + d + 1;
            case RacahMinusN::Gamma: return g + 1;
        }
        return 0;
    }

    friend bool operator==(const RacahParams&, const RacahParams&) = default;

private:
    Rational alpha_, beta_, gamma_, delta_;
    RacahMinusN selector_;
    long N_ = 1;
};

struct KrawtchoukParams {
    Rational p;
    long N = 1;

    bool is_admissible() const { return p > 0 && p < 1; }
};

using FamilyParams = std::variant<HahnParams, DualHahnParams, RacahParams, KrawtchoukParams>;

enum class Family { Hahn, DualHahn, Racah, Krawtchouk };

inline Family family_of(const FamilyParams& p) { return static_cast<Family>(p.index()); }

inline long degree_cap(const FamilyParams& p) {
    return std::visit([](const auto& q) {
        if constexpr (std::is_same_v<std::decay_t<decltype(q)>, RacahParams>)
            return q.N();
        else
            return q.N;
    }, p);
}

inline std::string to_string(RacahMinusN s) {
    switch (s) {
        case RacahMinusN::Alpha: return "alpha";
        case RacahMinusN::BetaDelta: return "betadelta";
        case RacahMinusN::Gamma: return "gamma";
    }
    return "?";
}

inline std::string describe(const FamilyParams& p) {
    struct V {
        std::string operator()(const HahnParams& q) const {
            return "hahn(alpha=" + q.alpha.str() + ", beta=" + q.beta.str() + ", N=" + std::to_string(q.N) + ")";
        }
        std::string operator()(const DualHahnParams& q) const {
            return "dual-hahn(gamma=" + q.gamma.str() + ", delta=" + q.delta.str() + ", N=" + std::to_string(q.N) + ")";
        }
        std::string operator()(const RacahParams& q) const {
            return "racah(alpha=" + q.alpha().str() + ", beta=" + q.beta().str() + ", gamma=" + q.gamma().str() +
                   ", delta=" + q.delta().str() + ", N=" + std::to_string(q.N()) + " via " + to_string(q.selector()) + ")";
        }
        std::string operator()(const KrawtchoukParams& q) const {
            return "krawtchouk(p=" + q.p.str() + ", N=" + std::to_string(q.N) + ")";
        }
    };
    return std::visit(V{}, p);
}

namespace detail {
inline void check_degree(long n, long N) {
    if (n < 0 || n > N)
        throw DegreeOutOfRange("degree " + std::to_string(n) + " outside 0.." + std::to_string(N));
}
}  // namespace detail

// 3F2(-n, n+a+b+1, -x; a+1, -N; 1)
inline Rational hahn_eval(long n, const Rational& x, const HahnParams& p) {
    detail::check_degree(n, p.N);
    return hypergeometric_terminating({Rational(-n), n + p.alpha + p.beta + 1, -x},
                                      {p.alpha + 1, Rational(-p.N)});
}

// 3F2(-x, x+g+d+1, -n; g+1, -N; 1)
inline Rational dual_hahn_eval(long n, const Rational& x, const DualHahnParams& p) {
    detail::check_degree(n, p.N);
    return hypergeometric_terminating({-x, x + p.gamma + p.delta + 1, Rational(-n)},
                                      {p.gamma + 1, Rational(-p.N)});
}

// Dual Hahn polynomial as a polynomial in lambda = x(x+g+d+1).
// Uses (-x)_k (x+g+d+1)_k = prod_{i<k} (i(i+g+d+1) - lambda).
inline Rational dual_hahn_eval_lambda(long n, const Rational& lambda, const DualHahnParams& p) {
    detail::check_degree(n, p.N);
    Rational c = p.gamma + p.delta + 1;
    Rational sum = 1, term = 1;
    for (long k = 0; k < n; ++k) {
        Rational den = (p.gamma + 1 + k) * Rational(k - p.N) * Rational(k + 1);
        term *= Rational(k - n) * (k * (k + c) - lambda) / den;
        sum += term;
    }
    return sum;
}

// 4F3(-n, n+a+b+1, -x, x+g+d+1; a+1, b+d+1, g+1; 1)
inline Rational racah_eval(long n, const Rational& x, const RacahParams& p) {
    detail::check_degree(n, p.N());
    const auto &a = p.alpha(), &b = p.beta(), &g = p.gamma(), &d = p.delta();
    return hypergeometric_terminating({Rational(-n), n + a + b + 1, -x, x + g + d + 1},
                                      {a + 1, b + d + 1, g + 1});
}

// Racah polynomial as a polynomial in lambda = x(x+g+d+1).
inline Rational racah_eval_lambda(long n, const Rational& lambda, const RacahParams& p) {
    detail::check_degree(n, p.N());
    const auto &a = p.alpha(), &b = p.beta(), &g = p.gamma(), &d = p.delta();
    Rational c = g + d + 1;
    Rational sum = 1, term = 1;
    for (long k = 0; k < n; ++k) {
        Rational den = (a + 1 + k) * (b + d + 1 + k) * (g + 1 + k) * Rational(k + 1);
        if (den.is_zero()) throw DenominatorPole("Racah denominator vanishes at k=" + std::to_string(k));
        term *= Rational(k - n) * (n + a + b + 1 + k) * (k * (k + c) - lambda) / den;
        sum += term;
    }
    return sum;
}

// Upward recurrence from K_0 = 1, K_1 = 1 - x/(pN).
inline Rational krawtchouk_eval(long n, long x, const Rational& p, long N) {
    detail::check_degree(n, N);
    if (x < 0 || x > N) throw std::out_of_range("krawtchouk_eval: x outside 0..N");
    if (p.is_zero()) throw DivisionByZero("krawtchouk_eval: p = 0");
    Rational prev = 1;
    if (n == 0) return prev;
    Rational cur = 1 - Rational(x) / (p * N);
    for (long k = 1; k < n; ++k) {
        Rational A = p * (N - k);
        Rational C = k * (1 - p);
        Rational next = ((A + C - x) * cur - C * prev) / A;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline Rational evaluate(const FamilyParams& params, long n, const Rational& x) {
    struct V {
        long n;
        const Rational& x;
        Rational operator()(const HahnParams& p) const { return hahn_eval(n, x, p); }
        Rational operator()(const DualHahnParams& p) const { return dual_hahn_eval(n, x, p); }
        Rational operator()(const RacahParams& p) const { return racah_eval(n, x, p); }
        Rational operator()(const KrawtchoukParams& p) const {
            auto xi = x.to_long();
            if (!xi) throw UnsupportedPoint("Krawtchouk evaluation needs an integer x, got " + x.str());
            return krawtchouk_eval(n, *xi, p.p, p.N);
        }
    };
    return std::visit(V{n, x}, params);
}

// Lambda y_n = A(n) y_{n+1} - (A(n)+C(n)) y_n + C(n) y_{n-1}
struct RecurrenceData {
    std::function<Rational(long)> A;
    std::function<Rational(long)> C;
    std::function<Rational(const Rational&)> Lambda;
};

inline RecurrenceData hahn_recurrence(const HahnParams& p) {
    Rational a = p.alpha, b = p.beta;
    long N = p.N;
    return {
        [=](long n) { return (n + a + 1) * (n + a + b + 1) * Rational(N - n) / ((2 * n + a + b + 1) * (2 * n + a + b + 2)); },
        [=](long n) {
            if (n == 0) return Rational(0);
            return n * (n + a + b + N + 1) * (n + b) / ((2 * n + a + b) * (2 * n + a + b + 1));
        },
        [](const Rational& x) { return -x; },
    };
}

inline RecurrenceData dual_hahn_recurrence(const DualHahnParams& p) {
    Rational g = p.gamma, d = p.delta;
    long N = p.N;
    return {
        [=](long n) { return (n + g + 1) * Rational(n - N); },
        [=](long n) { return n * (n - d - N - 1); },
        [=](const Rational& x) { return x * (x + g + d + 1); },
    };
}

inline RecurrenceData racah_recurrence(const RacahParams& p) {
    Rational a = p.alpha(), b = p.beta(), g = p.gamma(), d = p.delta();
    return {
        [=](long n) {
            return (n + a + 1) * (n + a + b + 1) * (n + g + 1) * (n + b + d + 1) /
                   ((2 * n + a + b + 1) * (2 * n + a + b + 2));
        },
        [=](long n) {
            if (n == 0) return Rational(0);
            return n * (n + a + b - g) * (n + a - d) * (n + b) / ((2 * n + a + b) * (2 * n + a + b + 1));
        },
        [=](const Rational& x) { return x * (x + g + d + 1); },
    };
}

inline RecurrenceData krawtchouk_recurrence(const KrawtchoukParams& p) {
    Rational q = p.p;
    long N = p.N;
    return {
        [=](long n) { return q * (N - n); },
        [=](long n) { return n * (1 - q); },
        [](const Rational& x) { return -x; },
    };
}

inline RecurrenceData recurrence_data(const FamilyParams& params) {
    struct V {
        RecurrenceData operator()(const HahnParams& p) const { return hahn_recurrence(p); }
        RecurrenceData operator()(const DualHahnParams& p) const { return dual_hahn_recurrence(p); }
        RecurrenceData operator()(const RacahParams& p) const { return racah_recurrence(p); }
        RecurrenceData operator()(const KrawtchoukParams& p) const { return krawtchouk_recurrence(p); }
    };
    return std::visit(V{}, params);
}

inline bool RacahParams::is_admissible() const {
    auto rec = racah_recurrence(*this);
    try {
        for (long n = 1; n <= N_; ++n)
            if ((rec.A(n - 1) * rec.C(n)).sign() <= 0) return false;
    } catch (const DivisionByZero&) {
        return false;
    }
    return true;
}

inline bool is_admissible(const FamilyParams& p) {
    return std::visit([](const auto& q) { return q.is_admissible(); }, p);
}

// All y_0..y_N at one point. Runs the recurrence upward and falls back to
// direct series evaluation where a coefficient is singular.
inline std::vector<Rational> evaluate_all_degrees(const FamilyParams& params, const Rational& x) {
    long N = degree_cap(params);
    std::vector<Rational> y;
    y.reserve(N + 1);
    y.emplace_back(1);
    auto rec = recurrence_data(params);
    try {
        Rational lam = rec.Lambda(x);
        for (long n = 0; n < N; ++n) {
            Rational A = rec.A(n), C = rec.C(n);
            if (A.is_zero()) break;
            Rational next = (lam + A + C) * y[n];
            if (n > 0) next -= C * y[n - 1];
            y.push_back(next / A);
        }
    } catch (const DivisionByZero&) {
    }
    for (long n = static_cast<long>(y.size()); n <= N; ++n) y.push_back(evaluate(params, n, x));
    return y;
}

// w(x) = binom(a+x, x) binom(b+N-x, N-x)
inline Rational hahn_weight(long x, const HahnParams& p) {
    if (x < 0 || x > p.N) throw std::out_of_range("hahn_weight: x outside 0..N");
    return pochhammer(p.alpha + 1, x) / factorial(x) * pochhammer(p.beta + 1, p.N - x) / factorial(p.N - x);
}

inline Rational hahn_norm(long n, const HahnParams& p) {
    detail::check_degree(n, p.N);
    const auto &a = p.alpha, &b = p.beta;
    Rational num = pochhammer(n + a + b + 1, p.N + 1) * pochhammer(b + 1, n) * factorial(n);
    if (n % 2) num = -num;
    Rational den = (2 * n + a + b + 1) * pochhammer(a + 1, n) * pochhammer(Rational(-p.N), n) * factorial(p.N);
    return num / den;
}

inline Rational dual_hahn_weight(long x, const DualHahnParams& p) {
    if (x < 0 || x > p.N) throw std::out_of_range("dual_hahn_weight: x outside 0..N");
    const auto &g = p.gamma, &d = p.delta;
    Rational num = (2 * x + g + d + 1) * pochhammer(g + 1, x) * pochhammer(Rational(-p.N), x) * factorial(p.N);
    Rational den = pochhammer(x + g + d + 1, p.N + 1) * pochhammer(d + 1, x) * factorial(x);
    if (x % 2) den = -den;
    return num / den;
}

inline Rational dual_hahn_norm(long n, const DualHahnParams& p) {
    detail::check_degree(n, p.N);
    Rational inv = binomial(p.gamma + n, n) * binomial(p.delta + p.N - n, p.N - n);
    return 1 / inv;
}

// Normalization from the recurrence alone (h_0 = 1): h_n = prod C(k)/A(k-1),
// w(x) = 1 / sum_n y_n(x)^2 / h_n. Used for Racah, whose closed forms are not implemented.
struct RecurrenceNormalization {
    std::vector<Rational> weight;  // x = 0..N
    std::vector<Rational> norm;    // n = 0..N
};

inline RecurrenceNormalization recurrence_normalization(const FamilyParams& params) {
    long N = degree_cap(params);
    auto rec = recurrence_data(params);
    RecurrenceNormalization out;
    out.norm.emplace_back(1);
    for (long n = 1; n <= N; ++n) out.norm.push_back(out.norm.back() * rec.C(n) / rec.A(n - 1));
    for (long x = 0; x <= N; ++x) {
        auto y = evaluate_all_degrees(params, x);
        Rational s = 0;
        for (long n = 0; n <= N; ++n) s += y[n] * y[n] / out.norm[n];
        out.weight.push_back(1 / s);
    }
    return out;
}

}  // namespace doubling
