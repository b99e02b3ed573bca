#pragma once

#include <optional>
#include <span>
#include <vector>

#include "doubling/rational.hpp"

namespace doubling {

// Rising factorial (a)_k = a(a+1)...(a+k-1).
inline Rational pochhammer(const Rational& a, long k) {
    if (k < 0) throw std::invalid_argument("pochhammer: negative length");
    Rational out = 1;
    Rational f = a;
    for (long i = 0; i < k; ++i) {
        out *= f;
        f += 1;
    }
    return out;
}

// binom(upper, lower) = (upper-lower+1)_lower / lower!, for rational upper.
inline Rational binomial(const Rational& upper, long lower) {
    if (lower < 0) return 0;
    return pochhammer(upper - lower + 1, lower) / factorial(lower);
}

// Termination index of a parameter list: the smallest n with -n among the numerators.
inline std::optional<long> termination_index(std::span<const Rational> numerators) {
    std::optional<long> n;
    for (const auto& a : numerators) {
        if (!a.is_nonpositive_integer()) continue;
        auto v = a.to_long();
        if (!v) continue;
        long m = -*v;
        if (!n || m < *n) n = m;
    }
    return n;
}

// Sum_{k=0}^{n} prod (num)_k / prod (den)_k z^k / k!, n the termination index.
inline Rational hypergeometric_terminating(std::span<const Rational> numerators,
                                           std::span<const Rational> denominators,
                                           const Rational& z = 1) {
    auto n = termination_index(numerators);
    if (!n) throw NonTerminating("hypergeometric series has no nonpositive integer numerator");
    for (const auto& d : denominators) {
        if (!d.is_nonpositive_integer()) continue;
        auto m = d.to_long();
        if (m && -*m < *n)
            throw DenominatorPole("denominator parameter " + d.str() +
                                  " vanishes before the series terminates at k=" + std::to_string(*n));
    }
    Rational sum = 0;
    Rational term = 1;
    for (long k = 0;; ++k) {
        sum += term;
        if (k == *n) break;
        Rational num = 1;
        for (const auto& a : numerators) num *= a + k;
        if (num.is_zero()) break;
        Rational den = k + 1;
        for (const auto& b : denominators) den *= b + k;
        term *= num * z / den;
    }
    return sum;
}

inline Rational hypergeometric_terminating(std::initializer_list<Rational> numerators,
                                           std::initializer_list<Rational> denominators,
                                           const Rational& z = 1) {
    std::vector<Rational> a(numerators), b(denominators);
    return hypergeometric_terminating(std::span<const Rational>(a), std::span<const Rational>(b), z);
}

}  // namespace doubling
