#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "doubling/errors.hpp"

namespace doubling {

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I n) {  // NOLINT: implicit by design, integers are rationals
        if constexpr (std::is_signed_v<I>)
            v_ = mpq_class(static_cast<long>(n));
        else
            v_ = mpq_class(static_cast<unsigned long>(n));
    }

    template <std::integral I, std::integral J>
    Rational(I num, J den) {
        if (den == 0) throw DivisionByZero();
        v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
        v_.canonicalize();
    }

    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    static Rational parse(std::string_view text) {
        std::size_t i = 0;
        auto skip_ws = [&] {
            while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
        };
        auto read_int = [&](bool allow_sign) {
            std::size_t start = i;
            if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            std::size_t digits = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            if (i == digits) throw ParseError("expected digits in rational '" + std::string(text) + "'", i);
            std::string s(text.substr(start, i - start));
            if (s[0] == '+') s.erase(0, 1);
            return mpz_class(s, 10);
        };
        skip_ws();
        mpz_class num = read_int(true);
        mpz_class den = 1;
        if (i < text.size() && text[i] == '/') {
            ++i;
            std::size_t den_pos = i;
            den = read_int(false);
            if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", den_pos);
        }
        skip_ws();
        if (i != text.size())
            throw ParseError("unexpected character in rational '" + std::string(text) + "'", i);
        return Rational(mpq_class(num, den));
    }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonpositive_integer() const { return is_integer() && sgn(v_) <= 0; }

    std::optional<long> to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p()) return std::nullopt;
        return v_.get_num().get_si();
    }

    double to_double() const { return v_.get_d(); }

    // "p" for integers, "p/q" otherwise.
    std::string str() const { return v_.get_str(); }
    // Always "p/q".
    std::string fraction_str() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    bool is_perfect_square() const {
        if (sign() < 0) return false;
        return mpz_perfect_square_p(v_.get_num_mpz_t()) && mpz_perfect_square_p(v_.get_den_mpz_t());
    }

    // Exact square root; only valid when is_perfect_square().
    Rational exact_sqrt() const {
        if (!is_perfect_square()) throw Error("exact_sqrt of a non-square rational " + str());
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), v_.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), v_.get_den_mpz_t());
        return Rational(mpq_class(n, d));
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(const Rational& r, unsigned k) {
    Rational out = 1;
    for (unsigned i = 0; i < k; ++i) out *= r;
    return out;
}

inline Rational factorial(long k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(mpq_class(f));
}

// sign * sqrt(radicand), radicand >= 0.
class SqrtRational {
public:
    SqrtRational() = default;

    SqrtRational(int sign, Rational radicand) : radicand_(std::move(radicand)) {
        if (radicand_.sign() < 0) throw NegativeProduct("negative radicand " + radicand_.str());
        sign_ = radicand_.is_zero() ? 0 : (sign > 0 ? 1 : sign < 0 ? -1 : 0);
        if (sign_ == 0) radicand_ = 0;
    }

    // Positive root of r.
    static SqrtRational sqrt(const Rational& r) { return SqrtRational(1, r); }
    static SqrtRational from_rational(const Rational& r) { return SqrtRational(r.sign(), r * r); }

    int sign() const { return sign_; }
    const Rational& radicand() const { return radicand_; }
    bool is_zero() const { return sign_ == 0; }

    // sign * radicand, i.e. the value times |value|.
    Rational signed_square() const { return sign_ < 0 ? -radicand_ : radicand_; }

    bool is_rational() const { return radicand_.is_perfect_square(); }
    Rational to_rational() const {
        Rational r = radicand_.exact_sqrt();
        return sign_ < 0 ? -r : r;
    }

    double to_double() const;

    SqrtRational operator-() const { return SqrtRational(-sign_, radicand_); }

    friend SqrtRational operator*(const SqrtRational& a, const SqrtRational& b) {
        return SqrtRational(a.sign_ * b.sign_, a.radicand_ * b.radicand_);
    }
    friend SqrtRational operator*(const SqrtRational& a, const Rational& r) {
        return SqrtRational(a.sign_ * r.sign(), a.radicand_ * r * r);
    }

    friend bool operator==(const SqrtRational& a, const SqrtRational& b) {
        return a.sign_ == b.sign_ && a.radicand_ == b.radicand_;
    }
    friend std::strong_ordering operator<=>(const SqrtRational& a, const SqrtRational& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        if (a.sign_ >= 0) return a.radicand_ <=> b.radicand_;
        return b.radicand_ <=> a.radicand_;
    }

    std::string str() const {
        if (sign_ == 0) return "0";
        std::string s = sign_ < 0 ? "-" : "";
        if (radicand_.is_perfect_square()) return s + radicand_.exact_sqrt().str();
        return s + "sqrt(" + radicand_.str() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const SqrtRational& s) { return os << s.str(); }

private:
    int sign_ = 0;
    Rational radicand_;
};

}  // namespace doubling

#include <cmath>

namespace doubling {

inline double SqrtRational::to_double() const {
    if (sign_ == 0) return 0.0;
    // Take the root of numerator and denominator separately to keep range.
    mpf_class num(radicand_.numerator(), 128), den(radicand_.denominator(), 128);
    mpf_class q(0, 128);
    q = ::sqrt(num) / ::sqrt(den);
    // get_d truncates; pick the nearer neighbour.
    double lo = q.get_d();
    double hi = std::nextafter(lo, HUGE_VAL);
    mpf_class dlo(q - lo, 128), dhi(hi - q, 128);
    return sign_ * (dhi < dlo ? hi : lo);
}

// Exact test of a + b == c for signed square roots.
inline bool sum_equals(const SqrtRational& a, const SqrtRational& b, const SqrtRational& c) {
    if (a.is_zero()) return b == c;
    if (b.is_zero()) return a == c;
    // Sign of a + b.
    int s;
    if (a.sign() == b.sign()) {
        s = a.sign();
    } else {
        auto cmp = a.radicand() <=> b.radicand();
        s = cmp == 0 ? 0 : (cmp > 0 ? a.sign() : b.sign());
    }
    if (s != c.sign()) return false;
    if (s == 0) return true;
    // (a+b)^2 = ra + rb + 2 sa sb sqrt(ra rb) must equal rc.
    Rational rest = c.radicand() - a.radicand() - b.radicand();
    int cross = a.sign() * b.sign();
    if (rest.sign() != cross) return false;
    return rest * rest == 4 * a.radicand() * b.radicand();
}

}  // namespace doubling
