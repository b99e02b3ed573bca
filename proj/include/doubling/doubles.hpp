#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "doubling/families.hpp"

namespace doubling {

enum class DoubleCase {
    DualHahnI, DualHahnII, DualHahnIII,
    HahnI, HahnII, HahnIII, HahnIV,
    RacahI, RacahII, RacahIII, RacahIV,
};

inline constexpr std::array<DoubleCase, 11> all_double_cases = {
    DoubleCase::DualHahnI, DoubleCase::DualHahnII, DoubleCase::DualHahnIII,
    DoubleCase::HahnI, DoubleCase::HahnII, DoubleCase::HahnIII, DoubleCase::HahnIV,
    DoubleCase::RacahI, DoubleCase::RacahII, DoubleCase::RacahIII, DoubleCase::RacahIV,
};

inline constexpr std::array<std::string_view, 11> double_case_names = {
    "DualHahnI", "DualHahnII", "DualHahnIII", "HahnI", "HahnII", "HahnIII", "HahnIV",
    "RacahI", "RacahII", "RacahIII", "RacahIV",
};

inline std::string to_string(DoubleCase c) { return std::string(double_case_names[static_cast<int>(c)]); }

inline DoubleCase parse_double_case(std::string_view s) {
    for (std::size_t i = 0; i < double_case_names.size(); ++i)
        if (double_case_names[i] == s) return all_double_cases[i];
    throw std::invalid_argument("unknown doubling case '" + std::string(s) + "'");
}

inline Family family_of(DoubleCase c) {
    switch (c) {
        case DoubleCase::DualHahnI:
        case DoubleCase::DualHahnII:
        case DoubleCase::DualHahnIII: return Family::DualHahn;
        case DoubleCase::HahnI:
        case DoubleCase::HahnII:
        case DoubleCase::HahnIII:
        case DoubleCase::HahnIV: return Family::Hahn;
        default: return Family::Racah;
    }
}

enum class SextetSlot { A, B, AHat, BHat, D, DHat };

inline constexpr std::array<SextetSlot, 6> all_sextet_slots = {
    SextetSlot::A, SextetSlot::B, SextetSlot::AHat, SextetSlot::BHat, SextetSlot::D, SextetSlot::DHat,
};

inline std::string to_string(SextetSlot s) {
    constexpr std::array<std::string_view, 6> names = {"a", "b", "aHat", "bHat", "d", "dHat"};
    return std::string(names[static_cast<int>(s)]);
}

inline SextetSlot parse_sextet_slot(std::string_view s) {
    for (auto slot : all_sextet_slots)
        if (to_string(slot) == s) return slot;
    throw std::invalid_argument("unknown sextet coefficient '" + std::string(s) + "'");
}

using SeqFn = std::function<Rational(long)>;
using PointFn = std::function<Rational(const Rational&)>;

// a(n) y_n + b(n) y_{n+1} = dHat(x) yHat_n
// aHat(n) yHat_n + bHat(n) yHat_{n+1} = d(x) y_{n+1}
// with yHat evaluated at x + xi.
struct CoefficientSextet {
    DoubleCase kind;
    SeqFn a, b, a_hat, b_hat;
    PointFn d, d_hat;
    FamilyParams params;
    FamilyParams hatted;
    Rational xi;

    long N() const { return degree_cap(params); }
    long N_hat() const { return degree_cap(hatted); }

    Rational y(long n, const Rational& x) const { return evaluate(params, n, x); }
    Rational y_hat(long n, const Rational& x) const { return evaluate(hatted, n, x + xi); }

    SeqFn& seq(SextetSlot s) {
        switch (s) {
            case SextetSlot::A: return a;
            case SextetSlot::B: return b;
            case SextetSlot::AHat: return a_hat;
            default: return b_hat;
        }
    }
};

namespace detail {

inline CoefficientSextet dual_hahn_sextet(DoubleCase c, const DualHahnParams& p) {
    Rational g = p.gamma, d = p.delta;
    long N = p.N;
    CoefficientSextet s{c, {}, {}, {}, {}, {}, {}, p, p, 0};
    switch (c) {
        case DoubleCase::DualHahnI:
            s.hatted = DualHahnParams{g + 1, d + 1, N - 1};
            s.xi = -1;
            s.a = [](long) { return Rational(1); };
            s.b = [](long) { return Rational(-1); };
            s.d_hat = [=](const Rational& x) { return x * (x + g + d + 1) / (N * (g + 1)); };
            s.a_hat = [=](long n) { return -(n + 1) * (N - n + d); };
            s.b_hat = [=](long n) { return (N - n - 1) * (n + g + 2); };
            s.d = [=](const Rational&) { return N * (g + 1); };
            break;
        case DoubleCase::DualHahnII:
            s.hatted = DualHahnParams{g, d, N - 1};
            s.a = [=](long n) { return n - d - N; };
            s.b = [=](long n) { return -(n + g + 1); };
            s.d_hat = [=](const Rational& x) { return -(N - x) * (x + g + d + N + 1) / N; };
            s.a_hat = [](long n) { return Rational(n + 1); };
            s.b_hat = [=](long n) { return Rational(N - n - 1); };
            s.d = [=](const Rational&) { return Rational(N); };
            break;
        default:  // DualHahnIII
            s.hatted = DualHahnParams{g + 1, d - 1, N};
            s.a = [=](long n) { return -(n - d - N); };
            s.b = [=](long n) { return Rational(n - N); };
            s.d_hat = [=](const Rational& x) { return (x + g + 1) * (x + d) / (g + 1); };
            s.a_hat = [](long n) { return Rational(-(n + 1)); };
            s.b_hat = [=](long n) { return n + g + 2; };
            s.d = [=](const Rational&) { return g + 1; };
            break;
    }
    return s;
}

inline CoefficientSextet hahn_sextet(DoubleCase c, const HahnParams& p) {
    Rational a = p.alpha, b = p.beta;
    long N = p.N;
    auto D2 = [=](long n) { return 2 * n + a + b + 2; };
    auto D3 = [=](long n) { return 2 * n + a + b + 3; };
    CoefficientSextet s{c, {}, {}, {}, {}, {}, {}, p, p, 0};
    switch (c) {
        case DoubleCase::HahnI:
            // Second relation carries an overall -1 relative to the printed form,
            // so that b(n) bHat(n-1) = A(n) holds without a scale factor.
            s.hatted = HahnParams{a + 1, b, N};
            s.a = [=](long n) { return (n + a + b + N + 2) / D2(n); };
            s.b = [=](long n) { return Rational(n - N) / D2(n); };
            s.d_hat = [=](const Rational& x) { return (a + x + 1) / (a + 1); };
            s.a_hat = [=](long n) { return (n + 1) * (n + b + 1) / D3(n); };
            s.b_hat = [=](long n) { return -(n + a + b + 2) * (n + a + 2) / D3(n); };
            s.d = [=](const Rational&) { return -(a + 1); };
            break;
        case DoubleCase::HahnII:
            s.hatted = HahnParams{a + 1, b, N - 1};
            s.xi = -1;
            s.a = [=](long n) { return 1 / D2(n); };
            s.b = [=](long n) { return -1 / D2(n); };
            s.d_hat = [=](const Rational& x) { return x / (N * (a + 1)); };
            s.a_hat = [=](long n) { return (n + 1) * (n + b + 1) * (n + a + b + N + 2) / D3(n); };
            s.b_hat = [=](long n) { return -(n + a + b + 2) * Rational(N - n - 1) * (n + a + 2) / D3(n); };
            s.d = [=](const Rational&) { return -N * (a + 1); };
            break;
        case DoubleCase::HahnIII:
            s.hatted = HahnParams{a, b + 1, N};
            s.a = [=](long n) { return (n + b + 1) * (n + N + 2 + a + b) / D2(n); };
            s.b = [=](long n) { return Rational(N - n) * (n + a + 1) / D2(n); };
            s.d_hat = [=](const Rational& x) { return b + 1 + N - x; };
            s.a_hat = [=](long n) { return (n + 1) / D3(n); };
            s.b_hat = [=](long n) { return (n + a + b + 2) / D3(n); };
            s.d = [](const Rational&) { return Rational(1); };
            break;
        default:  // HahnIV
            s.hatted = HahnParams{a, b + 1, N - 1};
            s.a = [=](long n) { return (n + b + 1) / D2(n); };
            s.b = [=](long n) { return (n + a + 1) / D2(n); };
            s.d_hat = [=](const Rational& x) { return (N - x) / N; };
            s.a_hat = [=](long n) { return (n + 1) * (n + a + b + N + 2) / D3(n); };
            s.b_hat = [=](long n) { return Rational(N - n - 1) * (n + a + b + 2) / D3(n); };
            s.d = [=](const Rational&) { return Rational(N); };
            break;
    }
    return s;
}

inline CoefficientSextet racah_sextet(DoubleCase c, const RacahParams& p) {
    Rational a = p.alpha(), b = p.beta(), g = p.gamma(), d = p.delta();
    auto sel = p.selector();
    auto D2 = [=](long n) { return 2 * n + a + b + 2; };
    auto D3 = [=](long n) { return 2 * n + a + b + 3; };
    CoefficientSextet s{c, {}, {}, {}, {}, {}, {}, p, p, 0};
    switch (c) {
        case DoubleCase::RacahI:
            s.hatted = RacahParams(a, b + 1, g + 1, d - 1, sel);
            s.b = [=](long n) { return (n + b + d + 1) * (n + a + 1) / D2(n); };
            s.a = [=](long n) { return -(n - d + a + 1) * (n + b + 1) / D2(n); };
            s.d_hat = [=](const Rational& x) { return (x + d) * (x + g + 1) / (g + 1); };
            s.b_hat = [=](long n) { return (n + a + b + 2) * (n + g + 2) / D3(n); };
            s.a_hat = [=](long n) { return -(n + 1) * (n - g + a + b + 1) / D3(n); };
            s.d = [=](const Rational&) { return g + 1; };
            break;
        case DoubleCase::RacahII:
            s.hatted = RacahParams(a, b + 1, g, d, sel);
            s.b = [=](long n) { return (n + g + 1) * (n + a + 1) / D2(n); };
            s.a = [=](long n) { return -(n - g + a + b + 1) * (n + b + 1) / D2(n); };
            s.d_hat = [=](const Rational& x) { return (x + b + d + 1) * (x + g - b) / (b + d + 1); };
            s.b_hat = [=](long n) { return (n + b + d + 2) * (n + a + b + 2) / D3(n); };
            s.a_hat = [=](long n) { return -(n + 1) * (n - d + a + 1) / D3(n); };
            s.d = [=](const Rational&) { return b + d + 1; };
            break;
        case DoubleCase::RacahIII:
            s.hatted = RacahParams(a + 1, b, g + 1, d + 1, sel);
            s.xi = -1;
            s.b = [=](long n) { return 1 / D2(n); };
            s.a = [=](long n) { return -1 / D2(n); };
            s.d_hat = [=](const Rational& x) { return x * (x + g + d + 1) / ((g + 1) * (b + d + 1) * (a + 1)); };
            s.b_hat = [=](long n) { return (n + g + 2) * (n + b + d + 2) * (n + a + 2) * (n + a + b + 2) / D3(n); };
            s.a_hat = [=](long n) { return -(n + 1) * (n - g + a + b + 1) * (n - d + a + 1) * (n + b + 1) / D3(n); };
            s.d = [=](const Rational&) { return (g + 1) * (b + d + 1) * (a + 1); };
            break;
        default:  // RacahIV
            s.hatted = RacahParams(a + 1, b, g, d, sel);
            s.b = [=](long n) { return (n + g + 1) * (n + b + d + 1) / D2(n); };
            s.a = [=](long n) { return -(n - g + a + b + 1) * (n - d + a + 1) / D2(n); };
            s.d_hat = [=](const Rational& x) { return (x + g + d - a) * (x + a + 1) / (a + 1); };
            s.b_hat = [=](long n) { return (n + a + 2) * (n + a + b + 2) / D3(n); };
            s.a_hat = [=](long n) { return -(n + 1) * (n + b + 1) / D3(n); };
            s.d = [=](const Rational&) { return a + 1; };
            break;
    }
    return s;
}

}  // namespace detail

inline CoefficientSextet coefficients(DoubleCase c, const FamilyParams& params) {
    Family want = family_of(c);
    if (family_of(params) != want)
        throw FamilyMismatch("case " + to_string(c) + " does not take " + describe(params));
    switch (want) {
        case Family::DualHahn: return detail::dual_hahn_sextet(c, std::get<DualHahnParams>(params));
        case Family::Hahn: return detail::hahn_sextet(c, std::get<HahnParams>(params));
        default: return detail::racah_sextet(c, std::get<RacahParams>(params));
    }
}

// Multiplies one coefficient by -1; used to check that the suites are sharp.
inline CoefficientSextet flip_sign(CoefficientSextet s, SextetSlot slot) {
    if (slot == SextetSlot::D || slot == SextetSlot::DHat) {
        PointFn& f = slot == SextetSlot::D ? s.d : s.d_hat;
        f = [g = f](const Rational& x) { return -g(x); };
    } else {
        SeqFn& f = s.seq(slot);
        f = [g = f](long n) { return -g(n); };
    }
    return s;
}

struct PairResidue {
    Rational forward;
    // Empty when the backward relation does not apply: at n = N_hat < N it
    // only holds on the hatted support.
    std::optional<Rational> backward;

    bool is_zero() const { return forward.is_zero() && (!backward || backward->is_zero()); }
};

inline PairResidue verify_pair(const CoefficientSextet& s, long n, const Rational& x) {
    long N = s.N(), Nh = s.N_hat();
    if (n < 0 || n + 1 > N || n > Nh)
        throw DegreeOutOfRange("verify_pair: n=" + std::to_string(n) + " outside 0..min(N-1, N_hat)");
    Rational yn = s.y(n, x), yn1 = s.y(n + 1, x), yh = s.y_hat(n, x);
    PairResidue r;
    r.forward = s.a(n) * yn + s.b(n) * yn1 - s.d_hat(x) * yh;
    Rational bh = s.b_hat(n);
    if (n + 1 <= Nh) {
        r.backward = s.a_hat(n) * yh + bh * s.y_hat(n + 1, x) - s.d(x) * yn1;
    } else {
        Rational xh = x + s.xi;
        bool on_support = xh.is_integer() && xh >= 0 && xh <= Nh;
        if (!bh.is_zero())
            r.backward = bh;  // the top-degree coefficient must vanish
        else if (on_support)
            r.backward = s.a_hat(n) * yh - s.d(x) * yn1;
    }
    return r;
}

inline PairResidue verify_pair(DoubleCase c, const FamilyParams& params, long n, const Rational& x) {
    return verify_pair(coefficients(c, params), n, x);
}

inline constexpr std::array<std::string_view, 7> requirement_names = {
    "Dh", "D", "Bh", "B", "BDh2", "BD2", "LL",
};

struct RequirementResidues {
    std::array<Rational, 7> values;

    bool is_zero() const {
        for (const auto& v : values)
            if (!v.is_zero()) return false;
        return true;
    }
};

// Residues of the necessary conditions obtained by substituting one relation
// into the other and comparing with both three-term recurrences.
inline RequirementResidues verify_requirements(const CoefficientSextet& s, long n, const Rational& x) {
    auto rec = recurrence_data(s.params);
    auto hrec = recurrence_data(s.hatted);
    Rational lam = rec.Lambda(x);
    Rational lam_h = hrec.Lambda(x + s.xi);
    Rational an = s.a(n), an1 = s.a(n - 1), bn = s.b(n), bn1 = s.b(n - 1);
    Rational ahn = s.a_hat(n), ahn1 = s.a_hat(n - 1), bhn = s.b_hat(n), bhn1 = s.b_hat(n - 1);
    Rational dd = s.d(x) * s.d_hat(x);
    RequirementResidues r;
    r.values[0] = an * ahn1 - hrec.C(n);
    r.values[1] = an1 * ahn1 - rec.C(n);
    r.values[2] = bn * bhn - hrec.A(n);
    r.values[3] = bn * bhn1 - rec.A(n);
    r.values[4] = an * bhn1 + ahn * bn + hrec.A(n) + hrec.C(n) - (dd - lam_h);
    r.values[5] = an * bhn1 + ahn1 * bn1 + rec.A(n) + rec.C(n) - (dd - lam);
    r.values[6] = lam - lam_h - (ahn1 * (an - an1 - bn1) + bn * (ahn + bhn - bhn1));
    return r;
}

inline RequirementResidues verify_requirements(DoubleCase c, const FamilyParams& params, long n, const Rational& x) {
    return verify_requirements(coefficients(c, params), n, x);
}

// Residue of the three-term recurrence obtained by eliminating yHat:
// aHat(n-1)[a(n-1)y_{n-1} + b(n-1)y_n] + bHat(n-1)[a(n)y_n + b(n)y_{n+1}] - d dHat y_n.
inline Rational verify_eliminated_recurrence(const CoefficientSextet& s, long n, const Rational& x) {
    Rational ym = s.y(n - 1, x), y0 = s.y(n, x), yp = s.y(n + 1, x);
    return s.a_hat(n - 1) * (s.a(n - 1) * ym + s.b(n - 1) * y0) +
           s.b_hat(n - 1) * (s.a(n) * y0 + s.b(n) * yp) - s.d(x) * s.d_hat(x) * y0;
}

// Point where the Christoffel kernel partner lands back in the family.
inline Rational christoffel_nu(DoubleCase c, const FamilyParams& params) {
    if (family_of(params) != family_of(c))
        throw FamilyMismatch("case " + to_string(c) + " does not take " + describe(params));
    switch (c) {
        case DoubleCase::DualHahnI: return 0;
        case DoubleCase::DualHahnII: return std::get<DualHahnParams>(params).N;
        case DoubleCase::DualHahnIII: return -std::get<DualHahnParams>(params).delta;
        case DoubleCase::HahnI: return -std::get<HahnParams>(params).alpha - 1;
        case DoubleCase::HahnII: return 0;
        case DoubleCase::HahnIII: {
            const auto& p = std::get<HahnParams>(params);
            return p.N + p.beta + 1;
        }
        case DoubleCase::HahnIV: return std::get<HahnParams>(params).N;
        case DoubleCase::RacahI: return -std::get<RacahParams>(params).delta();
        case DoubleCase::RacahII: {
            const auto& p = std::get<RacahParams>(params);
            return p.beta() - p.gamma();
        }
        case DoubleCase::RacahIII: return 0;
        case DoubleCase::RacahIV: return -std::get<RacahParams>(params).alpha() - 1;
    }
    return 0;
}

}  // namespace doubling
