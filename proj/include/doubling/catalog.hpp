#pragma once

#include <algorithm>
#include <optional>
#include <string>

#include "doubling/specmat.hpp"

namespace doubling {

// A named matrix family with its parameters; N is supplied per build.
struct MatrixFamily {
    enum class Kind { Kac, KacOdd, KacEven, Double, Nonsym };

    Kind kind = Kind::Kac;
    DoubleCase which = DoubleCase::DualHahnI;
    Rational alpha = 0, beta = 0, gamma = 0, delta = 0;

    static MatrixFamily parse(std::string_view name) {
        MatrixFamily f;
        if (name == "kac") {
            f.kind = Kind::Kac;
        } else if (name == "kac-odd") {
            f.kind = Kind::KacOdd;
        } else if (name == "kac-even") {
            f.kind = Kind::KacEven;
        } else if (name.starts_with("double:")) {
            f.kind = Kind::Double;
            f.which = parse_double_case(name.substr(7));
        } else if (name.starts_with("nonsym:")) {
            f.kind = Kind::Nonsym;
            f.which = parse_double_case(name.substr(7));
            if (family_of(f.which) != Family::DualHahn)
                throw std::invalid_argument("nonsym forms exist for DualHahnI/II/III only");
        } else {
            throw std::invalid_argument("unknown matrix family '" + std::string(name) +
                                        "' (kac, kac-odd, kac-even, double:<case>, nonsym:<case>)");
        }
        return f;
    }

    std::string name() const {
        switch (kind) {
            case Kind::Kac: return "kac";
            case Kind::KacOdd: return "kac-odd";
            case Kind::KacEven: return "kac-even";
            case Kind::Double: return "double:" + to_string(which);
            default: return "nonsym:" + to_string(which);
        }
    }

    // Parameters that enter this family, for reports.
    std::vector<std::pair<std::string, Rational>> parameters() const {
        switch (kind) {
            case Kind::Kac: return {};
            case Kind::KacOdd:
            case Kind::KacEven:
            case Kind::Nonsym: return {{"gamma", gamma}, {"delta", delta}};
            default:
                switch (family_of(which)) {
                    case Family::DualHahn: return {{"gamma", gamma}, {"delta", delta}};
                    case Family::Hahn: return {{"alpha", alpha}, {"beta", beta}};
                    default: return {{"beta", beta}, {"gamma", gamma}, {"delta", delta}};
                }
        }
    }

    // Matrix dimension as a function of N: slope 1 or 2 and an offset.
    std::pair<long, long> dimension_law() const {
        switch (kind) {
            case Kind::Kac: return {1, 1};
            case Kind::KacOdd: return {2, 1};
            case Kind::KacEven: return {2, 0};
            default:
                switch (which) {
                    case DoubleCase::DualHahnIII:
                    case DoubleCase::HahnI:
                    case DoubleCase::HahnIII:
                    case DoubleCase::RacahI: return {2, 2};
                    default: return {2, 1};
                }
        }
    }

    long dimension(long N) const {
        auto [s, o] = dimension_law();
        return s * N + o;
    }

    long n_for_dimension(long dim) const {
        auto [s, o] = dimension_law();
        if (dim <= o || (dim - o) % s != 0)
            throw std::invalid_argument(name() + " has no member of dimension " + std::to_string(dim));
        return (dim - o) / s;
    }

    FamilyParams family_params(long N) const {
        switch (family_of(which)) {
            case Family::DualHahn: return DualHahnParams{gamma, delta, N};
            case Family::Hahn: return HahnParams{alpha, beta, N};
            default: return RacahParams::with_alpha_minus_n(N, beta, gamma, delta);
        }
    }

    struct Built {
        std::optional<TwoDiagonal> nonsymmetric;  // rational two-diagonal form when there is one
        std::optional<SymTridiag> symmetric;      // absent when some b_i c_i < 0
        Spectrum spectrum;

        const SymTridiag& require_symmetric() const {
            if (!symmetric) throw NegativeProduct("matrix has b_i c_i < 0 and no real symmetric form");
            return *symmetric;
        }
    };

    Built build(long N) const {
        if (N < 1) throw std::invalid_argument("N must be >= 1");
        auto from_two = [](CertifiedTwoDiagonal c) {
            Built b;
            auto q = c.matrix.products();
            bool real = std::all_of(q.begin(), q.end(), [](const Rational& v) { return v.sign() >= 0; });
            if (real) b.symmetric = symmetrize(c.matrix);
            b.nonsymmetric = std::move(c.matrix);
            b.spectrum = std::move(c.spectrum);
            return b;
        };
        switch (kind) {
            case Kind::Kac: return from_two(sylvester_kac(N));
            case Kind::KacOdd: return from_two(extended_kac_odd(N, gamma, delta));
            case Kind::KacEven: return from_two(extended_kac_even(N, gamma, delta));
            case Kind::Nonsym: return from_two(nonsymmetric_form(which, DualHahnParams{gamma, delta, N}));
            default: {
                auto c = double_matrix(which, family_params(N));
                return Built{std::nullopt, std::move(c.matrix), std::move(c.spectrum)};
            }
        }
    }
};

}  // namespace doubling
