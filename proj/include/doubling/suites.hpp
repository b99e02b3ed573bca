#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "doubling/eigvec.hpp"
#include "doubling/oscalg.hpp"
#include "doubling/orthosys.hpp"
#include "doubling/sampling.hpp"

namespace doubling {

struct Mutation {
    DoubleCase which;
    SextetSlot slot;
};

struct SuiteOptions {
    long min_N = 1;
    long max_N = 6;
    std::uint64_t seed = 42;
    int draws = 20;
    std::optional<Mutation> mutation;
    std::vector<DoubleCase> cases{all_double_cases.begin(), all_double_cases.end()};
    long kac_max_N = 20;   // spectra: Sylvester-Kac sizes
    long u_max_N = 0;      // orthogonality: float U checks up to this N (0 = max_N)
    std::size_t max_failures = 10;
};

struct SuiteReport {
    std::string name;
    long checks = 0;
    long failures = 0;
    std::vector<std::string> messages;

    bool passed() const { return failures == 0 && checks > 0; }

    void check(bool ok, const std::function<std::string()>& describe, std::size_t keep) {
        ++checks;
        if (ok) return;
        ++failures;
        if (messages.size() < keep) messages.push_back(describe());
    }

    void merge(SuiteReport other) {
        checks += other.checks;
        failures += other.failures;
        for (auto& m : other.messages) messages.push_back(std::move(m));
    }
};

namespace detail {

inline CoefficientSextet suite_sextet(DoubleCase c, const FamilyParams& p, const SuiteOptions& o) {
    auto s = coefficients(c, p);
    if (o.mutation && o.mutation->which == c) s = flip_sign(std::move(s), o.mutation->slot);
    return s;
}

// Runs body(case, params, draw) over the sampled instances.
inline void for_each_instance(const SuiteOptions& o,
                              const std::function<void(DoubleCase, const FamilyParams&)>& body) {
    Rng rng(o.seed);
    for (auto c : o.cases)
        for (long N = std::max(o.min_N, 1L); N <= o.max_N; ++N)
            for (int d = 0; d < o.draws; ++d) body(c, draw_valid_params(rng, c, N, d));
}

inline std::string where(DoubleCase c, const FamilyParams& p, long n, const Rational& x) {
    return "case=" + to_string(c) + " params=" + describe(p) + " n=" + std::to_string(n) + " x=" + x.str();
}

}  // namespace detail

inline SuiteReport run_pairs(const SuiteOptions& o) {
    SuiteReport r{"pairs"};
    detail::for_each_instance(o, [&](DoubleCase c, const FamilyParams& p) {
        auto s = detail::suite_sextet(c, p, o);
        for (long n = 0; n < s.N(); ++n) {
            for (long xi = 0; xi <= s.N(); ++xi) {
                Rational x = xi;
                auto res = verify_pair(s, n, x);
                r.check(res.forward.is_zero(), [&] {
                    return detail::where(c, p, n, x) + " relation=forward residue=" + res.forward.str();
                }, o.max_failures);
                if (res.backward)
                    r.check(res.backward->is_zero(), [&] {
                        return detail::where(c, p, n, x) + " relation=backward residue=" + res.backward->str();
                    }, o.max_failures);
            }
        }
    });
    return r;
}

inline SuiteReport run_requirements(const SuiteOptions& o) {
    SuiteReport r{"requirements"};
    detail::for_each_instance(o, [&](DoubleCase c, const FamilyParams& p) {
        auto s = detail::suite_sextet(c, p, o);
        for (long n = 1; n <= s.N(); ++n) {
            for (long xi = 0; xi <= s.N(); ++xi) {
                Rational x = xi;
                auto res = verify_requirements(s, n, x);
                for (std::size_t k = 0; k < res.values.size(); ++k)
                    r.check(res.values[k].is_zero(), [&] {
                        return detail::where(c, p, n, x) + " requirement=" + std::string(requirement_names[k]) +
                               " residue=" + res.values[k].str();
                    }, o.max_failures);
            }
        }
    });
    return r;
}

inline SuiteReport run_christoffel(const SuiteOptions& o) {
    SuiteReport r{"christoffel"};
    detail::for_each_instance(o, [&](DoubleCase c, const FamilyParams& p) {
        auto s = coefficients(c, p);
        for (const auto& g : verify_same_family(s))
            r.check(g.residue.is_zero(), [&] {
                return detail::where(c, p, g.n, g.x) + " same-family residue=" + g.residue.str();
            }, o.max_failures);
        auto data = christoffel_data(p, christoffel_nu(c, p));
        long N = s.N();
        for (long n = 1; n < N; ++n) {
            auto b = verify_baC(p, data, n);
            r.check(b.is_zero(), [&] {
                return detail::where(c, p, n, data.nu) + " baC residues=" + b.product.str() + "," + b.sum.str();
            }, o.max_failures);
        }
        auto rec = recurrence_data(p);
        KernelFn kernel = [&](long n, const Rational& x) { return christoffel_kernel(p, data, n, x); };
        // K_N would need y_{N+1}(nu), which is outside the family.
        for (long n = 0; n < N; ++n) {
            for (long xi = 0; xi <= N; ++xi) {
                Rational x = xi;
                if (rec.Lambda(x) == rec.Lambda(data.nu)) continue;
                Rational diff = geronimus_reconstruct(p, data, kernel, n, x) - evaluate(p, n, x);
                r.check(diff.is_zero(), [&] {
                    return detail::where(c, p, n, x) + " geronimus residue=" + diff.str();
                }, o.max_failures);
            }
        }
    });
    return r;
}

// Exact Hahn and dual Hahn orthogonality sums.
inline SuiteReport run_family_orthogonality(const SuiteOptions& o) {
    SuiteReport r{"family-orthogonality"};
    Rng rng(o.seed);
    auto keep = o.max_failures;
    for (long N = std::max(o.min_N, 1L); N <= o.max_N; ++N) {
        for (int d = 0; d < std::max(1, o.draws / 4); ++d) {
            HahnParams h{random_rational(rng, -1, 4, 7), random_rational(rng, -1, 4, 7), N};
            DualHahnParams dh{random_rational(rng, -1, 4, 7), random_rational(rng, -1, 4, 7), N};
            for (long n = 0; n <= N; ++n) {
                for (long m = n; m <= N; ++m) {
                    Rational sh = 0, sd = 0;
                    for (long x = 0; x <= N; ++x) {
                        sh += hahn_weight(x, h) * hahn_eval(n, x, h) * hahn_eval(m, x, h);
                        sd += dual_hahn_weight(x, dh) * dual_hahn_eval(n, x, dh) * dual_hahn_eval(m, x, dh);
                    }
                    if (n == m) {
                        sh -= hahn_norm(n, h);
                        sd -= dual_hahn_norm(n, dh);
                    }
                    auto nm = " n=" + std::to_string(n) + " m=" + std::to_string(m);
                    r.check(sh.is_zero(), [&] { return describe(h) + nm + " residue=" + sh.str(); }, keep);
                    r.check(sd.is_zero(), [&] { return describe(dh) + nm + " residue=" + sd.str(); }, keep);
                }
            }
        }
    }
    return r;
}

// Doubled systems: orthogonality, support equal to the matrix spectrum, degrees.
inline SuiteReport run_doubled_systems(const SuiteOptions& o) {
    SuiteReport r{"doubled-systems"};
    Rng rng(o.seed + 1);
    auto keep = o.max_failures;
    for (long N = std::max(o.min_N, 1L); N <= o.max_N; ++N) {
        for (int d = 0; d < std::max(1, o.draws / 4); ++d) {
            HahnParams h{random_rational(rng, -1, 4, 7), random_rational(rng, -1, 4, 7), N};
            DualHahnParams dh{random_rational(rng, -1, 4, 7), random_rational(rng, -1, 4, 7), N};
            for (auto c : {DoubleCase::DualHahnI, DoubleCase::HahnI, DoubleCase::HahnII}) {
                FamilyParams p = c == DoubleCase::DualHahnI ? FamilyParams(dh) : FamilyParams(h);
                DoubledSystem sys(c, p);
                auto tag = "system=" + to_string(c) + " " + describe(p);
                for (const auto& res : verify_discrete_orthogonality(sys))
                    r.check(res.is_zero(), [&] {
                        return tag + " n=" + std::to_string(res.n) + " m=" + std::to_string(res.m) + " nonzero";
                    }, keep);
                auto spec = double_matrix(c, p).spectrum;
                r.check(Spectrum(sys.support()) == spec, [&] { return tag + " support differs from spectrum"; }, keep);
                for (long n = 0; n < static_cast<long>(sys.dim()); ++n)
                    r.check(degree_in_q(sys, n) == n, [&] { return tag + " P_" + std::to_string(n) + " has wrong degree"; },
                            keep);
            }
        }
    }
    return r;
}

inline constexpr std::array<DoubleCase, 9> eigvec_cases = {
    DoubleCase::DualHahnI, DoubleCase::DualHahnII, DoubleCase::DualHahnIII, DoubleCase::HahnI,    DoubleCase::HahnII,
    DoubleCase::HahnIII,   DoubleCase::HahnIV,     DoubleCase::RacahI,      DoubleCase::RacahIII};

// Eigenvector matrices in floating point up to u_max_N, exactly for N <= 4.
inline SuiteReport run_eigvec_checks(const SuiteOptions& o, double tol = 1e-12) {
    SuiteReport r{"eigenvectors"};
    Rng rng(o.seed + 2);
    auto keep = o.max_failures;
    long u_max = o.u_max_N > 0 ? o.u_max_N : o.max_N;
    for (auto c : eigvec_cases) {
        for (long N = std::max(o.min_N, 1L); N <= u_max; ++N) {
            FamilyParams p;
            CertifiedSymTridiag m;
            for (;;) {
                p = draw_matrix_params(rng, c, N);
                try {
                    m = double_matrix(c, p);
                    break;
                } catch (const Error&) {
                }
            }
            auto u = eigvec_matrix(c, p);
            double scale = 0;
            for (const auto& e : m.matrix.off) scale = std::max(scale, std::abs(e.to_double()));
            double orth = orthogonality_error(u), res = eigen_residual(u, m.matrix);
            auto tag = "U " + to_string(c) + " " + describe(p);
            r.check(orth <= tol, [&] { return tag + " orthogonality error " + std::to_string(orth); }, keep);
            r.check(res <= tol * scale, [&] { return tag + " MU-UD " + std::to_string(res); }, keep);
            if (N <= 4) r.check(eigen_relation_exact(u, m.matrix), [&] { return tag + " exact MU != UD"; }, keep);
        }
    }
    return r;
}

inline SuiteReport run_orthogonality(const SuiteOptions& o) {
    SuiteReport r{"orthogonality"};
    r.merge(run_family_orthogonality(o));
    r.merge(run_doubled_systems(o));
    r.merge(run_eigvec_checks(o));
    return r;
}

inline SuiteReport run_spectra(const SuiteOptions& o) {
    SuiteReport r{"spectra"};
    Rng rng(o.seed);
    auto keep = o.max_failures;
    for (long N = 1; N <= o.kac_max_N; ++N) {
        auto k = sylvester_kac(N);
        r.check(verify_spectrum_exact(k.matrix, k.spectrum), [&] { return "kac N=" + std::to_string(N); }, keep);
    }
    const Rational half(-1, 2);
    for (long N = std::max(o.min_N, 1L); N <= o.max_N; ++N) {
        std::string tag = " N=" + std::to_string(N);
        for (int d = 0; d < std::max(1, o.draws / 4); ++d) {
            Rational g = random_rational(rng, -1, 4, 7), dl = random_rational(rng, -1, 4, 7);
            auto odd = extended_kac_odd(N, g, dl);
            auto even = extended_kac_even(N, g, dl);
            r.check(verify_spectrum_exact(odd.matrix, odd.spectrum), [&] { return "kac-odd" + tag + " gamma=" + g.str() + " delta=" + dl.str(); }, keep);
            r.check(verify_spectrum_exact(even.matrix, even.spectrum), [&] { return "kac-even" + tag + " gamma=" + g.str() + " delta=" + dl.str(); }, keep);
            // The odd extension on the line delta = -gamma-1 has spectrum -2N..2N step 2.
            auto line = extended_kac_odd(N, g, -g - 1);
            r.check(line.spectrum == sylvester_kac(2 * N).spectrum &&
                        verify_spectrum_exact(line.matrix, line.spectrum),
                    [&] { return "kac-odd on delta=-gamma-1" + tag; }, keep);
            for (auto c : all_double_cases) {
                FamilyParams p;
                for (;;) {
                    p = draw_matrix_params(rng, c, N);
                    if (!has_double_matrix(c, p)) break;
                    try {
                        double_matrix_squares(c, p);
                        break;
                    } catch (const Error&) {
                    }
                }
                if (!has_double_matrix(c, p)) continue;
                auto m = double_matrix(c, p);
                r.check(verify_spectrum_exact(m.matrix, m.spectrum) && m.spectrum.is_symmetric(),
                        [&] { return "double " + to_string(c) + " " + describe(p); }, keep);
                if (family_of(c) == Family::DualHahn) {
                    auto ns = nonsymmetric_form(c, std::get<DualHahnParams>(p));
                    r.check(verify_spectrum_exact(ns.matrix, ns.spectrum),
                            [&] { return "nonsym " + to_string(c) + " " + describe(p); }, keep);
                }
            }
        }
        // Reduction to the classic matrices at gamma = delta = -1/2.
        auto odd = extended_kac_odd(N, half, half);
        auto even = extended_kac_even(N, half, half);
        r.check(odd.matrix == sylvester_kac(2 * N).matrix && verify_spectrum_exact(odd.matrix, odd.spectrum),
                [&] { return "kac-odd reduction" + tag; }, keep);
        r.check(even.matrix == sylvester_kac(2 * N - 1).matrix && verify_spectrum_exact(even.matrix, even.spectrum),
                [&] { return "kac-even reduction" + tag; }, keep);
    }
    return r;
}

inline SuiteReport run_algebra(const SuiteOptions& o) {
    SuiteReport r{"algebra"};
    Rng rng(o.seed);
    auto keep = o.max_failures;
    for (auto c : {DoubleCase::DualHahnI, DoubleCase::DualHahnII, DoubleCase::DualHahnIII}) {
        for (long N = std::max(o.min_N, 1L); N <= o.max_N; ++N) {
            for (int d = 0; d < std::max(1, o.draws / 4); ++d) {
                DualHahnParams p{random_rational(rng, -1, 4, 7), random_rational(rng, -1, 4, 7), N};
                auto gen = build_generators(c, p);
                r.check(verify_algebra(gen, p).is_zero(), [&] { return "algebra " + to_string(c) + " " + describe(p); }, keep);
                r.check(verify_algebra(gen, p, structure_constants(c, p)).is_zero(),
                        [&] { return "normal form " + to_string(c) + " " + describe(p); }, keep);
            }
        }
    }
    DualHahnParams su2{Rational(-1, 2), Rational(-1, 2), std::max(o.max_N, 1L)};
    auto k = structure_constants(DoubleCase::DualHahnI, su2);
    r.check(k.nu.is_zero() && k.sigma.is_zero() && k.rho.is_zero(), [] { return "su(2) constants not (0,0,0)"; }, keep);
    return r;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"pairs", "requirements", "christoffel", "orthogonality", "spectra", "algebra"};
    return names;
}

inline SuiteReport run_suite(const std::string& name, const SuiteOptions& o) {
    if (name == "pairs") return run_pairs(o);
    if (name == "requirements") return run_requirements(o);
    if (name == "christoffel") return run_christoffel(o);
    if (name == "orthogonality") return run_orthogonality(o);
    if (name == "spectra") return run_spectra(o);
    if (name == "algebra") return run_algebra(o);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace doubling
