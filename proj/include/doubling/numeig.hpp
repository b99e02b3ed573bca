#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "doubling/catalog.hpp"

namespace doubling {

struct FloatTridiag {
    std::vector<double> diag;
    std::vector<double> off;

    std::size_t dim() const { return diag.size(); }

    static FloatTridiag from(const SymTridiag& m) {
        FloatTridiag f;
        f.diag.assign(m.dim(), 0.0);
        for (const auto& e : m.off) f.off.push_back(e.to_double());
        return f;
    }

    double max_abs_entry() const {
        double v = 0;
        for (double d : diag) v = std::max(v, std::abs(d));
        for (double e : off) v = std::max(v, std::abs(e));
        return v;
    }

    std::string to_matrix_market() const {
        std::ostringstream os;
        std::size_t nnz = 0;
        for (double d : diag) nnz += d != 0.0;
        for (double e : off) nnz += e != 0.0 ? 2 : 0;
        os << "%%MatrixMarket matrix coordinate real general\n" << dim() << ' ' << dim() << ' ' << nnz << '\n';
        char buf[64];
        for (std::size_t i = 0; i < dim(); ++i) {
            if (i > 0 && off[i - 1] != 0.0) {
                std::snprintf(buf, sizeof buf, "%.17g", off[i - 1]);
                os << i + 1 << ' ' << i << ' ' << buf << '\n';
            }
            if (diag[i] != 0.0) {
                std::snprintf(buf, sizeof buf, "%.17g", diag[i]);
                os << i + 1 << ' ' << i + 1 << ' ' << buf << '\n';
            }
            if (i + 1 < dim() && off[i] != 0.0) {
                std::snprintf(buf, sizeof buf, "%.17g", off[i]);
                os << i + 1 << ' ' << i + 2 << ' ' << buf << '\n';
            }
        }
        return os.str();
    }
};

struct EigenResult {
    std::vector<double> values;   // ascending
    std::vector<double> vectors;  // row-major, column j is the vector for values[j]
    long iterations = 0;
};

// Implicit QL with Wilkinson-type shifts and deflation (tql2 layout).
inline EigenResult sym_tridiag_eigen(const FloatTridiag& m, bool want_vectors, int max_sweeps = 30) {
    const std::size_t n = m.dim();
    if (n == 0) throw std::invalid_argument("sym_tridiag_eigen: empty matrix");
    if (m.off.size() + 1 != n) throw std::invalid_argument("sym_tridiag_eigen: off-diagonal length mismatch");
    std::vector<double> d = m.diag, e(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) e[i] = m.off[i];
    std::vector<double> V;
    if (want_vectors) {
        V.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) V[i * n + i] = 1.0;
    }
    const double eps = std::numeric_limits<double>::epsilon();
    double f = 0, tst1 = 0;
    long total = 0;
    for (std::size_t l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        std::size_t mm = l;
        while (mm < n - 1 && std::abs(e[mm]) > eps * tst1) ++mm;
        if (mm > l) {
            int iter = 0;
            do {
                if (++iter > max_sweeps)
                    throw NoConvergence("QL iteration did not converge for eigenvalue " + std::to_string(l) +
                                            " after " + std::to_string(max_sweeps) + " sweeps",
                                        m.to_matrix_market());
                ++total;
                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = std::hypot(p, 1.0);
                if (p < 0) r = -r;
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                double dl1 = d[l + 1];
                double h = g - d[l];
                for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
                f += h;

                p = d[mm];
                double c = 1, c2 = 1, c3 = 1, s = 0, s2 = 0;
                double el1 = e[l + 1];
                for (std::size_t ii = mm; ii-- > l;) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[ii];
                    h = c * p;
                    r = std::hypot(p, e[ii]);
                    e[ii + 1] = s * r;
                    s = e[ii] / r;
                    c = p / r;
                    p = c * d[ii] - s * g;
                    d[ii + 1] = h + s * (c * g + s * d[ii]);
                    if (want_vectors) {
                        for (std::size_t k = 0; k < n; ++k) {
                            double& a = V[k * n + ii];
                            double& b = V[k * n + ii + 1];
                            double t = b;
                            b = s * a + c * t;
                            a = c * a - s * t;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > eps * tst1);
        }
        d[l] += f;
        e[l] = 0;
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
    EigenResult out;
    out.iterations = total;
    for (auto i : order) out.values.push_back(d[i]);
    if (want_vectors) {
        out.vectors.resize(n * n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out.vectors[k * n + j] = V[k * n + order[j]];
    }
    return out;
}

// max |A V - V diag(values)|
inline double eigen_residual(const FloatTridiag& m, const EigenResult& r) {
    const std::size_t n = m.dim();
    double err = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double av = m.diag[i] * r.vectors[i * n + j];
            if (i > 0) av += m.off[i - 1] * r.vectors[(i - 1) * n + j];
            if (i + 1 < n) av += m.off[i] * r.vectors[(i + 1) * n + j];
            err = std::max(err, std::abs(av - r.vectors[i * n + j] * r.values[j]));
        }
    }
    return err;
}

struct SpectrumMatch {
    double max_abs_error = 0;
    bool greedy = false;  // clustered reference, matched by nearest value
};

// Sorted matching; when reference eigenvalues cluster the sort order is not
// trustworthy and each computed value takes the nearest unused reference.
inline SpectrumMatch match_spectrum(const std::vector<double>& computed, const std::vector<double>& reference,
                                    double cluster_tol) {
    if (computed.size() != reference.size()) throw std::invalid_argument("match_spectrum: size mismatch");
    SpectrumMatch out;
    for (std::size_t i = 1; i < reference.size(); ++i)
        if (reference[i] - reference[i - 1] < cluster_tol && reference[i] != reference[i - 1]) out.greedy = true;
    if (!out.greedy) {
        for (std::size_t i = 0; i < computed.size(); ++i)
            out.max_abs_error = std::max(out.max_abs_error, std::abs(computed[i] - reference[i]));
        return out;
    }
    std::vector<bool> used(reference.size(), false);
    for (double c : computed) {
        std::size_t best = reference.size();
        for (std::size_t j = 0; j < reference.size(); ++j)
            if (!used[j] && (best == reference.size() || std::abs(reference[j] - c) < std::abs(reference[best] - c)))
                best = j;
        used[best] = true;
        out.max_abs_error = std::max(out.max_abs_error, std::abs(reference[best] - c));
    }
    return out;
}

struct BenchReport {
    std::string family;
    std::vector<std::pair<std::string, Rational>> params;
    long dim = 0;
    long N = 0;
    double max_abs_entry = 0;
    double max_abs_eig_error = 0;
    std::optional<double> residual_norm;
    long long nanoseconds = 0;
    long iterations = 0;
    std::string warning;

    nlohmann::json to_json() const {
        nlohmann::json p = nlohmann::json::object();
        for (const auto& [k, v] : params) p[k] = v.str();
        nlohmann::json j = {
            {"family", family},
            {"params", p},
            {"dim", dim},
            {"N", N},
            {"maxAbsEntry", max_abs_entry},
            {"maxAbsEigError", max_abs_eig_error},
            {"residualNorm", residual_norm ? nlohmann::json(*residual_norm) : nlohmann::json(nullptr)},
            {"nanoseconds", nanoseconds},
            {"iterations", iterations},
        };
        if (!warning.empty()) j["warning"] = warning;
        return j;
    }
};

// One report per (dimension, repetition); zero repetitions give no reports.
inline std::vector<BenchReport> benchmark(const MatrixFamily& family, const std::vector<long>& dims, int reps,
                                          bool want_vectors) {
    std::vector<BenchReport> out;
    for (long dim : dims) {
        if (reps <= 0) continue;
        long N = family.n_for_dimension(dim);
        auto built = family.build(N);
        auto m = FloatTridiag::from(built.require_symmetric());
        auto reference = built.spectrum.to_doubles();
        double scale = m.max_abs_entry();
        for (int r = 0; r < reps; ++r) {
            auto t0 = std::chrono::steady_clock::now();
            auto res = sym_tridiag_eigen(m, want_vectors);
            auto t1 = std::chrono::steady_clock::now();
            BenchReport rep;
            rep.family = family.name();
            rep.params = family.parameters();
            rep.dim = dim;
            rep.N = N;
            rep.max_abs_entry = scale;
            auto match = match_spectrum(res.values, reference, 1e-8 * std::max(scale, 1.0));
            rep.max_abs_eig_error = match.max_abs_error;
            if (match.greedy) rep.warning = "clustered closed-form eigenvalues; greedy nearest matching";
            if (want_vectors) rep.residual_norm = eigen_residual(m, res);
            rep.nanoseconds = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
            rep.iterations = res.iterations;
            out.push_back(std::move(rep));
        }
    }
    return out;
}

}  // namespace doubling
