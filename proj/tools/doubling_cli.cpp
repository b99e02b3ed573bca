// doubling: generate test matrices, list closed-form spectra, run the exact
// verification suites, benchmark the eigensolver and tabulate polynomials.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "doubling/doubling.hpp"

namespace {

using namespace doubling;

constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParamStrings {
    std::string alpha = "0", beta = "0", gamma = "0", delta = "0";
};

Rational parse_param(const std::string& name, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const ParseError& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

void add_param_options(CLI::App* cmd, ParamStrings& p) {
    cmd->add_option("--alpha", p.alpha, "alpha as p/q")->capture_default_str();
    cmd->add_option("--beta", p.beta, "beta as p/q")->capture_default_str();
    cmd->add_option("--gamma", p.gamma, "gamma as p/q")->capture_default_str();
    cmd->add_option("--delta", p.delta, "delta as p/q")->capture_default_str();
}

MatrixFamily make_family(const std::string& name, const ParamStrings& p) {
    MatrixFamily f;
    try {
        f = MatrixFamily::parse(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    f.alpha = parse_param("alpha", p.alpha);
    f.beta = parse_param("beta", p.beta);
    f.gamma = parse_param("gamma", p.gamma);
    f.delta = parse_param("delta", p.delta);
    return f;
}

std::vector<long> parse_dims(const std::string& text) {
    std::vector<long> dims;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        auto tok = text.substr(start, end - start);
        if (!tok.empty()) {
            std::size_t used = 0;
            long v = 0;
            try {
                v = std::stol(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || v < 1) throw UsageError("--dims: bad dimension '" + tok + "' at position " +
                                                              std::to_string(start));
            dims.push_back(v);
        }
        start = end + 1;
    }
    return dims;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path + " for writing");
    return file;
}

std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int cmd_gen(const std::string& family, long N, const ParamStrings& ps, const std::string& format,
            const std::string& out) {
    auto f = make_family(family, ps);
    auto built = f.build(N);
    std::ofstream file;
    std::ostream& os = open_output(out, file);
    if (format == "mm") {
        if (built.nonsymmetric)
            write_matrix_market(os, *built.nonsymmetric);
        else
            write_matrix_market(os, built.require_symmetric());
    } else if (format == "exact") {
        write_exact(os, built.nonsymmetric ? *built.nonsymmetric : rational_form(built.require_symmetric()));
    } else {
        nlohmann::json params = nlohmann::json::object();
        for (const auto& [k, v] : f.parameters()) params[k] = v.str();
        nlohmann::json j = {{"family", f.name()}, {"N", N}, {"params", params}};
        j["matrix"] = built.nonsymmetric ? to_json(*built.nonsymmetric) : to_json(built.require_symmetric());
        j["spectrum"] = to_json(built.spectrum);
        os << j.dump(2) << '\n';
    }
    return 0;
}

int cmd_spectrum(const std::string& family, long N, const ParamStrings& ps) {
    auto f = make_family(family, ps);
    auto built = f.build(N);
    std::cout << "# " << f.name() << " N=" << N << " dim=" << built.spectrum.size() << '\n';
    std::cout << "# sign radicand value\n";
    for (const auto& e : built.spectrum.entries()) {
        char s = e.sign() > 0 ? '+' : e.sign() < 0 ? '-' : '0';
        std::cout << s << ' ' << e.radicand().str() << ' ' << g17(e.to_double()) << '\n';
    }
    return 0;
}

int cmd_verify(const std::string& suite, long max_N, std::uint64_t seed, int draws, const std::string& mutate) {
    SuiteOptions o;
    o.max_N = max_N;
    o.seed = seed;
    o.draws = draws;
    o.kac_max_N = std::max(20L, max_N);
    if (!mutate.empty()) {
        auto colon = mutate.find(':');
        if (colon == std::string::npos) throw UsageError("--mutate expects Case:slot, e.g. HahnII:bHat");
        try {
            o.mutation = Mutation{parse_double_case(mutate.substr(0, colon)), parse_sextet_slot(mutate.substr(colon + 1))};
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--mutate: ") + e.what());
        }
    }
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names = {suite};
    bool ok = true;
    for (const auto& name : names) {
        auto r = run_suite(name, o);
        std::cout << (r.passed() ? "PASS " : "FAIL ") << name << " checks=" << r.checks << " failures=" << r.failures
                  << '\n';
        for (const auto& m : r.messages) std::cout << "  " << m << '\n';
        if (r.failures > o.max_failures)
            std::cout << "  ... " << r.failures - static_cast<long>(r.messages.size()) << " more\n";
        ok = ok && r.passed();
    }
    return ok ? 0 : 1;
}

int cmd_bench(const std::string& family, const ParamStrings& ps, const std::string& dims, int reps, bool vectors) {
    auto f = make_family(family, ps);
    auto d = parse_dims(dims);
    for (long dim : d) {
        try {
            f.n_for_dimension(dim);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    for (const auto& r : benchmark(f, d, reps, vectors)) std::cout << r.to_json().dump() << '\n';
    return 0;
}

struct PolyArgs {
    std::string family;
    ParamStrings ps;
    std::string p = "1/2";
    std::string minus_n = "alpha";
    long N = 1;
    long n = 0;
    bool weights = false;
};

FamilyParams poly_params(const PolyArgs& a) {
    if (a.family == "hahn") return HahnParams{parse_param("alpha", a.ps.alpha), parse_param("beta", a.ps.beta), a.N};
    if (a.family == "dual-hahn")
        return DualHahnParams{parse_param("gamma", a.ps.gamma), parse_param("delta", a.ps.delta), a.N};
    if (a.family == "krawtchouk") return KrawtchoukParams{parse_param("p", a.p), a.N};
    if (a.family == "racah") {
        auto al = parse_param("alpha", a.ps.alpha), be = parse_param("beta", a.ps.beta);
        auto ga = parse_param("gamma", a.ps.gamma), de = parse_param("delta", a.ps.delta);
        if (a.minus_n == "alpha") return RacahParams::with_alpha_minus_n(a.N, be, ga, de);
        if (a.minus_n == "gamma") return RacahParams::with_gamma_minus_n(a.N, al, be, de);
        if (a.minus_n == "beta-delta") return RacahParams::with_beta_delta_minus_n(a.N, al, be, ga);
        throw UsageError("--minus-n must be alpha, gamma or beta-delta");
    }
    throw UsageError("unknown family '" + a.family + "' (hahn, dual-hahn, racah, krawtchouk)");
}

int cmd_poly(const PolyArgs& a) {
    auto params = poly_params(a);
    if (a.n > a.N) throw UsageError("--n must be at most --N");
    std::vector<Rational> w;
    Rational h;
    if (a.weights) {
        switch (family_of(params)) {
            case Family::Hahn: {
                const auto& p = std::get<HahnParams>(params);
                for (long x = 0; x <= a.N; ++x) w.push_back(hahn_weight(x, p));
                h = hahn_norm(a.n, p);
                break;
            }
            case Family::DualHahn: {
                const auto& p = std::get<DualHahnParams>(params);
                for (long x = 0; x <= a.N; ++x) w.push_back(dual_hahn_weight(x, p));
                h = dual_hahn_norm(a.n, p);
                break;
            }
            default: {
                auto rn = recurrence_normalization(params);
                w = rn.weight;
                h = rn.norm[a.n];
            }
        }
    }
    std::vector<Rational> y;
    for (long x = 0; x <= a.N; ++x) y.push_back(evaluate(params, a.n, x));
    std::cout << "# " << describe(params) << " n=" << a.n << '\n';
    std::cout << (a.weights ? "# x y_n(x) w(x)\n" : "# x y_n(x)\n");
    for (long x = 0; x <= a.N; ++x) {
        std::cout << x << ' ' << y[x].str();
        if (a.weights) std::cout << ' ' << w[x].str();
        std::cout << '\n';
    }
    if (a.weights) std::cout << "# h_n = " << h.str() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Doubled Hahn, dual Hahn and Racah systems: exact checks and test matrices"};
    app.require_subcommand(1);

    const std::string families_help = "kac, kac-odd, kac-even, double:<case>, nonsym:<case>";

    std::string family, format = "mm", out, suite, mutate, dims;
    long N = 1, max_N = 6;
    std::uint64_t seed = 42;
    int draws = 20, reps = 1;
    bool vectors = false;
    ParamStrings ps;
    PolyArgs pa;

    auto* gen = app.add_subcommand("gen", "emit a matrix");
    gen->add_option("family", family, families_help)->required();
    gen->add_option("--N", N, "dimension parameter N >= 1")->check(CLI::Range(1L, 1000000L))->capture_default_str();
    add_param_options(gen, ps);
    gen->add_option("--format", format, "mm, exact or json")
        ->check(CLI::IsMember({"mm", "exact", "json"}))
        ->capture_default_str();
    gen->add_option("-o,--output", out, "output file (default stdout)");

    auto* spec = app.add_subcommand("spectrum", "list the closed-form spectrum");
    spec->add_option("family", family, families_help)->required();
    spec->add_option("--N", N, "dimension parameter N >= 1")->check(CLI::Range(1L, 1000000L))->capture_default_str();
    add_param_options(spec, ps);

    auto* verify = app.add_subcommand("verify", "run exact verification suites");
    verify->add_option("suite", suite, "pairs, requirements, christoffel, orthogonality, spectra, algebra or all")
        ->required()
        ->check(CLI::IsMember({"pairs", "requirements", "christoffel", "orthogonality", "spectra", "algebra", "all"}));
    verify->add_option("--max-N", max_N, "largest N")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--seed", seed, "random seed")->capture_default_str();
    verify->add_option("--draws", draws, "parameter draws per case and N")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--mutate", mutate, "flip one coefficient sign, e.g. HahnII:bHat");

    auto* bench = app.add_subcommand("bench", "benchmark the tridiagonal eigensolver");
    bench->add_option("family", family, families_help)->required();
    add_param_options(bench, ps);
    bench->add_option("--dims", dims, "comma-separated dimensions");
    bench->add_option("--reps", reps, "repetitions per dimension")->check(CLI::NonNegativeNumber)->capture_default_str();
    bench->add_flag("--vectors", vectors, "also compute eigenvectors and report the residual");

    auto* poly = app.add_subcommand("poly", "tabulate y_n(x) on the grid");
    poly->add_option("family", pa.family, "hahn, dual-hahn, racah or krawtchouk")->required();
    add_param_options(poly, pa.ps);
    poly->add_option("--p", pa.p, "Krawtchouk p")->capture_default_str();
    poly->add_option("--minus-n", pa.minus_n, "Racah: alpha, gamma or beta-delta")->capture_default_str();
    poly->add_option("--N", pa.N, "grid 0..N")->check(CLI::PositiveNumber)->capture_default_str();
    poly->add_option("--n", pa.n, "degree")->check(CLI::NonNegativeNumber)->capture_default_str();
    poly->add_flag("--weights", pa.weights, "add weight column and norm");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*gen) return cmd_gen(family, N, ps, format, out);
        if (*spec) return cmd_spectrum(family, N, ps);
        if (*verify) return cmd_verify(suite, max_N, seed, draws, mutate);
        if (*bench) return cmd_bench(family, ps, dims, reps, vectors);
        if (*poly) return cmd_poly(pa);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const NoConvergence& e) {
        std::cerr << "error: " << e.what() << '\n' << e.matrix_dump << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
