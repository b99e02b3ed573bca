#pragma once

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "doubling/numeig.hpp"

namespace doubling {

namespace detail {
inline std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <class Entry>
void write_mm_entries(std::ostream& os, std::size_t dim, const std::vector<Entry>& super,
                      const std::vector<Entry>& sub) {
    std::size_t nnz = 0;
    for (std::size_t i = 0; i < super.size(); ++i) nnz += (!super[i].is_zero()) + (!sub[i].is_zero());
    os << "%%MatrixMarket matrix coordinate real general\n" << dim << ' ' << dim << ' ' << nnz << '\n';
    for (std::size_t i = 0; i < dim; ++i) {
        if (i > 0 && !sub[i - 1].is_zero()) os << i + 1 << ' ' << i << ' ' << g17(sub[i - 1].to_double()) << '\n';
        if (i < super.size() && !super[i].is_zero())
            os << i + 1 << ' ' << i + 2 << ' ' << g17(super[i].to_double()) << '\n';
    }
}
}  // namespace detail

// Coordinate real general, 1-based, 17 significant digits, no diagonal entries.
inline void write_matrix_market(std::ostream& os, const TwoDiagonal& m) {
    detail::write_mm_entries(os, m.dim(), m.super, m.sub);
}

inline void write_matrix_market(std::ostream& os, const SymTridiag& m) {
    detail::write_mm_entries(os, m.dim(), m.off, m.off);
}

// "dim m n" then "i j p/q", 1-based.
inline void write_exact(std::ostream& os, const TwoDiagonal& m) {
    std::size_t n = m.dim();
    os << "dim " << n << ' ' << n << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && !m.sub[i - 1].is_zero()) os << i + 1 << ' ' << i << ' ' << m.sub[i - 1].fraction_str() << '\n';
        if (i + 1 < n && !m.super[i].is_zero()) os << i + 1 << ' ' << i + 2 << ' ' << m.super[i].fraction_str() << '\n';
    }
}

// Rational form of a symmetric matrix; only when every entry is rational.
inline TwoDiagonal rational_form(const SymTridiag& m) {
    TwoDiagonal t;
    for (std::size_t i = 0; i < m.off.size(); ++i) {
        if (!m.off[i].is_rational())
            throw Unsupported("entry (" + std::to_string(i + 1) + "," + std::to_string(i + 2) + ") = " +
                              m.off[i].str() + " is irrational; use --format mm or a nonsym family");
        t.super.push_back(m.off[i].to_rational());
        t.sub.push_back(m.off[i].to_rational());
    }
    return t;
}

namespace detail {
inline bool next_content_line(std::istream& is, std::string& line, std::size_t& lineno) {
    while (std::getline(is, line)) {
        ++lineno;
        auto p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos || line[p] == '%') continue;
        return true;
    }
    return false;
}

inline long parse_index(const std::string& tok, std::size_t lineno) {
    try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad index '" + tok + "' on line " + std::to_string(lineno), lineno);
    }
}
}  // namespace detail

inline TwoDiagonal read_exact(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    if (!detail::next_content_line(is, line, lineno)) throw ParseError("empty input", 0);
    std::istringstream head(line);
    std::string word, rs, cs;
    head >> word >> rs >> cs;
    if (word != "dim") throw ParseError("expected 'dim m n' header", lineno);
    long rows = detail::parse_index(rs, lineno), cols = detail::parse_index(cs, lineno);
    if (rows != cols || rows < 1) throw ParseError("matrix must be square and nonempty", lineno);
    TwoDiagonal m;
    m.super.assign(rows - 1, Rational(0));
    m.sub.assign(rows - 1, Rational(0));
    while (detail::next_content_line(is, line, lineno)) {
        std::istringstream ls(line);
        std::string it, jt, vt, extra;
        ls >> it >> jt >> vt;
        if (vt.empty() || (ls >> extra)) throw ParseError("expected 'i j p/q' on line " + std::to_string(lineno), lineno);
        long i = detail::parse_index(it, lineno), j = detail::parse_index(jt, lineno);
        if (i < 1 || j < 1 || i > rows || j > cols) throw ParseError("index out of range", lineno);
        Rational v;
        try {
            v = Rational::parse(vt);
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()) + " on line " + std::to_string(lineno), lineno);
        }
        if (j == i + 1)
            m.super[i - 1] = v;
        else if (i == j + 1)
            m.sub[j - 1] = v;
        else if (!v.is_zero())
            throw ParseError("entry (" + it + "," + jt + ") is outside the two off-diagonals", lineno);
    }
    return m;
}

struct Triplet {
    long i, j;
    double v;
};

struct SparseMatrix {
    long rows = 0, cols = 0;
    std::vector<Triplet> entries;  // 0-based
};

inline SparseMatrix read_matrix_market(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("%%MatrixMarket", 0) != 0)
        throw ParseError("missing %%MatrixMarket header", 0);
    std::istringstream hs(line);
    std::string banner, object, format, field, symmetry;
    hs >> banner >> object >> format >> field >> symmetry;
    if (object != "matrix" || format != "coordinate" || field != "real")
        throw ParseError("only 'matrix coordinate real' is supported", 1);
    bool symmetric = symmetry == "symmetric";
    if (!symmetric && symmetry != "general") throw ParseError("unsupported symmetry '" + symmetry + "'", 1);
    std::size_t lineno = 1;
    if (!detail::next_content_line(is, line, lineno)) throw ParseError("missing size line", lineno);
    SparseMatrix m;
    long nnz = 0;
    {
        std::istringstream ss(line);
        if (!(ss >> m.rows >> m.cols >> nnz)) throw ParseError("bad size line", lineno);
    }
    for (long k = 0; k < nnz; ++k) {
        if (!detail::next_content_line(is, line, lineno)) throw ParseError("fewer entries than declared", lineno);
        std::istringstream ss(line);
        long i, j;
        double v;
        if (!(ss >> i >> j >> v)) throw ParseError("bad entry line", lineno);
        if (i < 1 || j < 1 || i > m.rows || j > m.cols) throw ParseError("index out of range", lineno);
        m.entries.push_back({i - 1, j - 1, v});
        if (symmetric && i != j) m.entries.push_back({j - 1, i - 1, v});
    }
    return m;
}

// Symmetric image of a tridiagonal sparse matrix: off_i = sqrt(b_i c_i).
inline FloatTridiag symmetrized_tridiag(const SparseMatrix& s) {
    if (s.rows != s.cols || s.rows < 1) throw std::invalid_argument("matrix must be square and nonempty");
    std::size_t n = static_cast<std::size_t>(s.rows);
    FloatTridiag f;
    f.diag.assign(n, 0.0);
    std::vector<double> b(n - 1, 0.0), c(n - 1, 0.0);
    for (const auto& t : s.entries) {
        if (t.i == t.j)
            f.diag[t.i] = t.v;
        else if (t.j == t.i + 1)
            b[t.i] = t.v;
        else if (t.i == t.j + 1)
            c[t.j] = t.v;
        else if (t.v != 0.0)
            throw std::invalid_argument("matrix is not tridiagonal");
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double q = b[i] * c[i];
        if (q < 0) throw NegativeProduct("b_i c_i < 0 at position " + std::to_string(i));
        f.off.push_back(std::sqrt(q));
    }
    return f;
}

inline nlohmann::json to_json(const TwoDiagonal& m) {
    nlohmann::json sup = nlohmann::json::array(), sub = nlohmann::json::array();
    for (const auto& v : m.super) sup.push_back(v.fraction_str());
    for (const auto& v : m.sub) sub.push_back(v.fraction_str());
    return {{"dim", m.dim()}, {"superdiagonal", sup}, {"subdiagonal", sub}};
}

inline nlohmann::json to_json(const SqrtRational& s) {
    return {{"sign", s.sign()}, {"radicand", s.radicand().fraction_str()}, {"value", s.to_double()}};
}

inline nlohmann::json to_json(const SymTridiag& m) {
    nlohmann::json off = nlohmann::json::array();
    for (const auto& v : m.off) off.push_back(to_json(v));
    return {{"dim", m.dim()}, {"offdiagonal", off}};
}

inline nlohmann::json to_json(const Spectrum& s) {
    nlohmann::json e = nlohmann::json::array();
    for (const auto& v : s.entries()) e.push_back(to_json(v));
    return e;
}

}  // namespace doubling
