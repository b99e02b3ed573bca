// Builds the odd extension of the Sylvester-Kac matrix, certifies its spectrum
// exactly and compares with the floating-point eigensolver.

#include <cstdio>

#include "doubling/doubling.hpp"

int main() {
    using namespace doubling;
    const long N = 5;
    const Rational gamma(1, 4), delta(3, 4);

    auto m = extended_kac_odd(N, gamma, delta);
    std::printf("dim %zu, exact certificate: %s\n", m.matrix.dim(),
                verify_spectrum_exact(m.matrix, m.spectrum) ? "ok" : "MISMATCH");

    auto f = FloatTridiag::from(symmetrize(m.matrix));
    auto r = sym_tridiag_eigen(f, false);
    auto ref = m.spectrum.to_doubles();
    for (std::size_t i = 0; i < ref.size(); ++i)
        std::printf("%-14s %22.17f %22.17f\n", m.spectrum.entries()[i].str().c_str(), ref[i], r.values[i]);
}
