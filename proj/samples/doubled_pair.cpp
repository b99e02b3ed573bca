// Checks both doubling relations for the dual Hahn I case on a small grid and
// prints the kernel partner at the classified nu.

#include <iostream>

#include "doubling/doubling.hpp"

int main() {
    using namespace doubling;
    DualHahnParams p{Rational(1, 3), Rational(2, 5), 4};
    auto s = coefficients(DoubleCase::DualHahnI, p);

    bool ok = true;
    for (long n = 0; n < p.N; ++n)
        for (long x = 0; x <= p.N; ++x) ok = ok && verify_pair(s, n, x).is_zero();
    std::cout << describe(p) << ": pair relations " << (ok ? "hold" : "FAIL") << "\n";

    auto nu = christoffel_nu(DoubleCase::DualHahnI, p);
    std::cout << "nu = " << nu.str() << "\n";
    for (long x = 1; x <= p.N; ++x)
        std::cout << "P_1(" << x << ") = " << christoffel_kernel(p, nu, 1, x).str() << "   yHat_1(" << x
                  << ") = " << s.y_hat(1, x).str() << "\n";
}
