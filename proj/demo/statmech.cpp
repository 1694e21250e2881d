// Bose-Einstein and Fermi-Dirac integrals, and the anyon curve between them.

#include <gammazeta/statmech.hpp>

#include <cstdio>

using namespace gammazeta;

int main()
{
    std::printf("%6s %22s %22s\n", "x", "B_1/2(x)", "F_1/2(x)");
    for (double x : {-5.0, -2.0, -1.0, -0.5, 0.0}) {
        double b = bose_einstein_integral(0.5, x).value.real();
        double f = fermi_dirac_integral(0.5, x).value.real();
        std::printf("%6.2f %22.16f %22.16f\n", x, b, f);
    }
    // F_q keeps going past x = 0 (degenerate Fermi gas); B_q does not.
    for (double x : {1.0, 5.0, 20.0})
        std::printf("%6.2f %22s %22.16f\n", x, "-", fermi_dirac_integral(0.5, x).value.real());

    std::printf("\nG_nu(2; 1), smooth weights\n");
    for (int k = 0; k <= 10; ++k) {
        double nu = k / 10.0;
        auto r = anyon_integral(nu, 2.0, 1.0);
        std::printf("%4.1f %20.16f  %s\n", nu, r.value.real(), std::string(to_string(r.tag)).c_str());
    }

    auto r = be_fd_relation_residual(1.0, -1.0, exponent_variant::corrected);
    std::printf("\nF_1(-1) - B_1(-1) + 2^{-1} B_1(-2) = %.3g\n", r);
}
