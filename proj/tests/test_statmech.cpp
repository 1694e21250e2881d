#include <gammazeta/statmech.hpp>
#include <gammazeta/verify.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace gammazeta;
using c = complex_t;

namespace {

double rel(c got, c want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST(Occupancy, Maxwell)
{
    EXPECT_DOUBLE_EQ(maxwell({1.0, 1.0, 0.5}), 1.0);
    EXPECT_NEAR(maxwell({2.0, 1.0, 1.0}), std::exp(-1.0), 1e-16);
    EXPECT_NEAR(maxwell({4.0, 0.0, 2.0}), std::exp(-2.0), 1e-16);
}

TEST(Occupancy, BoseAndFermi)
{
    EXPECT_DOUBLE_EQ(fermi_occupancy({1.0, 1.0, 1.0}), 0.5);
    EXPECT_NEAR(bose_occupancy({std::log(2.0), 0.0, 1.0}), 1.0, 1e-15);
    thermo_state s{20.0, 0.0, 1.0};
    const double f = maxwell(s);
    EXPECT_LT(std::abs(bose_occupancy(s) - f), 1e-8 * f);
    EXPECT_LT(std::abs(fermi_occupancy(s) - f), 1e-8 * f);
    EXPECT_DOUBLE_EQ(fermi_occupancy({0.0, 800.0, 1.0}), 1.0);
}

TEST(Occupancy, Domain)
{
    EXPECT_THROW(bose_occupancy({1.0, 1.0, 1.0}), domain_error);
    EXPECT_THROW(bose_occupancy({1.0, 2.0, 1.0}), domain_error);
    EXPECT_THROW(maxwell({1.0, 0.0, 0.0}), domain_error);
    EXPECT_THROW(fermi_occupancy({-1.0, 0.0, 1.0}), domain_error);
}

TEST(BoseEinstein, Values)
{
    EXPECT_LT(rel(bose_einstein_integral(1, 0).value, pi * pi / 6), 1e-14);
    EXPECT_LT(std::abs(bose_einstein_integral(0.5, -20).value.real() / std::exp(-20.0) - 1), 1e-7);
    // oracle_phi(0, 2.5, 1, 10^3, direct)
    auto r = bose_einstein_integral(1.5, -1);
    EXPECT_LE(std::abs(r.value - 0.39572801038033761), 10 * r.error_estimate);
    // mpmath polylog(1.5, e^{-0.1})
    EXPECT_LT(rel(bose_einstein_integral(0.5, -0.1).value, 1.63637740780850144958286735583), 1e-13);
}

TEST(BoseEinstein, NegativeIndexAboveMinusOne)
{
    // B_{-1/2}(x) = Li_{1/2}(e^x)
    compensated_sum s;
    for (int m = 1; m < 200; ++m) s.add(std::exp(-m) / std::sqrt(double(m)));
    EXPECT_LT(rel(bose_einstein_integral(-0.5, -1).value, s.value()), 1e-13);
}

TEST(BoseEinstein, Domain)
{
    EXPECT_THROW(bose_einstein_integral(1, 0.5), domain_error);
    EXPECT_THROW(bose_einstein_integral(0, 0), domain_error);
    EXPECT_THROW(bose_einstein_integral(-1, -1), domain_error);
}

TEST(FermiDirac, Values)
{
    EXPECT_LT(rel(fermi_dirac_integral(1, 0).value, pi * pi / 12), 1e-14);
    const double ln1pe = std::log1p(std::exp(1.0));
    EXPECT_LT(rel(fermi_dirac_integral(0, 1).value, ln1pe), 1e-10);
    EXPECT_NEAR(ln1pe, 1.3132616875182228, 1e-15);
    // oracle_phi(0, 1.5, 2, 10^3, alternating)
    auto r = fermi_dirac_integral(0.5, -2);
    EXPECT_LE(std::abs(r.value - 0.12929851332007561), 10 * r.error_estimate);
}

TEST(FermiDirac, PositiveArgumentGoldens)
{
    // mpmath -polylog(q+1, -e^x)
    EXPECT_LT(rel(fermi_dirac_integral(0.5, 1).value, 1.57564077615130023079006636086), 1e-12);
    EXPECT_LT(rel(fermi_dirac_integral(2, 3).value, 9.48428390199947544114945100776), 1e-12);
    EXPECT_LT(rel(fermi_dirac_integral(-0.5, 0.5).value, 0.807745969579904758818571926443), 1e-12);
    EXPECT_EQ(fermi_dirac_integral(0.5, 1).tag, method::quadrature);
}

TEST(FermiDirac, ZeroTemperatureLimit)
{
    // F_q(x) -> x^{q+1}/Gamma(q+2) for large x
    const double x = 60, q = 1;
    const double leading = x * x / 2 + pi * pi / 6;  // Sommerfeld, exact for q = 1 up to e^{-x}
    EXPECT_LT(rel(fermi_dirac_integral(q, x).value, leading), 1e-12);
}

TEST(FermiDirac, RouteSwitchContinuity)
{
    for (double q : {0.5, 1.0, 2.0}) {
        auto a = fermi_dirac_integral(q, -1e-8).value;
        auto b = fermi_dirac_integral(q, 1e-8).value;
        EXPECT_LT(rel(b, a), 1e-6) << q;
    }
}

TEST(FermiDirac, Domain)
{
    EXPECT_THROW(fermi_dirac_integral(-1, 0), domain_error);
    EXPECT_THROW(fermi_dirac_integral(NAN, 0), domain_error);
}

TEST(MaxwellLimit, BothIntegrals)
{
    for (double q : {0.0, 0.5, 1.0, 2.5}) {
        EXPECT_LT(std::abs(bose_einstein_integral(q, -30).value.real() / std::exp(-30.0) - 1), 1e-9);
        EXPECT_LT(std::abs(fermi_dirac_integral(q, -30).value.real() / std::exp(-30.0) - 1), 1e-9);
    }
}

TEST(BoseFermiRelation, CorrectedFormHolds)
{
    for (double a : {0.5, 1.0, 2.0, 3.5})
        for (double x : {-0.25, -1.0, -3.0})
            EXPECT_LT(be_fd_relation_residual(a, x, exponent_variant::corrected), 1e-9) << a << " " << x;
    EXPECT_LT(be_fd_relation_residual(2, -1e-6, exponent_variant::corrected), 1e-5);
}

TEST(BoseFermiRelation, PrintedFormFails)
{
    EXPECT_GE(be_fd_relation_residual(1, -1, exponent_variant::as_printed), 1e-3);
    EXPECT_GE(be_fd_relation_residual(2, -0.5, exponent_variant::as_printed), 1e-3);
}

TEST(BoseFermiRelation, Domain)
{
    EXPECT_THROW(be_fd_relation_residual(1, 0, exponent_variant::corrected), domain_error);
    EXPECT_THROW(be_fd_relation_residual(0, -1, exponent_variant::corrected), domain_error);
}

TEST(Convolution, BoseEinstein)
{
    EXPECT_LT(be_convolution_residual(1, 2, -1), 1e-6);
    EXPECT_LT(be_convolution_residual(2, 1, -0.5), 1e-6);
    EXPECT_LT(be_convolution_residual(0.5, 1.5, -1), 1e-6);
}

TEST(Convolution, FermiDirac)
{
    EXPECT_LT(fd_convolution_residual(1, 1, -1), 1e-6);
    EXPECT_LT(fd_convolution_residual(2, 1, -0.5), 1e-6);
    EXPECT_LT(fd_convolution_residual(1, 2.5, -2), 1e-6);
}

TEST(Anyon, EndpointsAreExact)
{
    for (auto w : {anyon_weights::smooth(), anyon_weights::linear(), anyon_weights::trigonometric()}) {
        EXPECT_EQ(anyon_integral(0, 2.0, 1.0, w).value, phi({0, 2.0, 1.0}).value);
        EXPECT_EQ(anyon_integral(1, 2.0, 1.0, w).value, psi({0, 2.0, 1.0}).value);
        EXPECT_EQ(anyon_integral(0, 2.0, 1.0, w).value, bose_einstein_integral(1, -1).value);
        EXPECT_EQ(anyon_integral(1, 2.0, 1.0, w).value, fermi_dirac_integral(1, -1).value);
    }
}

TEST(Anyon, MidpointGolden)
{
    // 0.5 * oracle(0.5, 2, 1, direct) + 0.5 * oracle(-0.5, 2, 1, alternating);
    // b(1/2) = 1/2 for every shipped weight family.
    auto o1 = verify::oracle_phi(0.5, 2.0, 1.0, 1000, verify::oracle_mode::direct);
    auto o2 = verify::oracle_phi(-0.5, 2.0, 1.0, 1000, verify::oracle_mode::alternating);
    const c golden = 0.5 * o1.value + 0.5 * o2.value;
    EXPECT_NEAR(golden.real(), 1.2267821884516731, 1e-15);
    for (auto w : {anyon_weights::smooth(), anyon_weights::linear(), anyon_weights::trigonometric()}) {
        auto r = anyon_integral(0.5, 2.0, 1.0, w);
        EXPECT_LE(std::abs(r.value - golden), 10 * r.error_estimate);
    }
}

TEST(Anyon, DefaultWeightsAreContinuous)
{
    double worst = 0;
    for (int k = 0; k < 10000; k += 7) {
        double nu = k * 1e-4;
        auto a = anyon_integral(nu, 2.0, 1.0).value;
        auto b = anyon_integral(nu + 1e-4, 2.0, 1.0).value;
        worst = std::max(worst, std::abs(a - b));
    }
    EXPECT_LT(worst, 1e-3);
}

TEST(Anyon, LinearWeightsBlowUpNearBose)
{
    // b(nu) = nu times the n = 0 term nu^{-2} of Psi_{nu-1}(2; x).
    auto near = anyon_integral(1e-4, 2.0, 1.0, anyon_weights::linear()).value;
    EXPECT_GT(std::abs(near - phi({0, 2.0, 1.0}).value), 100.0);
}

TEST(Anyon, Domain)
{
    EXPECT_THROW(anyon_integral(-0.1, 2.0, 1.0), domain_error);
    EXPECT_THROW(anyon_integral(1.1, 2.0, 1.0), domain_error);
    anyon_weights bad{[](double) { return 1.0; }, [](double) { return 0.0; }, true};
    EXPECT_THROW(anyon_integral(0.5, 2.0, 1.0, bad), domain_error);
    auto open = anyon_weights::linear();
    open.restrict_unit_interval = false;
    EXPECT_NO_THROW(anyon_integral(1.5, 2.0, 1.0, open));
}
