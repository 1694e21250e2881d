// Occupancy distributions, Bose-Einstein and Fermi-Dirac integral functions
// as gamma-zeta specializations, and the anyon interpolation G_nu.
//
//   B_q(x) = 1/Gamma(q+1) int_0^inf t^q / (e^{t-x} - 1) dt = Phi_0(q+1; -x)
//   F_q(x) = 1/Gamma(q+1) int_0^inf t^q / (e^{t-x} + 1) dt = Psi_0(q+1; -x)

#ifndef GAMMAZETA_STATMECH_HPP
#define GAMMAZETA_STATMECH_HPP

#include <gammazeta/gamma_zeta.hpp>
#include <gammazeta/numerics.hpp>
#include <gammazeta/quadrature.hpp>
#include <gammazeta/special.hpp>

#include <cmath>
#include <functional>
#include <limits>

namespace gammazeta {

// Energies in a common unit; tau is the thermal energy.
struct thermo_state {
    double energy = 0;
    double chemical_potential = 0;
    double thermal_energy = 1;

    void validate() const
    {
        if (!std::isfinite(energy) || !std::isfinite(chemical_potential) ||
            !std::isfinite(thermal_energy))
            throw domain_error("thermo_state: non-finite field");
        if (!(thermal_energy > 0)) throw domain_error("thermo_state: tau must be > 0");
        if (!(energy >= 0)) throw domain_error("thermo_state: energy must be >= 0");
    }
    double reduced() const { return (energy - chemical_potential) / thermal_energy; }
};

inline double maxwell(const thermo_state& s)
{
    s.validate();
    return std::exp(-s.reduced());
}

inline double bose_occupancy(const thermo_state& s)
{
    s.validate();
    double y = s.reduced();
    if (!(y > 0)) throw domain_error("bose_occupancy: requires energy > chemical potential");
    return 1.0 / std::expm1(y);
}

inline double fermi_occupancy(const thermo_state& s)
{
    s.validate();
    double y = s.reduced();
    if (y > 0) {
        double e = std::exp(-y);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(y));
}

// B_q(x) for x <= 0.  For x > 0 the integrand has a non-integrable pole at
// t = x.  q > -1 for x < 0; x = 0 needs q > 0.
inline eval_result bose_einstein_integral(double q, double x, const eval_config& cfg = {})
{
    if (!std::isfinite(q) || !std::isfinite(x)) throw domain_error("B_q: non-finite argument");
    if (x > 0) throw domain_error("B_q(x): x must be <= 0");
    if (!(q > -1)) throw domain_error("B_q(x): q must be > -1");
    if (x == 0 && !(q > 0)) throw domain_error("B_q(0): q must be > 0");
    return phi({0.0, q + 1.0, -x}, cfg);
}

// F_q(x) for q > -1.  x <= 0 uses the gamma-zeta series; for x > 0 the Lerch
// argument -e^{x} leaves the unit disc and the defining integral is
// evaluated directly, split at the Fermi edge t = x.
inline eval_result fermi_dirac_integral(double q, double x, const eval_config& cfg = {})
{
    if (!std::isfinite(q) || !std::isfinite(x)) throw domain_error("F_q: non-finite argument");
    if (!(q > -1)) throw domain_error("F_q(x): q must be > -1");
    if (x <= 0) return psi({0.0, q + 1.0, -x}, cfg);

    const double lg = log_gamma(q + 1.0).real();
    // 0 < t < x: the occupancy is 1/(1 + e^{-(x-t)}).
    auto below = integrate_finite(
        [&](double t) -> complex_t {
            return std::exp(q * std::log(t) - lg) / (1.0 + std::exp(t - x));
        },
        0.0, x, cfg);
    // t = x + s, s > 0.
    auto above = integrate_semi_infinite(
        [&](double s) -> complex_t {
            double e = std::exp(-s);
            return std::exp(q * std::log(x + s) - lg) * e / (1.0 + e);
        },
        1.0, cfg);
    eval_result r;
    r.value = below.value + above.value;
    r.error_estimate = below.error_estimate + above.error_estimate;
    r.effort = below.effort + above.effort;
    r.tag = method::quadrature;
    return finish(r, "F_q");
}

enum class exponent_variant { as_printed, corrected };

// |F_a(x) - B_a(x) + c B_a(2x)| with c = 2^{1-a} (as_printed) or c = 2^{-a}
// (corrected: the duplication identity with nu = 0, x -> -x, a -> a+1).
// Only the corrected form vanishes.
inline residual_check be_fd_relation_check(double alpha, double x, exponent_variant variant,
                                           const eval_config& cfg = {})
{
    if (!(alpha > 0)) throw domain_error("be_fd_relation_residual: alpha must be > 0");
    if (!(x < 0)) throw domain_error("be_fd_relation_residual: x must be < 0");
    auto f = fermi_dirac_integral(alpha, x, cfg);
    auto b1 = bose_einstein_integral(alpha, x, cfg);
    auto b2 = bose_einstein_integral(alpha, 2 * x, cfg);
    double c = std::exp2(variant == exponent_variant::corrected ? -alpha : 1.0 - alpha);
    return {std::abs(f.value - b1.value + c * b2.value), {f.effort, b1.effort, b2.effort}};
}

inline double be_fd_relation_residual(double alpha, double x, exponent_variant variant,
                                      const eval_config& cfg = {})
{
    return be_fd_relation_check(alpha, x, variant, cfg).residual;
}

namespace detail {

template <class Integral>
residual_check convolution_check(double alpha, double beta, double x, const eval_config& cfg,
                                 Integral integral)
{
    if (!(alpha > 0)) throw domain_error("convolution residual: alpha must be > 0");
    if (!(x < 0)) throw domain_error("convolution residual: x must be < 0");
    auto lhs = integral(alpha + beta - 1.0, x);
    const double lg = log_gamma(alpha).real();
    auto rhs = integrate_semi_infinite(
        [&](double t) -> complex_t {
            return std::exp((alpha - 1.0) * std::log(t) - lg) * integral(beta - 1.0, x - t).value;
        },
        1.0, cfg);
    return {std::abs(lhs.value - rhs.value), {lhs.effort, rhs.effort}};
}

}  // namespace detail

// |B_{a+b-1}(x) - 1/Gamma(a) int_0^inf t^{a-1} B_{b-1}(x-t) dt|
inline residual_check be_convolution_check(double alpha, double beta, double x,
                                           const eval_config& cfg = {})
{
    return detail::convolution_check(alpha, beta, x, cfg, [&](double q, double y) {
        return bose_einstein_integral(q, y, cfg);
    });
}

inline double be_convolution_residual(double alpha, double beta, double x, const eval_config& cfg = {})
{
    return be_convolution_check(alpha, beta, x, cfg).residual;
}

// |F_{a+b-1}(x) - 1/Gamma(a) int_0^inf t^{a-1} F_{b-1}(x-t) dt|
inline residual_check fd_convolution_check(double alpha, double beta, double x,
                                           const eval_config& cfg = {})
{
    return detail::convolution_check(alpha, beta, x, cfg, [&](double q, double y) {
        return fermi_dirac_integral(q, y, cfg);
    });
}

inline double fd_convolution_residual(double alpha, double beta, double x, const eval_config& cfg = {})
{
    return fd_convolution_check(alpha, beta, x, cfg).residual;
}

//
// Interpolation weights for G_nu = a(nu) Phi_nu + b(nu) Psi_{nu-1}, subject to
// a(0) = 1, b(0) = 0, a(1) = 0, b(1) = 1.
//
struct anyon_weights {
    std::function<double(double)> a;
    std::function<double(double)> b;
    bool restrict_unit_interval = true;

    void validate() const
    {
        if (!a || !b) throw domain_error("anyon_weights: missing weight function");
        const double tol = 1e-12;
        if (std::abs(a(0.0) - 1.0) > tol || std::abs(b(0.0)) > tol ||
            std::abs(a(1.0)) > tol || std::abs(b(1.0) - 1.0) > tol)
            throw domain_error("anyon_weights: need a(0)=1, b(0)=0, a(1)=0, b(1)=1");
    }

    // b(nu) = s(nu) / (s(nu) + s(1-nu)) with s(t) = e^{-1/t}: the standard
    // C-infinity transition.  Every derivative of b vanishes at nu = 0, which
    // is what keeps G continuous there: Psi_{nu-1} carries the term
    // e^{-nu x} nu^{-a}, and b(nu) must vanish faster than nu^{Re a}.
    static anyon_weights smooth()
    {
        auto b = [](double nu) {
            if (nu <= 0) return 0.0;
            if (nu >= 1) return 1.0;
            double p = std::exp(-1.0 / nu), q = std::exp(-1.0 / (1.0 - nu));
            return p / (p + q);
        };
        return {[b](double nu) { return 1.0 - b(nu); }, b, true};
    }

    // a = 1 - nu, b = nu.  G diverges like nu^{1-Re a} as nu -> 0+ when Re a > 1.
    static anyon_weights linear()
    {
        return {[](double nu) { return 1.0 - nu; }, [](double nu) { return nu; }, true};
    }

    // a = cos^2(pi nu / 2), b = sin^2(pi nu / 2).
    static anyon_weights trigonometric()
    {
        return {[](double nu) { return detail::cospi(nu / 2) * detail::cospi(nu / 2); },
                [](double nu) { return detail::sinpi(nu / 2) * detail::sinpi(nu / 2); }, true};
    }
};

// G_nu(a;x) = a(nu) Phi_nu(a;x) + b(nu) Psi_{nu-1}(a;x).  At nu = 0 and nu = 1
// the result is exactly Phi_0 and Psi_0; a term whose weight is zero is not
// evaluated at all (Psi_{-1} is singular).
inline eval_result anyon_integral(double nu, complex_t alpha, complex_t x,
                                  const anyon_weights& w = anyon_weights::smooth(),
                                  const eval_config& cfg = {})
{
    w.validate();
    if (!std::isfinite(nu)) throw domain_error("anyon_integral: nu not finite");
    if (w.restrict_unit_interval && !(nu >= 0 && nu <= 1))
        throw domain_error("anyon_integral: nu must lie in [0, 1]");
    if (nu == 0) return phi({0.0, alpha, x}, cfg);
    if (nu == 1) return psi({0.0, alpha, x}, cfg);

    const double a = w.a(nu), b = w.b(nu);
    eval_result r;
    r.tag = method::closed_form;
    bool first = true;
    auto fold = [&](double weight, const eval_result& part) {
        r.value += weight * part.value;
        r.error_estimate += std::abs(weight) * part.error_estimate;
        r.effort += part.effort;
        if (first) r.tag = part.tag;
        first = false;
    };
    if (a != 0) fold(a, phi({nu, alpha, x}, cfg));
    if (b != 0) fold(b, psi({nu - 1.0, alpha, x}, cfg));
    return finish(r, "anyon_integral");
}

}  // namespace gammazeta

#endif  // GAMMAZETA_STATMECH_HPP
