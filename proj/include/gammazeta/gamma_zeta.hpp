// The gamma-zeta functions
//
//   Phi_nu(a; x) = e^{-(nu+1)x} sum_{n>=0}        e^{-n x} / (n+nu+1)^a
//   Psi_nu(a; x) = e^{-(nu+1)x} sum_{n>=0} (-1)^n e^{-n x} / (n+nu+1)^a
//
// i.e. the Weyl transforms W^{-a} of the kernels e^{-nu t}/(e^t -/+ 1).  Each
// function has three evaluation routes: the series above, delegation to the
// Hurwitz-Lerch transcendent with z = +/- e^{-x}, and quadrature of the Weyl
// integral (real x, Re(a) > 0 only).

#ifndef GAMMAZETA_GAMMA_ZETA_HPP
#define GAMMAZETA_GAMMA_ZETA_HPP

#include <gammazeta/numerics.hpp>
#include <gammazeta/quadrature.hpp>
#include <gammazeta/special.hpp>
#include <gammazeta/transforms.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace gammazeta {

enum class kernel { bose, fermi };  // Phi uses e^t - 1, Psi uses e^t + 1

struct gamma_zeta_point {
    double nu = 0;
    complex_t alpha{};
    complex_t x{};

    void validate(kernel k) const
    {
        if (!std::isfinite(nu) || !is_finite(alpha) || !is_finite(x))
            throw domain_error("gamma_zeta: non-finite parameter");
        if (nu <= -1 && std::floor(nu) == nu)
            throw domain_error("gamma_zeta: nu must not be a negative integer");
        if (x.real() > 0) return;
        if (x == complex_t(0.0)) {
            double need = k == kernel::bose ? 1.0 : 0.0;
            if (alpha.real() > need) return;
            throw domain_error(k == kernel::bose
                                   ? "gamma_zeta: x = 0 requires Re(alpha) > 1 for Phi"
                                   : "gamma_zeta: x = 0 requires Re(alpha) > 0 for Psi");
        }
        if (x.real() == 0)
            throw domain_error("gamma_zeta: Re(x) = 0 with x != 0 is not supported");
        throw domain_error("gamma_zeta: Re(x) must be > 0");
    }
};

namespace detail {

inline double sign_of(kernel k, std::size_t n) { return (k == kernel::fermi && n % 2) ? -1.0 : 1.0; }

inline complex_t gz_term(kernel k, const gamma_zeta_point& p, std::size_t n)
{
    double base = double(n) + p.nu + 1.0;
    complex_t log_base = std::log(complex_t(base));
    return sign_of(k, n) * std::exp(-base * p.x - p.alpha * log_base);
}

// Bound on |sum_{n>N} term(n)|.  With b = N+nu+2 > 0, r = e^{-Re x}:
//   Re(a) >= 0:  r^b b^{-Re a} / (1 - r)
//   Re(a) <  0:  the majorant r^{b+j} (b+j)^p, p = -Re a, has ratio at most
//                q = r ((b+1)/b)^p, so the tail is r^b b^p / (1 - q) once q < 1.
inline double gz_tail_bound(const gamma_zeta_point& p, std::size_t N)
{
    const double b = double(N) + p.nu + 2.0;
    const double rx = p.x.real();
    if (!(b > 0) || !(rx > 0)) return std::numeric_limits<double>::infinity();
    const double sigma = p.alpha.real();
    const double lead = std::exp(-b * rx - sigma * std::log(b));
    if (lead == 0) return 0;
    double one_minus_q;
    if (sigma >= 0) {
        one_minus_q = -std::expm1(-rx);
    } else {
        double log_q = -rx - sigma * std::log1p(1.0 / b);
        if (log_q >= 0) return std::numeric_limits<double>::infinity();
        one_minus_q = -std::expm1(log_q);
    }
    return lead / one_minus_q;
}

inline eval_result gz_series(kernel k, const gamma_zeta_point& p, const eval_config& cfg)
{
    if (p.x == complex_t(0.0)) {
        if (k == kernel::bose) return hurwitz_zeta(p.alpha, p.nu + 1.0);
        return euler_accelerate([&](std::size_t n) { return gz_term(k, p, n); }, cfg);
    }
    // The alternating series at small Re(x) converges slowly but is a textbook
    // case for the Euler transform, as long as the terms keep alternating
    // (Im x well away from pi).
    if (k == kernel::fermi && p.x.real() < cfg.series_threshold && std::abs(p.x.imag()) < 1.0)
        return euler_accelerate([&](std::size_t n) { return gz_term(k, p, n); }, cfg);
    return sum_series([&](std::size_t n) { return gz_term(k, p, n); },
                      [&](std::size_t N) { return gz_tail_bound(p, N); }, cfg);
}

inline eval_result gz_lerch(kernel k, const gamma_zeta_point& p, const eval_config& cfg)
{
    const complex_t z = (k == kernel::bose ? 1.0 : -1.0) * std::exp(-p.x);
    const complex_t pre = std::exp(-(p.nu + 1.0) * p.x);
    auto r = lerch_phi({z, p.alpha, p.nu + 1.0}, cfg);
    r.value *= pre;
    r.error_estimate *= std::abs(pre);
    return finish(r, "gamma_zeta (Lerch route)");
}

//   Phi_nu(a;x) = 1/Gamma(a) int_0^inf t^{a-1} e^{-(nu+1)(t+x)} / (1 - e^{-(t+x)}) dt
//   Psi_nu(a;x) = 1/Gamma(a) int_0^inf t^{a-1} e^{-(nu+1)(t+x)} / (1 + e^{-(t+x)}) dt
inline eval_result gz_quadrature(kernel k, const gamma_zeta_point& p, const eval_config& cfg)
{
    if (p.x.imag() != 0)
        throw domain_error("gamma_zeta: quadrature route needs real x");
    if (!(p.alpha.real() > 0))
        throw domain_error("gamma_zeta: quadrature route needs Re(alpha) > 0");
    if (!(p.nu > -1))
        throw domain_error("gamma_zeta: quadrature route needs nu > -1");
    const double x = p.x.real();
    const complex_t lg = log_gamma(p.alpha);
    const complex_t am1 = p.alpha - 1.0;
    const double c = p.nu + 1.0;
    auto integrand = [&](double t) -> complex_t {
        double u = t + x;
        double denom = k == kernel::bose ? -std::expm1(-u) : 1.0 + std::exp(-u);
        return std::exp(am1 * std::log(t) - lg - c * u) / denom;
    };
    return integrate_semi_infinite(integrand, c, cfg);
}

inline eval_result gz_kernel(kernel k, const gamma_zeta_point& p)
{
    // Order zero: the kernel itself, e^{-(nu+1)x} / (1 -/+ e^{-x}).
    complex_t num = std::exp(-(p.nu + 1.0) * p.x);
    complex_t den = k == kernel::bose ? -detail::expm1(-p.x) : 1.0 + std::exp(-p.x);
    eval_result r;
    r.value = num / den;
    r.effort = 1;
    r.tag = method::closed_form;
    return finish(r, "gamma_zeta (order zero)");
}

inline eval_result gz_dispatch(kernel k, const gamma_zeta_point& p, const eval_config& cfg)
{
    p.validate(k);
    cfg.validate();
    switch (cfg.policy) {
    case method_policy::series_only: return gz_series(k, p, cfg);
    case method_policy::quadrature_only: return gz_quadrature(k, p, cfg);
    case method_policy::automatic: break;
    }
    if (p.alpha == complex_t(0.0)) return gz_kernel(k, p);
    const bool small_x = p.x.real() < cfg.series_threshold;
    if (k == kernel::bose && small_x && p.x != complex_t(0.0) && p.x.imag() == 0 &&
        p.alpha.real() > 0 && p.nu > -1)
        return gz_quadrature(k, p, cfg);
    return gz_series(k, p, cfg);
}

}  // namespace detail

inline eval_result phi(const gamma_zeta_point& p, const eval_config& cfg = {})
{
    return detail::gz_dispatch(kernel::bose, p, cfg);
}

inline eval_result psi(const gamma_zeta_point& p, const eval_config& cfg = {})
{
    return detail::gz_dispatch(kernel::fermi, p, cfg);
}

/// Route-pinned evaluations, used to cross-check the three representations.
inline eval_result phi_series(const gamma_zeta_point& p, const eval_config& cfg = {})
{
    p.validate(kernel::bose);
    return detail::gz_series(kernel::bose, p, cfg);
}
inline eval_result psi_series(const gamma_zeta_point& p, const eval_config& cfg = {})
{
    p.validate(kernel::fermi);
    return detail::gz_series(kernel::fermi, p, cfg);
}
inline eval_result phi_lerch(const gamma_zeta_point& p, const eval_config& cfg = {})
{
    p.validate(kernel::bose);
    return detail::gz_lerch(kernel::bose, p, cfg);
}
inline eval_result psi_lerch(const gamma_zeta_point& p, const eval_config& cfg = {})
{
    p.validate(kernel::fermi);
    return detail::gz_lerch(kernel::fermi, p, cfg);
}
inline eval_result phi_quadrature(const gamma_zeta_point& p, const eval_config& cfg = {})
{
    p.validate(kernel::bose);
    return detail::gz_quadrature(kernel::bose, p, cfg);
}
inline eval_result psi_quadrature(const gamma_zeta_point& p, const eval_config& cfg = {})
{
    p.validate(kernel::fermi);
    return detail::gz_quadrature(kernel::fermi, p, cfg);
}

// Negative Weyl order.  Differentiating the series term by term gives
// (-1)^m d^m/dx^m Phi_nu(a;x) = Phi_nu(a-m;x), so the series with Re(a) <= 0
// is the negative-order transform.  The polynomial growth of (n+nu+1)^{-a}
// needs Re(x) > 0 strictly.
inline eval_result phi_negative_order(const gamma_zeta_point& p, const eval_config& cfg = {})
{
    if (p.alpha.real() > 0)
        throw domain_error("phi_negative_order: Re(alpha) must be <= 0");
    if (!(p.x.real() > 0)) throw domain_error("phi_negative_order: Re(x) must be > 0");
    return phi_series(p, cfg);
}

inline eval_result psi_negative_order(const gamma_zeta_point& p, const eval_config& cfg = {})
{
    if (p.alpha.real() > 0)
        throw domain_error("psi_negative_order: Re(alpha) must be <= 0");
    if (!(p.x.real() > 0)) throw domain_error("psi_negative_order: Re(x) must be > 0");
    return psi_series(p, cfg);
}

// Psi_nu(a;x) = e^{i pi (nu+1)} Phi_nu(a; x + i pi).  Shifting x by i pi turns
// e^{-n x} into (-1)^n e^{-n x}; the prefactor e^{-(nu+1)(x + i pi)} leaves the
// branch factor, which is the sign (-1)^{nu+1} for integer nu.
inline eval_result psi_from_phi_shift(const gamma_zeta_point& p, const eval_config& cfg = {})
{
    if (!(p.x.real() > 0)) throw domain_error("psi_from_phi_shift: Re(x) must be > 0");
    gamma_zeta_point shifted{p.nu, p.alpha, p.x + complex_t(0, pi)};
    auto r = phi(shifted, cfg);
    const double angle = std::remainder(pi * (p.nu + 1.0), 2 * pi);
    complex_t factor;
    if (p.nu == std::floor(p.nu))
        factor = std::fmod(std::abs(p.nu + 1.0), 2.0) == 0 ? 1.0 : -1.0;
    else
        factor = std::polar(1.0, angle);
    r.value *= factor;
    return r;
}

// |Psi_{2nu}(a;x) - Phi_{2nu}(a;x) + 2^{1-a} Phi_nu(a;2x)|
inline residual_check duplication_check(double nu, complex_t alpha, complex_t x,
                                        const eval_config& cfg = {})
{
    auto psi2 = psi({2 * nu, alpha, x}, cfg);
    auto phi2 = phi({2 * nu, alpha, x}, cfg);
    auto phi1 = phi({nu, alpha, 2.0 * x}, cfg);
    complex_t two_pow = std::exp((1.0 - alpha) * ln2);
    return {std::abs(psi2.value - phi2.value + two_pow * phi1.value),
            {psi2.effort, phi2.effort, phi1.effort}};
}

inline double duplication_residual(double nu, complex_t alpha, complex_t x, const eval_config& cfg = {})
{
    return duplication_check(nu, alpha, x, cfg).residual;
}

// |Phi_nu(a+b;x) - W^{-a}[t -> Phi_nu(b;t)](x)|
inline residual_check weyl_semigroup_check(double nu, complex_t alpha, complex_t beta, double x,
                                           const eval_config& cfg = {})
{
    if (!(alpha.real() > 0)) throw domain_error("weyl_semigroup_residual: Re(alpha) must be > 0");
    if (!(x > 0)) throw domain_error("weyl_semigroup_residual: x must be > 0");
    auto lhs = phi({nu, alpha + beta, x}, cfg);
    real_function inner([nu, beta, cfg](double s) { return phi({nu, beta, s}, cfg).value; },
                        0.0, std::numeric_limits<double>::infinity(), nu > -1 ? nu + 1.0 : 0.0);
    auto rhs = weyl_transform(inner, alpha, x, cfg);
    return {std::abs(lhs.value - rhs.value), {lhs.effort, rhs.effort}};
}

inline double weyl_semigroup_residual(double nu, complex_t alpha, complex_t beta, double x,
                                      const eval_config& cfg = {})
{
    return weyl_semigroup_check(nu, alpha, beta, x, cfg).residual;
}

}  // namespace gammazeta

#endif  // GAMMAZETA_GAMMA_ZETA_HPP
