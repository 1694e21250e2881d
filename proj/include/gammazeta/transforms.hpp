// Mellin and Weyl transforms evaluated by quadrature.

#ifndef GAMMAZETA_TRANSFORMS_HPP
#define GAMMAZETA_TRANSFORMS_HPP

#include <gammazeta/numerics.hpp>
#include <gammazeta/quadrature.hpp>
#include <gammazeta/special.hpp>

#include <algorithm>
#include <cmath>

namespace gammazeta {

// M[f; a] = int_0^inf t^{a-1} f(t) dt.
inline eval_result mellin_transform(const real_function& f, complex_t a, const eval_config& cfg = {})
{
    if (!f.in_strip(a.real()))
        throw domain_error("mellin_transform: Re(a) outside the existence strip of f");
    auto integrand = [&](double t) -> complex_t {
        return std::exp((a - 1.0) * std::log(t)) * f(t);
    };
    return integrate_semi_infinite(integrand, f.decay_rate, cfg);
}

// (f o g)(t) = int_0^inf f(x t) g(x) dx.
inline eval_result mellin_convolution(const real_function& f, const real_function& g, double t,
                                      const eval_config& cfg = {})
{
    if (!(t > 0)) throw domain_error("mellin_convolution: t must be > 0");
    auto integrand = [&](double x) -> complex_t { return f(x * t) * g(x); };
    return integrate_semi_infinite(integrand, f.decay_rate * t + g.decay_rate, cfg);
}

// f o g as a real_function.  Its Mellin strip is where a lies in the strip of
// f and 1 - a lies in the strip of g, which is where
// M[f o g; a] = M[f; a] M[g; 1 - a] holds.
inline real_function mellin_convolution_function(real_function f, real_function g, eval_config cfg = {})
{
    double lo = std::max(f.sigma_lo, 1.0 - g.sigma_hi);
    double hi = std::min(f.sigma_hi, 1.0 - g.sigma_lo);
    return real_function(
        [f = std::move(f), g = std::move(g), cfg](double t) {
            return mellin_convolution(f, g, t, cfg).value;
        },
        lo, hi);
}

// Fractional Weyl integral  W^{-a}[f](x) = 1/Gamma(a) int_0^inf t^{a-1} f(x+t) dt,
// Re(a) > 0.  f takes real arguments, so x must be real.  Negative orders are
// derivatives and are evaluated by series in gamma_zeta.
inline eval_result weyl_transform(const real_function& f, complex_t a, complex_t x,
                                  const eval_config& cfg = {})
{
    if (!(a.real() > 0))
        throw domain_error("weyl_transform: Re(a) must be > 0 (negative orders are derivatives)");
    if (x.imag() != 0)
        throw domain_error("weyl_transform: x must be real for a real-argument integrand");
    if (!(x.real() >= 0)) throw domain_error("weyl_transform: Re(x) must be >= 0");
    const double x0 = x.real();
    const complex_t lg = log_gamma(a);
    auto integrand = [&](double t) -> complex_t {
        return std::exp((a - 1.0) * std::log(t) - lg) * f(x0 + t);
    };
    return integrate_semi_infinite(integrand, f.decay_rate, cfg);
}

}  // namespace gammazeta

#endif  // GAMMAZETA_TRANSFORMS_HPP
