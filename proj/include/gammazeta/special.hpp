// Gamma, Riemann zeta and the Hurwitz-Lerch transcendent for complex
// arguments.

#ifndef GAMMAZETA_SPECIAL_HPP
#define GAMMAZETA_SPECIAL_HPP

#include <gammazeta/numerics.hpp>
#include <gammazeta/quadrature.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <string>

namespace gammazeta {

namespace detail {

// sin(pi x) and cos(pi x) with exact argument reduction, so that integer and
// half-integer x give exact zeros.
inline double sinpi(double x)
{
    double r = std::fmod(x, 2.0);
    if (r < 0) r += 2.0;
    if (r == 0 || r == 1) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == 1.5) return -1.0;
    return std::sin(pi * r);
}

inline double cospi(double x) { return sinpi(x + 0.5); }

inline complex_t sinpi(complex_t z)
{
    double a = z.real(), b = z.imag();
    return {sinpi(a) * std::cosh(pi * b), cospi(a) * std::sinh(pi * b)};
}

// e^z - 1 without cancellation for small |z|.
inline complex_t expm1(complex_t z)
{
    double a = z.real(), b = z.imag();
    double s = std::sin(0.5 * b);
    double re = std::expm1(a) * std::cos(b) - 2.0 * s * s;
    double im = std::exp(a) * std::sin(b);
    return {re, im};
}

inline complex_t wrap_imag(complex_t z)
{
    double im = std::remainder(z.imag(), 2 * pi);
    if (im <= -pi) im += 2 * pi;
    return {z.real(), im};
}

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficient set).
inline constexpr double lanczos_g = 607.0 / 128.0;
inline constexpr std::array<double, 15> lanczos_coef = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5,
};

using lcomplex = std::complex<long double>;

inline lcomplex lanczos_series(lcomplex zm1)
{
    lcomplex x = lanczos_coef[0];
    for (std::size_t i = 1; i < lanczos_coef.size(); ++i)
        x += static_cast<long double>(lanczos_coef[i]) / (zm1 + static_cast<long double>(i));
    return x;
}

// log Gamma(z) on Re(z) >= 1/2, continuous branch (real for real z).
inline lcomplex log_gamma_right(complex_t z)
{
    const long double half_log_2pi = 0.918938533204672741780329736405617639L;
    lcomplex zm1 = lcomplex(z) - 1.0L;
    lcomplex t = zm1 + static_cast<long double>(lanczos_g) + 0.5L;
    return half_log_2pi + (zm1 + 0.5L) * std::log(t) - t + std::log(lanczos_series(zm1));
}

// Euler-Maclaurin coefficients B_{2k} / (2k)!, k = 1..15.
inline constexpr std::array<double, 15> bernoulli_over_factorial = {
    1.0 / 6 / 2,
    -1.0 / 30 / 24,
    1.0 / 42 / 720,
    -1.0 / 30 / 40320,
    5.0 / 66 / 3628800,
    -691.0 / 2730 / 479001600,
    7.0 / 6 / 87178291200.0,
    -3617.0 / 510 / 20922789888000.0,
    43867.0 / 798 / 6402373705728000.0,
    -174611.0 / 330 / 2432902008176640000.0,
    854513.0 / 138 / 1.1240007277776077e21,
    -236364091.0 / 2730 / 6.204484017332394e23,
    8553103.0 / 6 / 4.0329146112660565e26,
    -23749461029.0 / 870 / 3.0488834461171387e29,
    8615841276005.0 / 14322 / 2.6525285981219107e32,
};

}  // namespace detail

// Gamma(a): Lanczos on Re(a) >= 1/2, reflection elsewhere.
inline complex_t gamma(complex_t a)
{
    if (!is_finite(a)) throw domain_error("gamma: argument not finite");
    if (is_nonpositive_integer(a)) throw pole_error("gamma: pole at non-positive integer");
    if (a.real() < 0.5) {
        complex_t s = detail::sinpi(a);
        return check_finite(pi / (s * gamma(1.0 - a)), "gamma");
    }
    if (a.imag() == 0) {
        // Real path: pow is correctly rounded, which keeps large arguments
        // accurate.  The power is split to delay overflow.
        long double zm1 = a.real() - 1.0L;
        long double t = zm1 + static_cast<long double>(detail::lanczos_g) + 0.5L;
        long double half = std::pow(t, (zm1 + 0.5L) / 2);
        long double x = detail::lanczos_series(zm1).real();
        long double v = 2.506628274631000502415765284811045253L * x * half * std::exp(-t) * half;
        return check_finite(static_cast<double>(v), "gamma");
    }
    auto lg = detail::log_gamma_right(a);
    return check_finite(complex_t(std::exp(lg)), "gamma");
}

// Principal value of log Gamma(a): imaginary part in (-pi, pi], so that
// exp(log_gamma(a)) == gamma(a).
inline complex_t log_gamma(complex_t a)
{
    if (!is_finite(a)) throw domain_error("log_gamma: argument not finite");
    if (is_nonpositive_integer(a)) throw pole_error("log_gamma: pole at non-positive integer");
    if (a == complex_t(1.0) || a == complex_t(2.0)) return 0.0;
    if (a.real() < 0.5) {
        complex_t s = detail::sinpi(a);
        complex_t v = std::log(pi) - std::log(s) - log_gamma(1.0 - a);
        return check_finite(detail::wrap_imag(v), "log_gamma");
    }
    return check_finite(detail::wrap_imag(complex_t(detail::log_gamma_right(a))), "log_gamma");
}

// Hurwitz zeta sum_{n>=0} (n+v)^{-s} by Euler-Maclaurin summation.  Valid for
// any s != 1 with Re(s) > 0 used here; powers use the principal logarithm.
inline eval_result hurwitz_zeta(complex_t s, complex_t v)
{
    if (s == complex_t(1.0)) throw pole_error("hurwitz_zeta: pole at s = 1");
    if (is_nonpositive_integer(v)) throw pole_error("hurwitz_zeta: v is a non-positive integer");

    const double shift = std::max(0.0, -v.real());
    const auto n_head = static_cast<std::size_t>(std::ceil(shift + std::abs(s) + 12.0));

    compensated_sum acc;
    for (std::size_t n = 0; n < n_head; ++n)
        acc.add(std::exp(-s * std::log(double(n) + v)));

    const complex_t w = double(n_head) + v;
    const complex_t log_w = std::log(w);
    const complex_t w_pow = std::exp(-s * log_w);  // w^{-s}
    acc.add(w * w_pow / (s - 1.0));
    acc.add(0.5 * w_pow);

    complex_t rising = s;  // s (s+1) ... (s+2k-2)
    complex_t w_pow_k = w_pow / w;  // w^{-s-2k+1}
    const complex_t inv_w2 = 1.0 / (w * w);
    double last = 0;
    std::size_t k = 0;
    for (; k < detail::bernoulli_over_factorial.size(); ++k) {
        complex_t term = detail::bernoulli_over_factorial[k] * rising * w_pow_k;
        acc.add(term);
        last = std::abs(term);
        if (last <= 1e-3 * eps * std::abs(acc.value())) break;
        rising *= (s + double(2 * k + 1)) * (s + double(2 * k + 2));
        w_pow_k *= inv_w2;
    }
    eval_result r;
    r.value = acc.value();
    r.error_estimate = last + 4 * eps * acc.magnitude();
    r.effort = n_head + k + 1;
    r.tag = method::accelerated_series;
    return finish(r, "hurwitz_zeta");
}

// zeta(a) for Re(a) > 0, a != 1, as eta(a) / (1 - 2^{1-a}), the alternating
// series for eta summed with the Euler transform.  Near the zeros of the
// denominator other than a = 1, and for large |Im a| where the alternating
// series is poorly conditioned, Euler-Maclaurin on the Dirichlet series is
// used instead.
inline eval_result riemann_zeta_eval(complex_t a, const eval_config& cfg = {})
{
    if (!is_finite(a)) throw domain_error("riemann_zeta: argument not finite");
    if (a == complex_t(1.0)) throw pole_error("riemann_zeta: simple pole at 1");
    if (!(a.real() > 0))
        throw domain_error("riemann_zeta: only Re(a) > 0 is supported");

    const complex_t denom = -detail::expm1((1.0 - a) * ln2);
    const bool ratio_point = std::abs(denom) < 0.05 && std::abs(a - 1.0) > 0.5;
    if (!ratio_point && std::abs(a.imag()) <= 30) {
        try {
            auto eta = euler_accelerate(
                [a](std::size_t n) {
                    complex_t t = std::exp(-a * std::log(double(n + 1)));
                    return (n % 2 == 0) ? t : -t;
                },
                cfg);
            eval_result r = eta;
            r.value = eta.value / denom;
            r.error_estimate = eta.error_estimate / std::abs(denom);
            return finish(r, "riemann_zeta");
        } catch (const not_converged&) {
        }
    }
    return hurwitz_zeta(a, 1.0);
}

inline complex_t riemann_zeta(complex_t a) { return riemann_zeta_eval(a).value; }

struct lerch_params {
    complex_t z;
    complex_t s;
    complex_t v;

    void validate() const
    {
        if (!is_finite(z) || !is_finite(s) || !is_finite(v))
            throw domain_error("lerch_phi: non-finite parameter");
        double r = std::abs(z);
        if (r > 1.0 + 1e-14) throw domain_error("lerch_phi: |z| must be <= 1");
        if (is_nonpositive_integer(v))
            throw pole_error("lerch_phi: v must not be a non-positive integer");
        if (r >= 1.0 - 1e-14) {
            if (std::abs(z + 1.0) <= 1e-14) {
                if (!(s.real() > 0)) throw domain_error("lerch_phi: z = -1 needs Re(s) > 0");
            } else if (!(s.real() > 1)) {
                throw domain_error("lerch_phi: |z| = 1 needs Re(s) > 1");
            }
        }
    }
};

namespace detail {

inline double lerch_tail_bound(double r, complex_t s, complex_t v, std::size_t N)
{
    complex_t first = double(N + 1) + v;
    if (!(first.real() > 0) || r >= 1.0) return std::numeric_limits<double>::infinity();
    double a = std::abs(first);
    double sigma = s.real();
    double phase = std::exp(std::abs(s.imag()) * std::abs(std::arg(first)));
    double lead = std::pow(r, double(N + 1)) * std::pow(a, -sigma) * phase;
    if (lead == 0) return 0;
    double q = r;
    if (sigma < 0) q *= std::pow((a + 1.0) / a, -sigma);
    if (q >= 1.0) return std::numeric_limits<double>::infinity();
    return lead / (1.0 - q);
}

inline complex_t lerch_term(complex_t log_z, complex_t s, complex_t v, std::size_t n)
{
    complex_t e = -s * std::log(double(n) + v);
    if (n > 0) e += double(n) * log_z;
    return std::exp(e);
}

}  // namespace detail

// Hurwitz-Lerch transcendent sum_{n>=0} z^n / (n+v)^s, |z| <= 1.
inline eval_result lerch_phi(const lerch_params& p, const eval_config& cfg = {})
{
    p.validate();
    cfg.validate();
    const auto [z, s, v] = p;
    const double r = std::abs(z);

    if (z == complex_t(0.0)) {
        eval_result res;
        res.value = std::exp(-s * std::log(v));
        res.effort = 1;
        res.tag = method::closed_form;
        return finish(res, "lerch_phi");
    }
    if (std::abs(z - 1.0) <= 1e-14) return hurwitz_zeta(s, v);

    const complex_t log_z = std::log(z);
    auto term = [&](std::size_t n) { return detail::lerch_term(log_z, s, v, n); };

    if (-std::log(r) >= cfg.series_threshold || (z.real() >= 0 && !(s.real() > 0))) {
        return sum_series(
            term, [&](std::size_t N) { return detail::lerch_tail_bound(r, s, v, N); }, cfg);
    }
    if (z.real() < 0) {
        return euler_accelerate(term, cfg);
    }

    // Integral representation after peeling terms so that Re(v + m) >= 1/2:
    //   Phi(z,s,w) = 1/Gamma(s) int_0^inf t^{s-1} e^{-w t} / (1 - z e^{-t}) dt.
    std::size_t m = 0;
    compensated_sum head;
    while ((double(m) + v).real() < 0.5) head.add(term(m++));
    const complex_t w = double(m) + v;
    const complex_t log_gamma_s = log_gamma(s);
    auto integrand = [&](double t) -> complex_t {
        complex_t num = std::exp((s - 1.0) * std::log(t) - w * t - log_gamma_s);
        return num / (-detail::expm1(log_z - t));
    };
    auto q = integrate_semi_infinite(integrand, w.real(), cfg);
    eval_result res = q;
    complex_t zm = m == 0 ? complex_t(1.0) : std::exp(double(m) * log_z);
    res.value = head.value() + zm * q.value;
    res.error_estimate = std::abs(zm) * q.error_estimate + 4 * eps * head.magnitude();
    res.effort = q.effort + m;
    return finish(res, "lerch_phi");
}

}  // namespace gammazeta

#endif  // GAMMAZETA_SPECIAL_HPP
