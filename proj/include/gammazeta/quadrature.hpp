// Quadrature on the half line.
//
// Two rules live here.  gauss_laguerre() builds the classical n-point rule for
// the weight e^{-t}; it is exact for polynomials and is the right tool for
// smooth integrands.  integrate_semi_infinite() is the workhorse used by the
// transforms: an exp-sinh (double exponential) trapezoidal rule, which keeps
// full accuracy for integrands carrying an endpoint factor t^{a-1} with
// complex a, and for algebraic as well as exponential decay at infinity.

#ifndef GAMMAZETA_QUADRATURE_HPP
#define GAMMAZETA_QUADRATURE_HPP

#include <gammazeta/numerics.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace gammazeta {

//
// A function on (0, inf) together with its Mellin existence strip
// sigma_lo < Re(a) < sigma_hi, i.e. f = O(t^{-sigma_lo}) as t -> 0+ and
// f = O(t^{-sigma_hi}) as t -> inf.  decay_rate > 0 additionally declares
// exponential decay e^{-decay_rate t}; it only sets the quadrature scale.
//
struct real_function {
    std::function<complex_t(double)> fn;
    double sigma_lo = 0;
    double sigma_hi = std::numeric_limits<double>::infinity();
    double decay_rate = 0;

    real_function() = default;
    real_function(std::function<complex_t(double)> f, double lo, double hi, double decay = 0)
        : fn(std::move(f)), sigma_lo(lo), sigma_hi(hi), decay_rate(decay)
    {
        if (!(sigma_lo < sigma_hi))
            throw domain_error("real_function: empty Mellin strip (need sigma_lo < sigma_hi)");
        if (!(decay_rate >= 0))
            throw domain_error("real_function: decay_rate must be >= 0");
    }

    complex_t operator()(double t) const { return fn(t); }
    bool in_strip(double sigma) const noexcept { return sigma_lo < sigma && sigma < sigma_hi; }
};

struct quadrature_rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

namespace detail {

// Returns L_n(x) and L_{n-1}(x) via the three-term recurrence.
inline std::pair<long double, long double> laguerre_pair(int n, long double x)
{
    long double p0 = 1, p1 = 1 - x;
    if (n == 0) return {p0, 0};
    for (int k = 1; k < n; ++k) {
        long double p2 = ((2 * k + 1 - x) * p1 - k * p0) / (k + 1);
        p0 = p1;
        p1 = p2;
    }
    return {p1, p0};
}

}  // namespace detail

// Gauss-Laguerre rule for  int_0^inf e^{-t} g(t) dt.  Nodes come from the
// eigenvalues of the Jacobi matrix and are then polished by Newton's method
// in extended precision; weights use x / ((n+1) L_{n+1}(x))^2, which keeps
// full relative accuracy even for the exponentially small outer weights.
inline quadrature_rule gauss_laguerre(int n)
{
    if (n < 1 || n > 256)
        throw unsupported("gauss_laguerre: n must be in [1, 256]");

    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(n - 1, 1));
    for (int i = 0; i < n; ++i) diag[i] = 2.0 * i + 1.0;
    for (int i = 0; i + 1 < n; ++i) sub[i] = i + 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::EigenvaluesOnly);

    quadrature_rule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        long double x = solver.eigenvalues()[i];
        for (int it = 0; it < 100; ++it) {
            auto [ln, lnm1] = detail::laguerre_pair(n, x);
            long double deriv = n * (ln - lnm1) / x;
            long double dx = ln / deriv;
            x -= dx;
            if (std::abs(dx) <= 4 * std::numeric_limits<long double>::epsilon() * x) break;
        }
        auto [lnp1, ln] = detail::laguerre_pair(n + 1, x);
        (void)ln;
        long double w = x / ((n + 1.0L) * (n + 1.0L) * lnp1 * lnp1);
        rule.nodes[i] = static_cast<double>(x);
        rule.weights[i] = static_cast<double>(w);
    }
    return rule;
}

// Applies an n-point Gauss-Laguerre rule to int_0^inf f(t) dt, peeling the
// weight as f(t) = e^{-t} [f(t) e^{t}].
inline complex_t laguerre_integrate(const std::function<complex_t(double)>& f, int n)
{
    auto rule = gauss_laguerre(n);
    compensated_sum acc;
    for (int i = 0; i < n; ++i) {
        double x = rule.nodes[i];
        if (rule.weights[i] == 0) continue;
        acc.add(rule.weights[i] * std::exp(x) * f(x));
    }
    return acc.value();
}

namespace detail {

// exp-sinh substitution t = exp(pi/2 sinh u); returns f(t) dt/du.
struct exp_sinh_map {
    const std::function<complex_t(double)>& f;
    double scale;

    complex_t operator()(double u) const
    {
        double e = 0.5 * pi * std::sinh(u);
        double t = scale * std::exp(e);
        double jac = t * 0.5 * pi * std::cosh(u);
        if (t == 0 || jac == 0) return 0;
        return f(t) * jac;
    }
};

}  // namespace detail

// int_0^inf f(t) dt.  weight_exponent > 0 declares that f(t) e^{w t} stays
// bounded and rescales t so the decay happens on a unit scale.
//
// Trapezoidal sums at step h = 1/2, 1/4, ... over the exp-sinh variable; the
// error estimate is the change between the last two levels (the n-node versus
// n/2-node result).
inline eval_result integrate_semi_infinite(const std::function<complex_t(double)>& f,
                                           double weight_exponent, const eval_config& cfg)
{
    cfg.validate();
    if (!(weight_exponent >= 0))
        throw domain_error("integrate_semi_infinite: weight_exponent must be >= 0");

    const double scale = weight_exponent > 0 ? 1.0 / weight_exponent : 1.0;
    detail::exp_sinh_map g{f, scale};

    // Abscissae outside [1e-300, 1e300] (relative to scale) are never used.
    const double u_limit = std::asinh(2.0 * 690.0 / pi);
    const double h0 = 0.5;
    std::size_t evals = 0;

    complex_t centre = g(0.0);
    ++evals;
    if (!is_finite(centre))
        throw domain_error("integrate_semi_infinite: integrand not finite at t = scale");

    compensated_sum sum;
    sum.add(centre);
    double peak = std::abs(centre);

    // Walk outward at the coarse step until the integrand is negligible.
    auto walk = [&](int dir) {
        int quiet = 0;
        for (int k = 1;; ++k) {
            double u = dir * k * h0;
            if (std::abs(u) > u_limit) return k - 1;
            complex_t v = g(u);
            ++evals;
            if (!is_finite(v)) {
                if (quiet > 0) return k - 1;
                throw not_converged("integrate_semi_infinite: integrand not finite in the tail");
            }
            sum.add(v);
            peak = std::max(peak, std::abs(v));
            quiet = std::abs(v) <= 1e-20 * peak ? quiet + 1 : 0;
            if (quiet >= 3) return k;
        }
    };
    const int k_hi = walk(+1);
    const int k_lo = walk(-1);
    const double u_hi = k_hi * h0, u_lo = -k_lo * h0;

    double h = h0;
    complex_t previous = h * sum.value();
    double l1 = h * sum.magnitude();
    double estimate = std::numeric_limits<double>::infinity();

    for (int level = 1;; ++level) {
        if (evals * 2 > cfg.quad_nodes) break;
        h *= 0.5;
        for (double u = u_lo + h; u < u_hi; u += 2 * h) {
            complex_t v = g(u);
            ++evals;
            if (!is_finite(v))
                throw not_converged("integrate_semi_infinite: integrand not finite");
            sum.add(v);
        }
        complex_t current = h * sum.value();
        l1 = h * sum.magnitude();
        estimate = std::abs(current - previous);
        previous = current;
        if (level >= 2 && estimate <= std::max(cfg.abs_tol, cfg.quad_rel_tol * l1)) {
            eval_result r;
            r.value = current;
            r.error_estimate = estimate + 16 * eps * l1;
            r.effort = evals;
            r.tag = method::quadrature;
            return finish(r, "integrate_semi_infinite");
        }
    }
    throw not_converged("integrate_semi_infinite: refinement disagreement " +
                        std::to_string(estimate) + " above tolerance at node cap");
}

// int_a^b f(t) dt on a finite interval, mapped onto the half line by
// t = a + (b - a) s / (1 + s).  Endpoint singularities at either end become
// endpoint behaviour at s = 0 or algebraic decay at s = inf.
inline eval_result integrate_finite(const std::function<complex_t(double)>& f, double a,
                                    double b, const eval_config& cfg)
{
    if (!(b > a)) throw domain_error("integrate_finite: need a < b");
    const double len = b - a;
    auto mapped = [&](double s) -> complex_t {
        double q = 1.0 / (1.0 + s);
        double t = a + len * s * q;
        if (t >= b) return 0;
        return f(t) * (len * q * q);
    };
    return integrate_semi_infinite(mapped, 0.0, cfg);
}

}  // namespace gammazeta

#endif  // GAMMAZETA_QUADRATURE_HPP
