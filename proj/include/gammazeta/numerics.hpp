// Core numeric types, evaluation policy and series summation.
//
// Everything in this library returns an eval_result: the value together with
// an error estimate, the number of terms or nodes consumed, and a tag naming
// the evaluation route that produced it.

#ifndef GAMMAZETA_NUMERICS_HPP
#define GAMMAZETA_NUMERICS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gammazeta {

using complex_t = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double ln2 = 0.69314718055994530941723212145817657;
inline constexpr double eps = std::numeric_limits<double>::epsilon();

//
// Error taxonomy.  domain_error and pole_error are caller mistakes,
// not_converged means the evaluation ran out of budget.
//
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class domain_error : public error {
public:
    using error::error;
};

class pole_error : public domain_error {
public:
    using domain_error::domain_error;
};

class overflow_error : public domain_error {
public:
    using domain_error::domain_error;
};

class not_converged : public error {
public:
    using error::error;
};

class unsupported : public error {
public:
    using error::error;
};

enum class method_policy { series_only, quadrature_only, automatic };

enum class method { series, accelerated_series, quadrature, closed_form };

constexpr std::string_view to_string(method m) noexcept
{
    switch (m) {
    case method::series: return "Series";
    case method::accelerated_series: return "AcceleratedSeries";
    case method::quadrature: return "Quadrature";
    case method::closed_form: return "ClosedForm";
    }
    return "?";
}

struct eval_config {
    double rel_tol = 1e-14;
    double abs_tol = 1e-300;
    std::size_t max_terms = 1'000'000;
    std::size_t quad_nodes = 16384;
    method_policy policy = method_policy::automatic;
    // Below this Re(x) the geometric factor e^{-x} converges too slowly for
    // plain summation and the Auto policy switches route.
    double series_threshold = 0.05;
    // Quadrature refinement stops when successive levels agree to this.
    double quad_rel_tol = 1e-11;

    void validate() const
    {
        if (!(rel_tol >= 8 * eps) || !std::isfinite(rel_tol))
            throw domain_error("eval_config: rel_tol must be >= 8*epsilon");
        if (!(abs_tol > 0) || !std::isfinite(abs_tol))
            throw domain_error("eval_config: abs_tol must be > 0");
        if (max_terms < 16)
            throw domain_error("eval_config: max_terms must be >= 16");
        if (quad_nodes < 4)
            throw domain_error("eval_config: quad_nodes must be >= 4");
        if (!(quad_rel_tol >= 8 * eps))
            throw domain_error("eval_config: quad_rel_tol must be >= 8*epsilon");
        if (!(series_threshold > 0))
            throw domain_error("eval_config: series_threshold must be > 0");
    }
};

struct eval_result {
    complex_t value{};
    double error_estimate = 0;
    std::size_t effort = 0;
    method tag = method::series;
};

// An identity residual together with the effort of each evaluation behind it.
struct residual_check {
    double residual = 0;
    std::vector<std::size_t> effort;
};

inline bool is_finite(complex_t z) noexcept
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline complex_t check_finite(complex_t z, const char* what)
{
    if (!is_finite(z))
        throw overflow_error(std::string(what) + ": result not representable");
    return z;
}

inline eval_result finish(eval_result r, const char* what)
{
    check_finite(r.value, what);
    if (!std::isfinite(r.error_estimate))
        r.error_estimate = std::numeric_limits<double>::max();
    r.error_estimate = std::max(r.error_estimate, 2 * eps * std::abs(r.value));
    return r;
}

inline bool is_nonpositive_integer(complex_t z) noexcept
{
    return z.imag() == 0 && z.real() <= 0 && std::floor(z.real()) == z.real();
}

//
// Neumaier's variant of Kahan summation, applied componentwise.
//
class compensated_sum {
public:
    void add(complex_t term) noexcept
    {
        add_part(re_, re_c_, term.real());
        add_part(im_, im_c_, term.imag());
        abs_ += std::abs(term);
    }
    complex_t value() const noexcept { return {re_ + re_c_, im_ + im_c_}; }
    // Sum of term magnitudes, used to bound roundoff.
    double magnitude() const noexcept { return abs_; }

private:
    static void add_part(double& s, double& c, double x) noexcept
    {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0, abs_ = 0;
};

using term_fn = std::function<complex_t(std::size_t)>;
using bound_fn = std::function<double(std::size_t)>;

// Sums term(0) + term(1) + ... and stops at the first N for which
// tail_bound(N), a bound on |sum_{n>N} term(n)|, drops below tolerance.
inline eval_result sum_series(const term_fn& term, const bound_fn& tail_bound,
                              const eval_config& cfg)
{
    cfg.validate();
    compensated_sum acc;
    for (std::size_t n = 0; n < cfg.max_terms; ++n) {
        acc.add(term(n));
        double tail = tail_bound(n);
        double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(acc.value()));
        if (tail <= tol) {
            eval_result r;
            r.value = acc.value();
            r.error_estimate = tail + 4 * eps * acc.magnitude();
            r.effort = n + 1;
            r.tag = method::series;
            return finish(r, "sum_series");
        }
    }
    throw not_converged("sum_series: tail bound above tolerance after " +
                        std::to_string(cfg.max_terms) + " terms");
}

// Euler transformation of an alternating series, in van Wijngaarden's
// averaging form: the k-th transformed term is built from running means of
// the input terms, so no explicit binomial differences are formed.  term(n)
// carries its own sign.
inline eval_result euler_accelerate(const term_fn& term, const eval_config& cfg)
{
    cfg.validate();
    std::vector<complex_t> work;
    work.reserve(64);
    compensated_sum sum;
    std::size_t used = 0;  // transformed terms folded into sum
    int quiet = 0;
    // The averaging table costs O(n) per term; a series that has not settled
    // within this many terms is not one the transform helps with.
    const std::size_t limit = std::min<std::size_t>(cfg.max_terms, 4096);
    for (std::size_t n = 0; n < limit; ++n) {
        complex_t t = term(n);
        complex_t increment;
        if (n == 0) {
            work.assign(1, t);
            used = 1;
            increment = 0.5 * t;
        } else {
            complex_t carry = work[0];
            work[0] = t;
            for (std::size_t j = 1; j < used; ++j) {
                complex_t next = work[j];
                work[j] = 0.5 * (work[j - 1] + carry);
                carry = next;
            }
            complex_t top = 0.5 * (work[used - 1] + carry);
            if (work.size() <= used)
                work.push_back(top);
            else
                work[used] = top;
            if (std::abs(top) <= std::abs(work[used - 1])) {
                increment = 0.5 * work[used];
                ++used;
            } else {
                increment = top;
            }
        }
        sum.add(increment);
        const double size = std::abs(sum.value());
        double tol = std::max(cfg.abs_tol, cfg.rel_tol * size);
        quiet = std::abs(increment) <= tol ? quiet + 1 : 0;
        // Two consecutive negligible increments; a single one can be an
        // accidental zero of the difference table.
        if (quiet >= 2 && n >= 3) {
            eval_result r;
            r.value = sum.value();
            r.error_estimate = 2 * std::abs(increment) + 8 * eps * size * double(used);
            r.effort = n + 1;
            r.tag = method::accelerated_series;
            return finish(r, "euler_accelerate");
        }
        if (!std::isfinite(size))
            throw overflow_error("euler_accelerate: partial sum overflowed");
    }
    throw not_converged("euler_accelerate: no convergence after " + std::to_string(limit) +
                        " terms");
}

}  // namespace gammazeta

#endif  // GAMMAZETA_NUMERICS_HPP
