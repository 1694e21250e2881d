// Brute-force oracle and the identity suite.
//
// The oracle sums the gamma-zeta series term by term for a fixed number of
// terms with error-free transformations and returns an analytic bound on the
// discarded tail.  It shares no code with the library's evaluation routes and
// is the ground truth behind the golden values in the tests.
//
// The identity suite evaluates every identity relating the library's
// functions over a parameter grid and reports residuals.

#ifndef GAMMAZETA_VERIFY_HPP
#define GAMMAZETA_VERIFY_HPP

#include <gammazeta/format.hpp>
#include <gammazeta/gamma_zeta.hpp>
#include <gammazeta/numerics.hpp>
#include <gammazeta/statmech.hpp>
#include <gammazeta/transforms.hpp>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace gammazeta::verify {

//
// Oracle
//

enum class oracle_mode { direct, alternating };

struct oracle_result {
    complex_t value;
    double tail_bound;
};

namespace detail {

// Knuth's TwoSum: s + e == a + b exactly.
inline void two_sum(double a, double b, double& s, double& e)
{
    s = a + b;
    double bb = s - a;
    e = (a - (s - bb)) + (b - bb);
}

// Cascaded summation (Ogita, Rump and Oishi, Sum2).
class exact_accumulator {
public:
    void add(double x)
    {
        double e;
        two_sum(s_, x, s_, e);
        err_ += e;
    }
    double value() const { return s_ + err_; }

private:
    double s_ = 0, err_ = 0;
};

}  // namespace detail

// Sum of exactly n_terms terms of e^{-(nu+1)x} sum (+/-1)^n e^{-nx}/(n+nu+1)^a,
// plus a bound on the omitted tail.  Requires nu > -1.
inline oracle_result oracle_phi(double nu, complex_t alpha, complex_t x, std::size_t n_terms,
                                oracle_mode mode)
{
    if (n_terms < 1000) throw domain_error("oracle_phi: n_terms must be >= 1000");
    if (!(nu > -1)) throw domain_error("oracle_phi: nu must be > -1");
    const double sigma = alpha.real(), tau = alpha.imag();
    const double xr = x.real(), xi = x.imag();
    if (xr < 0 || (xr == 0 && xi != 0)) throw domain_error("oracle_phi: need Re(x) > 0 or x = 0");
    if (xr == 0 && mode == oracle_mode::direct && !(sigma > 1))
        throw domain_error("oracle_phi: x = 0 direct sum needs Re(alpha) > 1");
    if (xr == 0 && mode == oracle_mode::alternating && !(sigma > 0))
        throw domain_error("oracle_phi: x = 0 alternating sum needs Re(alpha) > 0");

    const double c = nu + 1.0;
    detail::exact_accumulator re, im;
    for (std::size_t n = 0; n < n_terms; ++n) {
        const double base = double(n) + c;
        const double lb = std::log(base);
        const double magnitude = std::exp(-base * xr - sigma * lb);
        const double angle = -base * xi - tau * lb;
        const double sign = (mode == oracle_mode::alternating && (n & 1)) ? -1.0 : 1.0;
        re.add(sign * magnitude * std::cos(angle));
        im.add(sign * magnitude * std::sin(angle));
    }

    // First omitted index is N = n_terms, base b = N + c.
    const double b = double(n_terms) + c;
    double tail;
    if (xr > 0) {
        const double r = std::exp(-xr);
        if (sigma >= 0) {
            tail = std::exp(-b * xr) * std::pow(b, -sigma) / (1.0 - r);
        } else {
            const double q = r * std::pow((b + 1.0) / b, -sigma);
            tail = q < 1 ? std::exp(-b * xr) * std::pow(b, -sigma) / (1.0 - q)
                         : std::numeric_limits<double>::infinity();
        }
    } else if (mode == oracle_mode::direct) {
        // sum_{n>=N} b_n^{-sigma} <= b^{-sigma} + int_N^inf (t+c)^{-sigma} dt
        tail = std::pow(b, -sigma) + std::pow(b, 1.0 - sigma) / (sigma - 1.0);
    } else {
        // Abel summation with partial sums of (-1)^n bounded by 1:
        // tail <= int_N^inf |d/dt (t+c)^{-a}| dt = |a| b^{-sigma} / sigma.
        tail = std::abs(alpha) * std::pow(b, -sigma) / sigma;
    }
    return {complex_t(re.value(), im.value()), tail};
}

//
// Identity suite
//

enum class identity_id {
    theorem1,
    theorem2,
    eq53_corrected,
    eq53_as_printed,
    semigroup54,
    conv55,
    conv56,
    conv57,
    conv58,
    mellin_conv44,
    route_agreement,
    order_calculus,
};

inline constexpr std::array<std::pair<identity_id, std::string_view>, 12> identity_names = {{
    {identity_id::theorem1, "Theorem1"},
    {identity_id::theorem2, "Theorem2"},
    {identity_id::eq53_corrected, "Eq53Corrected"},
    {identity_id::eq53_as_printed, "Eq53AsPrinted"},
    {identity_id::semigroup54, "Semigroup54"},
    {identity_id::conv55, "Conv55"},
    {identity_id::conv56, "Conv56"},
    {identity_id::conv57, "Conv57"},
    {identity_id::conv58, "Conv58"},
    {identity_id::mellin_conv44, "MellinConv44"},
    {identity_id::route_agreement, "RouteAgreement"},
    {identity_id::order_calculus, "OrderCalculus"},
}};

inline std::string_view to_string(identity_id id)
{
    for (auto [k, name] : identity_names)
        if (k == id) return name;
    return "?";
}

inline std::optional<identity_id> parse_identity(std::string_view name)
{
    for (auto [k, n] : identity_names)
        if (n == name) return k;
    return std::nullopt;
}

struct identity_params {
    double nu = 0;
    complex_t alpha{};
    complex_t beta{};
    complex_t x{};
    int m = 1;  // derivative order for OrderCalculus

    bool operator==(const identity_params&) const = default;
};

class identity_case {
public:
    identity_case(identity_id id, identity_params params, double tolerance, bool expected_fail = false)
        : id_(id), params_(params), tolerance_(tolerance), expected_fail_(expected_fail)
    {
        if (!(tolerance > 0) || !std::isfinite(tolerance))
            throw domain_error("identity_case: tolerance must be a finite positive number");
    }

    identity_id id() const { return id_; }
    const identity_params& params() const { return params_; }
    double tolerance() const { return tolerance_; }
    bool expected_fail() const { return expected_fail_; }

private:
    identity_id id_;
    identity_params params_;
    double tolerance_;
    bool expected_fail_;
};

struct identity_report {
    identity_case which;
    double residual = std::numeric_limits<double>::infinity();
    bool passed = false;  // residual <= tolerance
    std::vector<std::size_t> effort;
    std::string error;  // non-empty when an evaluation threw

    // A case is in order when it passes, or fails while flagged expected-fail.
    bool as_expected() const { return passed != which.expected_fail(); }
};

namespace detail {

inline double relative_spread(const std::vector<complex_t>& values)
{
    double scale = 0, spread = 0;
    for (auto v : values) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            spread = std::max(spread, std::abs(values[i] - values[j]));
    return scale > 0 ? spread / scale : spread;
}

inline residual_check route_agreement(const identity_params& p, const eval_config& cfg)
{
    residual_check out;
    double worst = 0;
    const gamma_zeta_point pt{p.nu, p.alpha, p.x};
    const bool quad_ok = p.x.imag() == 0 && p.alpha.real() > 0 && p.nu > -1;
    for (kernel k : {kernel::bose, kernel::fermi}) {
        std::vector<complex_t> values;
        auto take = [&](const eval_result& r) {
            values.push_back(r.value);
            out.effort.push_back(r.effort);
        };
        if (k == kernel::bose) {
            take(phi_series(pt, cfg));
            take(phi_lerch(pt, cfg));
            if (quad_ok) take(phi_quadrature(pt, cfg));
        } else {
            take(psi_series(pt, cfg));
            take(psi_lerch(pt, cfg));
            if (quad_ok) take(psi_quadrature(pt, cfg));
        }
        worst = std::max(worst, relative_spread(values));
    }
    out.residual = worst;
    return out;
}

// |Phi_nu(a-m; x) - (-1)^m d^m/dx^m Phi_nu(a; x)| with the derivative taken by
// central differences at step h and h/2 and one Richardson step.
inline residual_check order_calculus(const identity_params& p, const eval_config& cfg, double h = 1e-3)
{
    if (p.m != 1 && p.m != 2) throw domain_error("OrderCalculus: m must be 1 or 2");
    if (p.x.imag() != 0) throw domain_error("OrderCalculus: x must be real");
    residual_check out;
    auto f = [&](double x) {
        auto r = phi({p.nu, p.alpha, x}, cfg);
        out.effort.push_back(r.effort);
        return r.value;
    };
    const double x = p.x.real();
    auto diff = [&](double step) {
        if (p.m == 1) return (f(x + step) - f(x - step)) / (2 * step);
        return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step);
    };
    complex_t d = (4.0 * diff(h / 2) - diff(h)) / 3.0;
    if (p.m == 1) d = -d;
    auto lower = phi({p.nu, p.alpha - double(p.m), p.x}, cfg);
    out.effort.push_back(lower.effort);
    out.residual = std::abs(lower.value - d);
    return out;
}

inline residual_check mellin_convolution_identity(complex_t alpha, const eval_config& cfg)
{
    real_function e([](double t) { return complex_t(std::exp(-t)); }, 0.0,
                    std::numeric_limits<double>::infinity(), 1.0);
    auto conv = mellin_convolution_function(e, e, cfg);
    auto lhs = mellin_transform(conv, alpha, cfg);
    auto m1 = mellin_transform(e, alpha, cfg);
    auto m2 = mellin_transform(e, 1.0 - alpha, cfg);
    complex_t rhs = m1.value * m2.value;
    return {std::abs(lhs.value - rhs) / std::abs(rhs), {lhs.effort, m1.effort, m2.effort}};
}

inline residual_check evaluate(const identity_case& c, const eval_config& cfg)
{
    const auto& p = c.params();
    switch (c.id()) {
    case identity_id::theorem1: {
        auto direct = psi({p.nu, p.alpha, p.x}, cfg);
        auto shifted = psi_from_phi_shift({p.nu, p.alpha, p.x}, cfg);
        return {std::abs(direct.value - shifted.value), {direct.effort, shifted.effort}};
    }
    case identity_id::theorem2: return duplication_check(p.nu, p.alpha, p.x, cfg);
    case identity_id::eq53_corrected:
        return be_fd_relation_check(p.alpha.real(), p.x.real(), exponent_variant::corrected, cfg);
    case identity_id::eq53_as_printed:
        return be_fd_relation_check(p.alpha.real(), p.x.real(), exponent_variant::as_printed, cfg);
    case identity_id::semigroup54:
        return weyl_semigroup_check(p.nu, p.alpha, p.beta, p.x.real(), cfg);
    case identity_id::conv55:
        return be_convolution_check(p.alpha.real(), p.beta.real(), p.x.real(), cfg);
    case identity_id::conv56:
        return fd_convolution_check(p.alpha.real(), p.beta.real(), p.x.real(), cfg);
    case identity_id::conv57: return be_convolution_check(1.0, p.beta.real(), p.x.real(), cfg);
    case identity_id::conv58: return fd_convolution_check(1.0, p.beta.real(), p.x.real(), cfg);
    case identity_id::mellin_conv44: return mellin_convolution_identity(p.alpha, cfg);
    case identity_id::route_agreement: return route_agreement(p, cfg);
    case identity_id::order_calculus: return order_calculus(p, cfg);
    }
    throw domain_error("identity suite: unknown identity");
}

}  // namespace detail

inline identity_report run_case(const identity_case& c, const eval_config& cfg)
{
    identity_report rep{c, std::numeric_limits<double>::infinity(), false, {}, {}};
    try {
        auto check = detail::evaluate(c, cfg);
        rep.residual = check.residual;
        rep.effort = std::move(check.effort);
        rep.passed = std::isfinite(rep.residual) && rep.residual <= c.tolerance();
    } catch (const std::exception& e) {
        rep.error = e.what();
        rep.passed = false;
    }
    return rep;
}

// One report per case, in input order.  Cases are independent and are
// evaluated on up to `threads` worker threads (0: hardware concurrency).
inline std::vector<identity_report> run_identity_suite(const std::vector<identity_case>& grid,
                                                       const eval_config& cfg = {},
                                                       unsigned threads = 0)
{
    if (grid.empty()) throw domain_error("run_identity_suite: empty grid");
    cfg.validate();
    std::vector<std::optional<identity_report>> slots(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < grid.size();)
            slots[i] = run_case(grid[i], cfg);
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(grid.size()));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    std::vector<identity_report> out;
    out.reserve(grid.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

struct suite_summary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t expected_failures = 0;
    std::size_t unexpected = 0;  // failures not flagged, or flagged cases that passed

    bool ok() const { return unexpected == 0; }
};

inline suite_summary summarize(const std::vector<identity_report>& reports)
{
    suite_summary s;
    for (const auto& r : reports) {
        ++s.total;
        if (r.passed) ++s.passed;
        if (!r.passed && r.which.expected_fail()) ++s.expected_failures;
        if (!r.as_expected()) ++s.unexpected;
    }
    return s;
}

// The shipped grid: 60 cases covering every identity.
inline std::vector<identity_case> default_grid()
{
    std::vector<identity_case> g;
    const double nus[] = {0.0, 0.5, 2.0};
    const double alphas[] = {0.5, 2.0, 3.5};
    const double xs[] = {0.1, 1.0, 5.0};

    // Shift duality and duplication on a 9-point Latin square of the
    // 27-point (nu, alpha, x) grid.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            g.emplace_back(identity_id::theorem1,
                           identity_params{nus[i], alphas[j], 0, xs[(i + j) % 3]}, 1e-9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == 2 && j == 2) continue;
            g.emplace_back(identity_id::theorem2,
                           identity_params{nus[i], alphas[j], 0, xs[(i + 2 * j) % 3]}, 1e-9);
        }
    g.emplace_back(identity_id::theorem2, identity_params{0.25, complex_t(1.5, 0.5), 0, 0.5}, 1e-9);

    for (double a : {0.5, 1.0, 2.0, 3.5})
        for (double x : {-0.25, -1.0, -3.0})
            g.emplace_back(identity_id::eq53_corrected, identity_params{0, a, 0, x}, 1e-9);
    g.emplace_back(identity_id::eq53_as_printed, identity_params{0, 1.0, 0, -1.0}, 1e-9, true);
    g.emplace_back(identity_id::eq53_as_printed, identity_params{0, 2.0, 0, -0.5}, 1e-9, true);

    const std::pair<double, double> pairs[] = {{1.0, 1.0}, {0.5, 1.5}, {2.0, 1.0}};
    for (auto [a, b] : pairs)
        for (double x : {0.5, 1.0, 2.0})
            g.emplace_back(identity_id::semigroup54, identity_params{0, a, b, x}, 1e-6);

    g.emplace_back(identity_id::conv55, identity_params{0, 2.0, 1.0, -0.5}, 1e-6);
    g.emplace_back(identity_id::conv55, identity_params{0, 0.5, 1.5, -1.0}, 1e-6);
    g.emplace_back(identity_id::conv56, identity_params{0, 2.0, 1.0, -0.5}, 1e-6);
    g.emplace_back(identity_id::conv56, identity_params{0, 0.5, 1.5, -1.0}, 1e-6);
    g.emplace_back(identity_id::conv57, identity_params{0, 1.0, 2.0, -1.0}, 1e-6);
    g.emplace_back(identity_id::conv57, identity_params{0, 1.0, 1.5, -0.25}, 1e-6);
    g.emplace_back(identity_id::conv58, identity_params{0, 1.0, 1.0, -1.0}, 1e-6);
    g.emplace_back(identity_id::conv58, identity_params{0, 1.0, 2.5, -2.0}, 1e-6);

    for (double a : {0.25, 0.5, 0.75})
        g.emplace_back(identity_id::mellin_conv44, identity_params{0, a, 0, 0}, 1e-7);

    g.emplace_back(identity_id::route_agreement, identity_params{0.0, 0.5, 0, 0.1}, 1e-8);
    g.emplace_back(identity_id::route_agreement, identity_params{0.5, 2.0, 0, 1.0}, 1e-8);
    g.emplace_back(identity_id::route_agreement, identity_params{2.0, 3.5, 0, 5.0}, 1e-8);
    g.emplace_back(identity_id::route_agreement, identity_params{0.5, complex_t(1.5, 0.5), 0, 0.7}, 1e-8);

    g.emplace_back(identity_id::order_calculus, identity_params{0.0, 1.0, 0, 1.0, 1}, 1e-5);
    g.emplace_back(identity_id::order_calculus, identity_params{0.5, 2.0, 0, 0.5, 1}, 1e-5);
    g.emplace_back(identity_id::order_calculus, identity_params{0.0, 1.0, 0, 1.0, 2}, 1e-5);
    g.emplace_back(identity_id::order_calculus, identity_params{1.0, 0.5, 0, 2.0, 2}, 1e-5);
    return g;
}

//
// JSON
//

namespace detail {

inline nlohmann::json complex_to_json(complex_t z)
{
    if (z.imag() == 0) return z.real();
    return nlohmann::json::array({z.real(), z.imag()});
}

inline complex_t complex_from_json(const nlohmann::json& j)
{
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    if (j.is_string()) {
        if (auto z = parse_complex(j.get<std::string>())) return *z;
    }
    throw domain_error("grid: cannot read complex value " + j.dump());
}

}  // namespace detail

inline nlohmann::json to_json(const identity_params& p)
{
    return {{"nu", p.nu},
            {"alpha", detail::complex_to_json(p.alpha)},
            {"beta", detail::complex_to_json(p.beta)},
            {"x", detail::complex_to_json(p.x)},
            {"m", p.m}};
}

inline nlohmann::json to_json(const identity_report& r)
{
    nlohmann::json j;
    j["identity_id"] = std::string(to_string(r.which.id()));
    j["params"] = to_json(r.which.params());
    j["residual"] = std::isfinite(r.residual) ? nlohmann::json(r.residual) : nlohmann::json(nullptr);
    j["tolerance"] = r.which.tolerance();
    j["passed"] = r.passed;
    j["expected_fail"] = r.which.expected_fail();
    j["effort"] = r.effort;
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

inline nlohmann::json to_json(const std::vector<identity_report>& reports)
{
    auto arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr;
}

// Reads a grid: an array of {identity_id, params, tolerance, expected_fail?}.
// Missing parameters take the identity_params defaults.
inline std::vector<identity_case> grid_from_json(const nlohmann::json& j)
{
    if (!j.is_array()) throw domain_error("grid: top level must be an array");
    std::vector<identity_case> out;
    for (const auto& item : j) {
        auto id = parse_identity(item.at("identity_id").get<std::string>());
        if (!id) throw domain_error("grid: unknown identity_id " + item.at("identity_id").dump());
        identity_params p;
        if (auto it = item.find("params"); it != item.end()) {
            const auto& q = *it;
            if (q.contains("nu")) p.nu = q.at("nu").get<double>();
            if (q.contains("alpha")) p.alpha = detail::complex_from_json(q.at("alpha"));
            if (q.contains("beta")) p.beta = detail::complex_from_json(q.at("beta"));
            if (q.contains("x")) p.x = detail::complex_from_json(q.at("x"));
            if (q.contains("m")) p.m = q.at("m").get<int>();
        }
        out.emplace_back(*id, p, item.at("tolerance").get<double>(),
                         item.value("expected_fail", false));
    }
    return out;
}

}  // namespace gammazeta::verify

#endif  // GAMMAZETA_VERIFY_HPP
