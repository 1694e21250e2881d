// Command-line front end: eval, table and verify subcommands.
//
// run_cli() holds the whole program so it can be driven from tests with
// string streams; tools/gammazeta.cpp only forwards argv to it.
//
// Exit codes:
//   0  success
//   1  malformed invocation or I/O failure
//   2  domain, pole or overflow error
//   3  evaluation did not converge (table: no point succeeded)
//   4  verify found an unexpected failure

#ifndef GAMMAZETA_CLI_HPP
#define GAMMAZETA_CLI_HPP

#include <gammazeta/format.hpp>
#include <gammazeta/gamma_zeta.hpp>
#include <gammazeta/numerics.hpp>
#include <gammazeta/special.hpp>
#include <gammazeta/statmech.hpp>
#include <gammazeta/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace gammazeta::cli {

enum exit_code : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_domain = 2,
    exit_not_converged = 3,
    exit_verify_failed = 4,
};

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using env_lookup = std::function<const char*(const char*)>;

struct sweep_spec {
    std::string name;
    double start = 0;
    double stop = 0;
    int steps = 0;

    double at(int i) const { return start + (stop - start) * double(i) / double(steps - 1); }
};

inline sweep_spec parse_sweep(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() != 4) throw usage_error("--sweep expects name:start:stop:steps, got '" + text + "'");
    sweep_spec s;
    s.name = parts[0];
    auto a = detail::parse_real(parts[1]);
    auto b = detail::parse_real(parts[2]);
    int n = 0;
    auto [ptr, ec] = std::from_chars(parts[3].data(), parts[3].data() + parts[3].size(), n);
    if (!a || !b || ec != std::errc() || ptr != parts[3].data() + parts[3].size())
        throw usage_error("--sweep: cannot read numbers in '" + text + "'");
    if (n < 2) throw usage_error("--sweep: steps must be >= 2");
    if (*a == *b) throw usage_error("--sweep: start and stop must differ");
    s.start = *a;
    s.stop = *b;
    s.steps = n;
    return s;
}

// Parameters each function reads.  Names double as flag names.
inline const std::map<std::string, std::vector<std::string>>& function_parameters()
{
    static const std::map<std::string, std::vector<std::string>> table = {
        {"gamma", {"alpha"}},
        {"zeta", {"alpha"}},
        {"lerch", {"z", "s", "v"}},
        {"phi", {"nu", "alpha", "x"}},
        {"psi", {"nu", "alpha", "x"}},
        {"be", {"q", "x"}},
        {"fd", {"q", "x"}},
        {"anyon", {"nu", "alpha", "x"}},
    };
    return table;
}

inline anyon_weights weights_named(const std::string& name)
{
    if (name == "smooth") return anyon_weights::smooth();
    if (name == "linear") return anyon_weights::linear();
    if (name == "trig") return anyon_weights::trigonometric();
    throw usage_error("--weights must be smooth, linear or trig");
}

using parameter_map = std::map<std::string, complex_t>;

namespace detail {

inline double real_parameter(const parameter_map& p, const std::string& name)
{
    complex_t v = p.at(name);
    if (v.imag() != 0) throw domain_error("parameter " + name + " must be real");
    return v.real();
}

}  // namespace detail

// Evaluates one function at one parameter set.
inline eval_result evaluate(const std::string& function, const parameter_map& p,
                            const std::string& weights, const eval_config& cfg)
{
    using detail::real_parameter;
    if (function == "gamma") {
        eval_result r;
        r.value = gammazeta::gamma(p.at("alpha"));
        r.effort = 1;
        r.tag = method::closed_form;
        return finish(r, "gamma");
    }
    if (function == "zeta") return riemann_zeta_eval(p.at("alpha"), cfg);
    if (function == "lerch") return lerch_phi({p.at("z"), p.at("s"), p.at("v")}, cfg);
    if (function == "phi") return phi({real_parameter(p, "nu"), p.at("alpha"), p.at("x")}, cfg);
    if (function == "psi") return psi({real_parameter(p, "nu"), p.at("alpha"), p.at("x")}, cfg);
    if (function == "be") return bose_einstein_integral(real_parameter(p, "q"), real_parameter(p, "x"), cfg);
    if (function == "fd") return fermi_dirac_integral(real_parameter(p, "q"), real_parameter(p, "x"), cfg);
    if (function == "anyon")
        return anyon_integral(real_parameter(p, "nu"), p.at("alpha"), p.at("x"), weights_named(weights), cfg);
    throw usage_error("unknown function '" + function + "'");
}

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline int exit_for(const std::exception& e)
{
    if (dynamic_cast<const not_converged*>(&e)) return exit_not_converged;
    return exit_domain;
}

struct request {
    std::string function;
    std::map<std::string, std::string> raw;  // flag name -> text
    std::string weights = "smooth";
    std::string method = "auto";
    std::optional<double> rel_tol;
    std::vector<std::string> sweeps;
    std::string format = "csv";
    std::string output;
    std::string grid;
    std::vector<std::string> only;
};

inline eval_config config_for(const request& req, const env_lookup& env)
{
    eval_config cfg;
    if (const char* t = env ? env("GAMMAZETA_TOL") : nullptr; t && *t) {
        auto v = gammazeta::detail::parse_real(t);
        if (!v) throw usage_error(std::string("GAMMAZETA_TOL is not a number: ") + t);
        cfg.rel_tol = *v;
    }
    if (req.rel_tol) cfg.rel_tol = *req.rel_tol;
    if (req.method == "series")
        cfg.policy = method_policy::series_only;
    else if (req.method == "quadrature")
        cfg.policy = method_policy::quadrature_only;
    else if (req.method == "auto")
        cfg.policy = method_policy::automatic;
    else
        throw usage_error("--method must be series, quadrature or auto");
    try {
        cfg.validate();
    } catch (const domain_error& e) {
        throw usage_error(e.what());
    }
    return cfg;
}

// Fixed parameters: every parameter the function needs, minus swept ones.
inline parameter_map fixed_parameters(const request& req, const std::vector<sweep_spec>& sweeps)
{
    auto it = function_parameters().find(req.function);
    if (it == function_parameters().end()) throw usage_error("--function is required (gamma, zeta, lerch, phi, psi, be, fd, anyon)");
    parameter_map p;
    for (const auto& name : it->second) {
        bool swept = false;
        for (const auto& s : sweeps) swept |= s.name == name;
        if (swept) continue;
        auto r = req.raw.find(name);
        if (r == req.raw.end()) throw usage_error("--" + name + " is required for " + req.function);
        auto v = parse_complex(r->second);
        if (!v) throw usage_error("--" + name + ": cannot parse '" + r->second + "'");
        p[name] = *v;
    }
    for (const auto& s : sweeps) {
        bool known = false;
        for (const auto& name : it->second) known |= s.name == name;
        if (!known) throw usage_error("--sweep: " + req.function + " has no parameter '" + s.name + "'");
    }
    return p;
}

class output_sink {
public:
    output_sink(const std::string& path, std::ostream& fallback) : fallback_(fallback)
    {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw usage_error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }
    void close()
    {
        if (file_.is_open()) {
            file_.close();
            if (file_.fail()) throw usage_error("write to output file failed");
        }
    }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

inline int run_eval(const request& req, const eval_config& cfg, std::ostream& out, std::ostream& err)
{
    auto p = fixed_parameters(req, {});
    try {
        auto r = evaluate(req.function, p, req.weights, cfg);
        out << format_complex(r.value) << " error_estimate=" << format_real(r.error_estimate)
            << " effort=" << r.effort << " method=" << to_string(r.tag) << "\n";
        return exit_ok;
    } catch (const usage_error&) {
        throw;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_for(e);
    }
}

inline int run_table(const request& req, const eval_config& cfg, std::ostream& out, std::ostream& err)
{
    if (req.sweeps.empty()) throw usage_error("table needs at least one --sweep");
    if (req.sweeps.size() > 2) throw usage_error("table sweeps at most 2 parameters");
    std::vector<sweep_spec> sweeps;
    for (const auto& s : req.sweeps) sweeps.push_back(parse_sweep(s));
    if (sweeps.size() == 2 && sweeps[0].name == sweeps[1].name)
        throw usage_error("--sweep: the same parameter is swept twice");
    if (req.format != "csv" && req.format != "json") throw usage_error("--format must be csv or json");
    const parameter_map fixed = fixed_parameters(req, sweeps);

    struct row {
        std::vector<double> coords;
        std::optional<eval_result> result;
        std::string error;
    };
    std::vector<row> rows;
    const int n0 = sweeps[0].steps;
    const int n1 = sweeps.size() > 1 ? sweeps[1].steps : 1;
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n1; ++j) {
            row r;
            parameter_map p = fixed;
            r.coords.push_back(sweeps[0].at(i));
            if (sweeps.size() > 1) r.coords.push_back(sweeps[1].at(j));
            for (std::size_t k = 0; k < sweeps.size(); ++k) p[sweeps[k].name] = r.coords[k];
            try {
                r.result = evaluate(req.function, p, req.weights, cfg);
            } catch (const error& e) {
                r.error = e.what();
            }
            rows.push_back(std::move(r));
        }

    output_sink sink(req.output, out);
    std::ostream& os = sink.stream();
    bool any = false;
    if (req.format == "csv") {
        for (const auto& s : sweeps) os << csv_field(s.name) << ",";
        os << "value_re,value_im,error_estimate,method,error\r\n";
        for (const auto& r : rows) {
            for (double c : r.coords) os << format_real(c) << ",";
            if (r.result) {
                any = true;
                os << format_real(r.result->value.real()) << "," << format_real(r.result->value.imag())
                   << "," << format_real(r.result->error_estimate) << "," << to_string(r.result->tag)
                   << ",";
            } else {
                os << ",,,," << csv_field(r.error);
            }
            os << "\r\n";
        }
    } else {
        auto arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json j;
            for (std::size_t k = 0; k < sweeps.size(); ++k) j[sweeps[k].name] = r.coords[k];
            if (r.result) {
                any = true;
                j["value_re"] = r.result->value.real();
                j["value_im"] = r.result->value.imag();
                j["error_estimate"] = r.result->error_estimate;
                j["method"] = std::string(to_string(r.result->tag));
                j["error"] = nullptr;
            } else {
                j["value_re"] = nullptr;
                j["value_im"] = nullptr;
                j["error_estimate"] = nullptr;
                j["method"] = nullptr;
                j["error"] = r.error;
            }
            arr.push_back(std::move(j));
        }
        os << arr.dump(2) << "\n";
    }
    sink.close();
    if (!any) {
        err << "error: no grid point could be evaluated\n";
        return exit_not_converged;
    }
    return exit_ok;
}

inline int run_verify(const request& req, const eval_config& cfg, std::ostream& out, std::ostream& err)
{
    std::vector<verify::identity_case> grid;
    if (req.grid.empty()) {
        grid = verify::default_grid();
    } else {
        std::ifstream in(req.grid);
        if (!in) throw usage_error("cannot read grid file '" + req.grid + "'");
        try {
            grid = verify::grid_from_json(nlohmann::json::parse(in));
        } catch (const nlohmann::json::exception& e) {
            throw usage_error("grid file '" + req.grid + "': " + e.what());
        } catch (const domain_error& e) {
            throw usage_error("grid file '" + req.grid + "': " + e.what());
        }
    }
    if (!req.only.empty()) {
        for (const auto& name : req.only)
            if (!verify::parse_identity(name)) throw usage_error("--only: unknown identity '" + name + "'");
        std::vector<verify::identity_case> kept;
        for (const auto& c : grid)
            for (const auto& name : req.only)
                if (verify::to_string(c.id()) == name) kept.push_back(c);
        grid = std::move(kept);
    }
    if (grid.empty()) throw usage_error("verify: no cases selected");

    auto reports = verify::run_identity_suite(grid, cfg);
    auto summary = verify::summarize(reports);
    output_sink sink(req.output, out);
    sink.stream() << verify::to_json(reports).dump(2) << "\n";
    sink.close();
    err << "verify: " << summary.total << " cases, " << summary.passed << " passed, "
        << summary.expected_failures << " expected failures, " << summary.unexpected
        << " unexpected\n";
    return summary.ok() ? exit_ok : exit_verify_failed;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   const env_lookup& env = [](const char* name) { return std::getenv(name); })
{
    request req;
    CLI::App app{"gamma-zeta function evaluator", "gammazeta"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--rel-tol", req.rel_tol, "relative tolerance (overrides GAMMAZETA_TOL)");
        sub->add_option("--method", req.method, "series, quadrature or auto")
            ->check(CLI::IsMember({"series", "quadrature", "auto"}));
        sub->add_option("--output", req.output, "write to this file instead of stdout");
    };
    auto add_function = [&](CLI::App* sub) {
        sub->add_option("--function", req.function, "gamma, zeta, lerch, phi, psi, be, fd or anyon")
            ->required()
            ->check(CLI::IsMember({"gamma", "zeta", "lerch", "phi", "psi", "be", "fd", "anyon"}));
        for (const char* name : {"nu", "alpha", "x", "q", "z", "s", "v"})
            sub->add_option_function<std::string>(
                std::string("--") + name, [&req, name](const std::string& v) { req.raw[name] = v; },
                "parameter value, a, bi or a+bi");
        sub->add_option("--weights", req.weights, "anyon weights: smooth, linear or trig")
            ->check(CLI::IsMember({"smooth", "linear", "trig"}));
        add_common(sub);
    };

    auto* eval_cmd = app.add_subcommand("eval", "evaluate one function at one point");
    add_function(eval_cmd);
    auto* table_cmd = app.add_subcommand("table", "tabulate a function over a 1-D or 2-D grid");
    add_function(table_cmd);
    table_cmd->add_option("--sweep", req.sweeps, "name:start:stop:steps (at most two)");
    table_cmd->add_option("--format", req.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    auto* verify_cmd = app.add_subcommand("verify", "run the identity suite");
    verify_cmd->add_option("--grid", req.grid, "JSON grid file (default: built-in grid)");
    verify_cmd->add_option("--only", req.only, "restrict to these identity ids");
    add_common(verify_cmd);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    try {
        const eval_config cfg = config_for(req, env);
        if (eval_cmd->parsed()) return run_eval(req, cfg, out, err);
        if (table_cmd->parsed()) return run_table(req, cfg, out, err);
        return run_verify(req, cfg, out, err);
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_for(e);
    }
}

}  // namespace gammazeta::cli

#endif  // GAMMAZETA_CLI_HPP
