#pragma once

// Command-line front end: parse a request, compute the rule at the requested
// precision and print it as CSV or JSON.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaussq/barycentric.hpp"
#include "gaussq/hermite.hpp"
#include "gaussq/laguerre.hpp"
#include "gaussq/precision.hpp"
#include "gaussq/serialize.hpp"

namespace gaussq::cli {

enum class Format { csv, json };

struct CliRequest {
    Family family = Family::hermite;
    int n = 0;
    std::string alpha = "0";
    bool alpha_given = false;
    int digits = 16;
    Format format = Format::csv;
    double threshold = 0.0;
    bool normalized = true;
    bool barycentric = false;
    bool stats = false;
};

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_usage = 2;

/// Parses argv into `req`. Returns an exit code when the program should stop
/// (help printed or invalid arguments), nothing when `req` is ready.
inline std::optional<int> parse(int argc, const char* const* argv, CliRequest& req,
                                std::ostream& out, std::ostream& err) {
    CLI::App app{"Gauss-Hermite, Gauss-Laguerre and Radau-Laguerre quadrature rules"};
    app.name("gaussq");
    std::string family;
    std::string format = "csv";
    app.add_option("family", family, "hermite | laguerre | radau-laguerre")
        ->required()
        ->check(CLI::IsMember({"hermite", "laguerre", "radau-laguerre"}));
    app.add_option("--n", req.n, "number of nodes (>= 1)")->required();
    auto* alpha = app.add_option("--alpha", req.alpha, "Laguerre parameter, alpha > -1");
    app.add_option("--digits", req.digits, "decimal digits of the computation and output (>= 8)");
    app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threshold", req.threshold, "drop nodes whose weight is below this value");
    app.add_flag("--normalized,!--no-normalized", req.normalized,
                 "Laguerre weights summing to one (default) or to Gamma(alpha+1)");
    app.add_flag("--barycentric", req.barycentric, "add barycentric interpolation weights");
    app.add_flag("--stats", req.stats, "report mean iterations and Taylor terms per node");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "gaussq: " << e.what() << "\n";
        return exit_usage;
    }

    req.family = family_from_string(family);
    req.format = format == "json" ? Format::json : Format::csv;
    req.alpha_given = alpha->count() > 0;

    auto fail = [&](const std::string& msg) {
        err << "gaussq: " << msg << "\n";
        return std::optional<int>(exit_usage);
    };
    if (req.n < 1) return fail("--n must be at least 1");
    if (req.digits < 8) return fail("--digits must be at least 8");
    if (!(req.threshold >= 0.0)) return fail("--threshold must be non-negative");
    if (req.family == Family::hermite && req.alpha_given)
        return fail("--alpha applies to the Laguerre families only");
    if (req.family == Family::radau_laguerre && req.barycentric)
        return fail("--barycentric is available for hermite and laguerre rules");
    if (req.family != Family::hermite) {
        double a = 0;
        try {
            a = from_decimal<double>(req.alpha);
        } catch (const std::exception&) {
            return fail("--alpha is not a number: " + req.alpha);
        }
        if (!(a > -1.0)) return fail("--alpha must be greater than -1");
    }
    return std::nullopt;
}

namespace detail {

template <RealScalar Real>
struct Output {
    QuadratureRule<Real> rule;
    std::vector<Real> barycentric;
};

template <RealScalar Real>
Output<Real> compute(const CliRequest& req) {
    Output<Real> o;
    const Real alpha = from_decimal<Real>(req.alpha);
    switch (req.family) {
        case Family::hermite: {
            HermiteOptions<Real> opt;
            opt.digits = req.digits;
            o.rule = hermite_rule<Real>(req.n, opt);
            break;
        }
        case Family::laguerre: {
            LaguerreOptions<Real> opt;
            opt.digits = req.digits;
            o.rule = laguerre_rule<Real>(req.n, alpha, opt);
            break;
        }
        case Family::radau_laguerre: {
            LaguerreOptions<Real> opt;
            opt.digits = req.digits;
            o.rule = radau_laguerre_rule<Real>(req.n, alpha, opt);
            break;
        }
    }
    if (req.barycentric) {
        o.barycentric = barycentric_weights(o.rule);
        Real big = Real(0);
        for (const auto& v : o.barycentric) big = std::max(big, num::abs(v));
        if (big > Real(0))
            for (auto& v : o.barycentric) v /= big;
    }
    if (req.family != Family::hermite && !req.normalized) {
        if (!o.rule.mu0)
            throw invalid_argument("Gamma(alpha+1) is not representable; use --normalized");
        const Real g = *o.rule.mu0;
        for (auto& w : o.rule.weights) w *= g;
        for (auto& w : o.rule.scaled_weights) w *= g;
        if (o.rule.boundary_weight) *o.rule.boundary_weight *= g;
    }
    return o;
}

template <RealScalar Real>
bool keep(const Real& w, double threshold) {
    return !(w < Real(threshold));
}

template <RealScalar Real>
void emit_csv(const CliRequest& req, const Output<Real>& o, std::ostream& out) {
    const int d = req.digits;
    out << "i,x,w,omega";
    if (req.barycentric) out << ",v";
    out << "\n";
    if (o.rule.boundary_weight && keep(*o.rule.boundary_weight, req.threshold))
        out << "0," << to_decimal(Real(0), d) << "," << to_decimal(*o.rule.boundary_weight, d)
            << ",\n";
    const std::size_t base = o.rule.boundary_weight ? 1 : 0;
    for (std::size_t i = 0; i < o.rule.nodes.size(); ++i) {
        if (!keep(o.rule.weights[i], req.threshold)) continue;
        out << i + base << "," << to_decimal(o.rule.nodes[i], d) << ","
            << to_decimal(o.rule.weights[i], d) << "," << to_decimal(o.rule.scaled_weights[i], d);
        if (req.barycentric) out << "," << to_decimal(o.barycentric[i], d);
        out << "\n";
    }
    if (req.stats) {
        out << "\nmean_iterations," << o.rule.stats.mean_iterations << "\n";
        out << "mean_terms," << o.rule.stats.mean_terms << "\n";
    }
}

template <RealScalar Real>
void emit_json(const CliRequest& req, const Output<Real>& o, std::ostream& out) {
    QuadratureRule<Real> kept = o.rule;
    kept.nodes.clear();
    kept.weights.clear();
    kept.scaled_weights.clear();
    std::vector<Real> bary;
    for (std::size_t i = 0; i < o.rule.nodes.size(); ++i) {
        if (!keep(o.rule.weights[i], req.threshold)) continue;
        kept.nodes.push_back(o.rule.nodes[i]);
        kept.weights.push_back(o.rule.weights[i]);
        kept.scaled_weights.push_back(o.rule.scaled_weights[i]);
        if (req.barycentric) bary.push_back(o.barycentric[i]);
    }
    if (kept.boundary_weight && !keep(*kept.boundary_weight, req.threshold))
        kept.boundary_weight.reset();
    nlohmann::ordered_json j = to_json(kept, req.digits);
    if (req.barycentric) j["barycentric"] = decimal_array(bary, req.digits);
    out << j.dump(2) << "\n";
}

template <RealScalar Real>
void emit(const CliRequest& req, std::ostream& out) {
    const auto o = compute<Real>(req);
    if (req.format == Format::json)
        emit_json(req, o, out);
    else
        emit_csv(req, o, out);
}

}  // namespace detail

/// Computes and prints the requested rule. D <= 16 runs in double, D <= 34
/// in 113-bit binary floating point, larger D in MPFR with D decimal digits.
inline int run(const CliRequest& req, std::ostream& out, std::ostream& err) {
    try {
        if (req.digits <= 16) {
            detail::emit<double>(req, out);
        } else if (req.digits <= 34) {
            detail::emit<quad>(req, out);
        } else {
            scoped_precision prec(static_cast<unsigned>(req.digits));
            detail::emit<mp_dynamic>(req, out);
        }
        return exit_ok;
    } catch (const invalid_argument& e) {
        err << "gaussq: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "gaussq: internal error: " << e.what() << "\n";
        return exit_internal;
    }
}

}  // namespace gaussq::cli
