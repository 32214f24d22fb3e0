#pragma once

// JSON form of a QuadratureRule. Numbers are decimal strings so any scalar
// type survives without loss:
//
//   {"kind": "laguerre", "n": 2, "alpha": "0",
//    "nodes": [...], "weights": [...], "scaled_weights": [...],
//    "boundary_weight": "...",            (Radau-Laguerre only)
//    "stats": {"mean_iterations": 1.5, "mean_terms": 40.0}}
//
// With the default digit count the round trip is bit-exact.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaussq/errors.hpp"
#include "gaussq/rule.hpp"
#include "gaussq/scalar.hpp"

namespace gaussq {

template <RealScalar Real>
nlohmann::ordered_json decimal_array(const std::vector<Real>& xs, int significant) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& x : xs) a.push_back(to_decimal(x, significant));
    return a;
}

template <RealScalar Real>
nlohmann::ordered_json to_json(const QuadratureRule<Real>& rule,
                               std::optional<int> significant = std::nullopt) {
    const int sig = significant ? *significant : round_trip_digits<Real>();
    nlohmann::ordered_json j;
    j["kind"] = to_string(rule.kind.family);
    j["n"] = rule.n;
    if (rule.kind.has_alpha()) j["alpha"] = to_decimal(rule.kind.alpha, sig);
    j["nodes"] = decimal_array(rule.nodes, sig);
    j["weights"] = decimal_array(rule.weights, sig);
    j["scaled_weights"] = decimal_array(rule.scaled_weights, sig);
    if (rule.boundary_weight) j["boundary_weight"] = to_decimal(*rule.boundary_weight, sig);
    j["stats"] = {{"mean_iterations", rule.stats.mean_iterations},
                  {"mean_terms", rule.stats.mean_terms}};
    return j;
}

template <RealScalar Real>
QuadratureRule<Real> rule_from_json(const nlohmann::ordered_json& j) {
    auto read_array = [&](const char* key) {
        std::vector<Real> out;
        if (!j.contains(key) || !j.at(key).is_array())
            throw invalid_argument(std::string("rule JSON lacks array '") + key + "'");
        for (const auto& e : j.at(key)) out.push_back(from_decimal<Real>(e.get<std::string>()));
        return out;
    };
    try {
        QuadratureRule<Real> r;
        const Family f = family_from_string(j.at("kind").get<std::string>());
        const Real alpha = j.contains("alpha") ? from_decimal<Real>(j.at("alpha").get<std::string>())
                                               : Real(0);
        switch (f) {
            case Family::hermite: r.kind = QuadratureKind<Real>::hermite(); break;
            case Family::laguerre: r.kind = QuadratureKind<Real>::laguerre(alpha); break;
            case Family::radau_laguerre: r.kind = QuadratureKind<Real>::radau_laguerre(alpha); break;
        }
        r.n = j.at("n").get<int>();
        r.nodes = read_array("nodes");
        r.weights = read_array("weights");
        r.scaled_weights = read_array("scaled_weights");
        if (r.weights.size() != r.nodes.size() || r.scaled_weights.size() != r.nodes.size())
            throw invalid_argument("rule JSON arrays differ in length");
        if (j.contains("boundary_weight"))
            r.boundary_weight = from_decimal<Real>(j.at("boundary_weight").get<std::string>());
        if (j.contains("stats")) {
            r.stats.mean_iterations = j.at("stats").at("mean_iterations").get<double>();
            r.stats.mean_terms = j.at("stats").at("mean_terms").get<double>();
        }
        return r;
    } catch (const nlohmann::ordered_json::exception& e) {
        throw invalid_argument(std::string("malformed rule JSON: ") + e.what());
    }
}

template <RealScalar Real>
QuadratureRule<Real> rule_from_json(const std::string& text) {
    try {
        return rule_from_json<Real>(nlohmann::ordered_json::parse(text));
    } catch (const nlohmann::ordered_json::parse_error& e) {
        throw invalid_argument(std::string("malformed rule JSON: ") + e.what());
    }
}

// A string literal would otherwise convert to both a string and a JSON value.
template <RealScalar Real>
QuadratureRule<Real> rule_from_json(const char* text) {
    return rule_from_json<Real>(std::string(text));
}

}  // namespace gaussq
