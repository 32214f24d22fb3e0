#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gaussq/errors.hpp"
#include "gaussq/scalar.hpp"

namespace gaussq {

enum class Family { hermite, laguerre, radau_laguerre };

inline std::string to_string(Family f) {
    switch (f) {
        case Family::hermite: return "hermite";
        case Family::laguerre: return "laguerre";
        case Family::radau_laguerre: return "radau-laguerre";
    }
    return "unknown";
}

inline Family family_from_string(const std::string& s) {
    if (s == "hermite") return Family::hermite;
    if (s == "laguerre") return Family::laguerre;
    if (s == "radau-laguerre") return Family::radau_laguerre;
    throw invalid_argument("unknown quadrature family: " + s);
}

/// Weight function of a rule: e^{-x^2} on R, or x^alpha e^{-x} on (0, inf).
template <RealScalar Real>
struct QuadratureKind {
    Family family = Family::hermite;
    Real alpha = Real(0);

    static QuadratureKind hermite() { return {Family::hermite, Real(0)}; }
    static QuadratureKind laguerre(const Real& a) { return checked({Family::laguerre, a}); }
    static QuadratureKind radau_laguerre(const Real& a) {
        return checked({Family::radau_laguerre, a});
    }

    bool has_alpha() const { return family != Family::hermite; }

private:
    static QuadratureKind checked(QuadratureKind k) {
        if (!(k.alpha > Real(-1)))
            throw invalid_argument("Laguerre parameter must satisfy alpha > -1");
        return k;
    }
};

/// Per-node cost counters of a rule construction.
///
/// `iterations` counts fixed-point steps that were checked against the stop
/// rule (the free first step out of a known zero is not counted); `terms`
/// counts Taylor terms, continued-fraction quotients, or recurrence steps
/// spent on the node. Work not attributable to a node (for instance the
/// probing past the last zero) goes into the `extra_*` counters and is
/// included in the means.
struct IterationStats {
    std::vector<int> iterations;
    std::vector<long> terms;
    long extra_iterations = 0;
    long extra_terms = 0;
    double mean_iterations = 0;
    double mean_terms = 0;

    void record(int node_iterations, long node_terms) {
        iterations.push_back(node_iterations);
        terms.push_back(node_terms);
    }

    std::size_t node_count() const { return iterations.size(); }

    void finalize() {
        if (iterations.empty()) {
            mean_iterations = 0;
            mean_terms = 0;
            return;
        }
        const double count = static_cast<double>(iterations.size());
        const long it = std::accumulate(iterations.begin(), iterations.end(), 0L);
        const long tm = std::accumulate(terms.begin(), terms.end(), 0L);
        mean_iterations = static_cast<double>(it + extra_iterations) / count;
        mean_terms = static_cast<double>(tm + extra_terms) / count;
    }
};

/// A finished quadrature rule.
///
/// Hermite: `weights` are the true weights (sum sqrt(pi)), scaled weights
/// satisfy w_i = omega_i e^{-x_i^2}.
///
/// Laguerre: `weights` are normalized to sum one (true weights are
/// mu0 * weights with mu0 = Gamma(alpha+1)). Scaled weights are relative to
/// the reference node j: w_i = omega_i (x_i/x_j)^{alpha+1/2} e^{x_j-x_i}.
///
/// Radau-Laguerre: nodes are the interior nodes, `boundary_weight` is the
/// weight of f(0); all weights normalized so that they sum to one.
///
/// `derivatives` holds y'(t_i) of the normal-form solution in the canonical
/// variable t (t = x for Hermite, t = sqrt(x) for Laguerre), all sharing one
/// unknown normalization constant. Weights below the underflow threshold are
/// stored as exact zeros; their scaled weights are kept.
template <RealScalar Real>
struct QuadratureRule {
    QuadratureKind<Real> kind;
    int n = 0;
    std::vector<Real> nodes;
    std::vector<Real> weights;
    std::vector<Real> scaled_weights;
    std::vector<Real> derivatives;
    std::optional<Real> boundary_weight;
    std::optional<std::size_t> reference_index;
    /// Integral of the weight function when representable.
    std::optional<Real> mu0;
    IterationStats stats;
};

}  // namespace gaussq
