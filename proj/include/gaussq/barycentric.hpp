#pragma once

// Barycentric interpolation weights on the nodes of a Gauss rule.
//
// For nodes that are the zeros of p, v_i = 1 / p'(x_i) up to one common
// factor. p' is recovered from the normal-form derivative stored in the rule:
//   Hermite:  p'(x_i) ~ y'(x_i) e^{x_i^2/2}
//   Laguerre: p'(x_i) ~ y'(z_i) x_i^{-(alpha+3/2)/2} e^{x_i/2}   (z = sqrt(x))
// The Laguerre factors are taken relative to the reference node to stay in range.

#include <cstddef>
#include <vector>

#include "gaussq/errors.hpp"
#include "gaussq/rule.hpp"
#include "gaussq/scalar.hpp"

namespace gaussq {

template <RealScalar Real>
std::vector<Real> barycentric_weights(const QuadratureRule<Real>& rule) {
    const std::size_t n = rule.nodes.size();
    if (rule.derivatives.size() != n)
        throw invalid_argument("barycentric_weights: rule carries no derivative values");
    for (const auto& d : rule.derivatives)
        if (d == Real(0)) throw zero_derivative("y' vanishes at a node");

    std::vector<Real> v(n);
    switch (rule.kind.family) {
        case Family::hermite:
            for (std::size_t i = 0; i < n; ++i)
                v[i] = num::exp(-rule.nodes[i] * rule.nodes[i] / 2) / rule.derivatives[i];
            break;
        case Family::laguerre: {
            const std::size_t j = rule.reference_index.value_or(0);
            const Real xj = rule.nodes[j];
            const Real p = (rule.kind.alpha + Real(3) / 2) / 2;
            for (std::size_t i = 0; i < n; ++i) {
                const Real xi = rule.nodes[i];
                v[i] = num::exp(p * num::log(Real(xi / xj)) - (xi - xj) / 2) / rule.derivatives[i];
            }
            break;
        }
        case Family::radau_laguerre:
            throw invalid_argument("barycentric weights are defined for Gauss rules only");
    }
    return v;
}

/// Second-form barycentric interpolant through (nodes[i], values[i]) at x.
template <RealScalar Real>
Real barycentric_interpolate(const std::vector<Real>& nodes, const std::vector<Real>& v,
                             const std::vector<Real>& values, const Real& x) {
    if (nodes.size() != v.size() || nodes.size() != values.size() || nodes.empty())
        throw invalid_argument("barycentric_interpolate: size mismatch");
    Real num = Real(0), den = Real(0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Real d = x - nodes[i];
        if (d == Real(0)) return values[i];
        const Real t = v[i] / d;
        num += t * values[i];
        den += t;
    }
    return num / den;
}

}  // namespace gaussq
