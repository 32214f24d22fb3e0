#pragma once

// Gauss-Hermite rules, weight e^{-x^2} on the real line.
//
// The normal-form function y = lambda e^{-x^2/2} H_n(x) satisfies
// y'' + (2n + 1 - x^2) y = 0. Zeros are swept from x = 0 outwards with T_{-1};
// y is carried between iterates by local Taylor series whose coefficients
// follow from differentiating the ODE. The initial values at 0 are exact,
// lambda is fixed at the end through a moment of the weight function.

#include <cstddef>
#include <optional>
#include <vector>

#include "gaussq/errors.hpp"
#include "gaussq/fixed_point.hpp"
#include "gaussq/rule.hpp"
#include "gaussq/scalar.hpp"
#include "gaussq/taylor.hpp"

namespace gaussq {

/// A(x) = 2n + 1 - x^2, decreasing on [0, inf).
template <RealScalar Real>
CoefficientModel<Real> hermite_coefficient(int n) {
    const Real c = Real(2 * n + 1);
    CoefficientModel<Real> m;
    m.value = [c](const Real& x) { return Real(c - x * x); };
    m.derivative = [](const Real& x) { return Real(-2 * x); };
    m.partition = {{Real(0), num::infinity<Real>(), Monotonicity::decreasing}};
    m.extremum = Real(0);
    return m;
}

/// Raw derivatives y^{(0..count-1)}(x) from
/// y^{(k+2)} = -(2n+1-x^2) y^{(k)} + 2kx y^{(k-1)} + k(k-1) y^{(k-2)}.
template <RealScalar Real>
std::vector<Real> hermite_derivatives(int n, const Real& x, const Real& y, const Real& yp,
                                      int count) {
    std::vector<Real> d(static_cast<std::size_t>(std::max(count, 2)));
    d[0] = y;
    d[1] = yp;
    const Real a = Real(2 * n + 1) - x * x;
    for (int k = 0; k + 2 < count; ++k) {
        Real v = -a * d[k];
        if (k >= 1) v += Real(2 * k) * x * d[k - 1];
        if (k >= 2) v += Real(k * (k - 1)) * d[k - 2];
        d[k + 2] = v;
    }
    d.resize(static_cast<std::size_t>(count));
    return d;
}

/// Local Taylor evaluator of y = lambda e^{-x^2/2} H_n(x).
///
/// Keeps the current center and (y, y') there. The scaled coefficients
/// c_k = y^{(k)}(x) h^k / k! obey
///   c_{k+2} = (-A(x) h^2 c_k + 2x h^3 c_{k-1} + h^4 c_{k-2}) / ((k+1)(k+2)),
/// so no factorials or large derivatives are formed.
template <RealScalar Real>
class HermiteTaylor {
public:
    HermiteTaylor(int n, const Real& center, const Real& y, const Real& yp,
                  TaylorLimits<Real> limits,
                  StepOrdering ordering = StepOrdering::difference_of_iterates)
        : n_(n), center_(center), y_(y), yp_(yp), limits_(std::move(limits)),
          ordering_(ordering) {}

    int degree() const { return n_; }
    const Real& point() const { return center_; }
    const Real& value() const { return y_; }
    const Real& derivative() const { return yp_; }
    Real ratio() const {
        if (yp_ == Real(0))
            return y_ > Real(0) ? num::infinity<Real>() : -num::infinity<Real>();
        return y_ / yp_;
    }
    const TaylorLimits<Real>& limits() const { return limits_; }

    /// Moves the center to `target`. `raw_step` is only read under
    /// StepOrdering::raw_increment. Returns the number of series terms used.
    long advance(const Real& target, const Real& raw_step) {
        const Real h = ordering_ == StepOrdering::difference_of_iterates ? Real(target - center_)
                                                                         : raw_step;
        return advance_by(target, h, limits_.max_splits);
    }

    long advance(const Real& target) { return advance(target, Real(target - center_)); }

private:
    long advance_by(const Real& target, const Real& h, int splits_left) {
        if (h == Real(0)) {
            center_ = target;
            return 1;
        }
        Real y, yp;
        const int terms = sum_series(h, y, yp);
        if (terms > 0) {
            center_ = target;
            y_ = y;
            yp_ = yp;
            return terms;
        }
        if (splits_left == 0)
            throw term_limit_exceeded("Hermite Taylor series did not converge within " +
                                      std::to_string(limits_.max_terms) + " terms");
        const Real mid = center_ + h / 2;
        const long first = advance_by(mid, Real(mid - center_), splits_left - 1);
        return first + advance_by(target, Real(target - center_), splits_left - 1);
    }

    // Returns the number of terms, or 0 if the series did not converge.
    int sum_series(const Real& h, Real& y_out, Real& yp_out) const {
        const Real& x = center_;
        const Real h2 = h * h;
        const Real p2 = -(Real(2 * n_ + 1) - x * x) * h2;
        const Real p3 = 2 * x * h2 * h;
        const Real p4 = h2 * h2;

        // c3 = c_{k-3}, c2 = c_{k-2}, c1 = c_{k-1}, c0 = c_k
        Real c3 = Real(0), c2 = Real(0), c1 = y_, c0 = yp_ * h;
        Real sy = c1 + c0;
        Real shyp = c0;  // sum of k c_k, equals h y'(x + h)
        for (int k = 1;; ++k) {
            const Real next = (p2 * c1 + p3 * c2 + p4 * c3) / Real(k * (k + 1));
            c3 = c2;
            c2 = c1;
            c1 = c0;
            c0 = next;
            const int terms = k + 2;
            sy += c0;
            shyp += Real(k + 1) * c0;
            if (terms >= limits_.min_terms) {
                const Real scale = num::abs(sy) + num::abs(shyp);
                const Real last = Real(k + 1) * num::abs(c0) + Real(k) * num::abs(c1);
                if (!(last > limits_.tol * scale)) {
                    y_out = sy;
                    yp_out = shyp / h;
                    return terms;
                }
            }
            if (terms >= limits_.max_terms) return 0;
        }
    }

    int n_;
    Real center_;
    Real y_;
    Real yp_;
    TaylorLimits<Real> limits_;
    StepOrdering ordering_;
};

/// Evaluator at x = 0 with exact values: (1, 0) for even n, (0, 1) for odd n.
template <RealScalar Real>
HermiteTaylor<Real> hermite_initial_state(
    int n, std::optional<TaylorLimits<Real>> limits = std::nullopt,
    StepOrdering ordering = StepOrdering::difference_of_iterates) {
    if (n < 1) throw invalid_argument("Hermite degree must be >= 1");
    const bool odd = n % 2 == 1;
    return HermiteTaylor<Real>(n, Real(0), Real(odd ? 0 : 1), Real(odd ? 1 : 0),
                               limits ? *limits : TaylorLimits<Real>::for_digits(digits<Real>()),
                               ordering);
}

template <RealScalar Real>
struct TaylorEvaluation {
    Real y;
    Real yp;
    long terms;
};

/// Evaluates (y, y') at `target` from `state` and re-centers `state` there.
template <RealScalar Real>
TaylorEvaluation<Real> hermite_taylor_eval(HermiteTaylor<Real>& state, const Real& target) {
    const long terms = state.advance(target);
    return {state.value(), state.derivative(), terms};
}

enum class HermiteNormalization { second_moment, zeroth_moment };

template <RealScalar Real>
struct HermiteOptions {
    /// Target digits; defaults to the working precision.
    std::optional<int> digits;
    HermiteNormalization normalization = HermiteNormalization::second_moment;
    StepOrdering ordering = StepOrdering::difference_of_iterates;
    bool trace = false;
};

/// Positive zeros of H_n in increasing order with y' there.
template <RealScalar Real>
SweepResult<Real> hermite_nodes(int n, const StopRule<Real>& stop,
                                const HermiteOptions<Real>& options = {}) {
    if (n < 1) throw invalid_argument("Hermite degree must be >= 1");
    auto ev = hermite_initial_state<Real>(n, TaylorLimits<Real>::for_digits(stop.digits),
                                          options.ordering);
    SweepLimits<Real> limits;
    limits.max_nodes = n / 2;
    return sweep(ev, hermite_coefficient<Real>(n), SweepDirection::forward, n % 2 == 1, limits,
                 stop, SweepOptions{options.trace});
}

template <RealScalar Real>
struct HermiteWeights {
    std::vector<Real> weights;
    std::vector<Real> scaled;
};

/// Weights for the full symmetric rule in ascending node order.
///
/// `positive` and `derivatives` are the positive zeros and y' there, all in
/// the single sweep normalization with y'(0) = 1 for odd n.
template <RealScalar Real>
HermiteWeights<Real> hermite_weights(int n, const std::vector<Real>& positive,
                                     const std::vector<Real>& derivatives,
                                     HermiteNormalization norm = HermiteNormalization::second_moment) {
    if (positive.size() != derivatives.size() || static_cast<int>(positive.size()) != n / 2)
        throw count_mismatch("hermite_weights: expected n/2 positive nodes");
    const bool odd = n % 2 == 1;
    const std::size_t m = positive.size();

    std::vector<Real> omega_bar(m), w_bar(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (derivatives[i] == Real(0)) throw zero_derivative("y' vanishes at a Hermite node");
        omega_bar[i] = Real(1) / (derivatives[i] * derivatives[i]);
        w_bar[i] = omega_bar[i] * num::exp(-positive[i] * positive[i]);
    }

    const Real sqrt_pi = num::sqrt(num::pi<Real>());
    Real c;
    if (norm == HermiteNormalization::second_moment && m > 0) {
        // Summed from the outermost node inwards so small terms come first.
        Real mu = Real(0);
        for (std::size_t i = m; i-- > 0;) mu += w_bar[i] * positive[i] * positive[i];
        c = 2 * mu / (sqrt_pi / 2);
    } else {
        Real mu = Real(0);
        for (std::size_t i = m; i-- > 0;) mu += w_bar[i];
        mu *= 2;
        if (odd) mu += Real(1);
        c = mu / sqrt_pi;
    }

    HermiteWeights<Real> out;
    const std::size_t total = static_cast<std::size_t>(n);
    out.weights.resize(total);
    out.scaled.resize(total);
    for (std::size_t i = 0; i < m; ++i) {
        const Real w = w_bar[i] / c;
        const Real s = omega_bar[i] / c;
        out.weights[total - m + i] = w;
        out.scaled[total - m + i] = s;
        out.weights[m - 1 - i] = w;
        out.scaled[m - 1 - i] = s;
    }
    if (odd) {
        out.weights[m] = Real(1) / c;
        out.scaled[m] = Real(1) / c;
    }
    return out;
}

/// The n-point Gauss-Hermite rule.
template <RealScalar Real>
QuadratureRule<Real> hermite_rule(int n, const HermiteOptions<Real>& options = {}) {
    if (n < 1) throw invalid_argument("Hermite degree must be >= 1");
    const int d = options.digits ? *options.digits : digits<Real>();
    const auto stop = StopRule<Real>::for_digits(d);
    const auto sw = hermite_nodes<Real>(n, stop, options);
    if (static_cast<int>(sw.nodes.size()) != n / 2)
        throw count_mismatch("Hermite sweep produced the wrong number of nodes");

    std::vector<Real> positive, dpos;
    positive.reserve(sw.nodes.size());
    dpos.reserve(sw.nodes.size());
    for (const auto& node : sw.nodes) {
        positive.push_back(node.point);
        dpos.push_back(node.derivative);
    }
    // n = 1 has no positive node to carry the second moment.
    const auto norm = n == 1 ? HermiteNormalization::zeroth_moment : options.normalization;
    auto w = hermite_weights<Real>(n, positive, dpos, norm);

    QuadratureRule<Real> rule;
    rule.kind = QuadratureKind<Real>::hermite();
    rule.n = n;
    const std::size_t m = positive.size();
    const std::size_t total = static_cast<std::size_t>(n);
    rule.nodes.resize(total);
    rule.derivatives.resize(total);
    // y(-x) = (-1)^n y(x), so y'(-x) = (-1)^{n+1} y'(x).
    const Real mirror = Real(n % 2 == 0 ? -1 : 1);
    for (std::size_t i = 0; i < m; ++i) {
        rule.nodes[total - m + i] = positive[i];
        rule.nodes[m - 1 - i] = -positive[i];
        rule.derivatives[total - m + i] = dpos[i];
        rule.derivatives[m - 1 - i] = mirror * dpos[i];
    }
    if (n % 2 == 1) {
        rule.nodes[m] = Real(0);
        rule.derivatives[m] = Real(1);
    }
    rule.weights = std::move(w.weights);
    rule.scaled_weights = std::move(w.scaled);
    rule.mu0 = num::sqrt(num::pi<Real>());
    for (const auto& node : sw.nodes) rule.stats.record(node.iterations, node.terms);
    rule.stats.extra_iterations = sw.extra_iterations;
    rule.stats.extra_terms = sw.extra_terms;
    rule.stats.finalize();
    return rule;
}

}  // namespace gaussq
