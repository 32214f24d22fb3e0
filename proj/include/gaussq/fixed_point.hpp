#pragma once

// Fourth-order fixed-point iteration for the zeros of y'' + A(t) y = 0.
//
// Between consecutive zeros of a solution the iteration
//
//     T_j(t) = t - atan_j(sqrt(A(t)) h(t)) / sqrt(A(t)),   h = y / y',
//
// with j = sign(A'(t)) converges monotonically to the nearest zero in the
// direction of decreasing A. Where A < 0 (at most one zero there) the
// hyperbolic variant t - atanh(sqrt(-A) h) / sqrt(-A) is used instead.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gaussq/errors.hpp"
#include "gaussq/scalar.hpp"

namespace gaussq {

/// Branch-corrected arctangent:
///   atan(zeta)          if j*zeta > 0
///   atan(zeta) + j*pi   if j*zeta <= 0
///   j*pi/2              if zeta = +-inf
template <RealScalar Real>
Real arctan_branch(int j, const Real& zeta) {
    if (j != 1 && j != -1) throw invalid_argument("arctan_branch: j must be +1 or -1");
    if (num::isinf(zeta)) return Real(j) * num::pi<Real>() / 2;
    const Real a = num::atan(zeta);
    if (Real(j) * zeta > Real(0)) return a;
    return a + Real(j) * num::pi<Real>();
}

/// Increment T_j(t) - t given h = y/y' (h may be +-inf when y' = 0).
template <RealScalar Real>
Real t_increment(const Real& h, const Real& a_at_t, int j) {
    if (!(a_at_t > Real(0)))
        throw non_positive_coefficient("T_j needs A(t) > 0; use the hyperbolic step");
    const Real root = num::sqrt(a_at_t);
    const Real zeta = num::isinf(h) ? h : root * h;
    return -arctan_branch(j, zeta) / root;
}

/// One application of T_j at t from the values (y, y') at t.
template <RealScalar Real>
Real t_step(const Real& t, const Real& y, const Real& yp, const Real& a_at_t, int j) {
    if (y == Real(0) && yp == Real(0)) throw degenerate_state("y and y' both vanish");
    Real h;
    if (yp == Real(0))
        h = (y > Real(0)) ? num::infinity<Real>() : -num::infinity<Real>();
    else
        h = y / yp;
    return t + t_increment(h, a_at_t, j);
}

/// Increment of the hyperbolic step used where A(t) < 0.
template <RealScalar Real>
Real t_increment_negative(const Real& h, const Real& a_at_t) {
    if (!(a_at_t < Real(0)))
        throw invalid_argument("hyperbolic step needs A(t) < 0");
    const Real root = num::sqrt(-a_at_t);
    if (num::isinf(h)) throw atanh_domain("atanh argument is infinite");
    const Real arg = root * h;
    if (!(num::abs(arg) < Real(1))) throw atanh_domain("atanh argument outside (-1, 1)");
    return -num::atanh(arg) / root;
}

template <RealScalar Real>
Real t_step_negative(const Real& t, const Real& y, const Real& yp, const Real& a_at_t) {
    if (y == Real(0) && yp == Real(0)) throw degenerate_state("y and y' both vanish");
    if (yp == Real(0)) throw atanh_domain("y' vanishes");
    return t + t_increment_negative(Real(y / yp), a_at_t);
}

/// Stopping rule: two consecutive iterates closer than
/// tau = 6^{1/4} 10^{-D/4} end the iteration for a node.
template <RealScalar Real>
struct StopRule {
    int digits = 16;
    Real tau = Real(0);
    int max_iterations = 40;
    /// Take one more step after the criterion fires.
    bool confirm = false;

    static StopRule for_digits(int d, bool confirm_step = false) {
        if (d < 1) throw invalid_argument("StopRule: digits must be positive");
        StopRule s;
        s.digits = d;
        s.tau = num::exp(num::log(Real(6)) / 4 - Real(d) / 4 * num::log(Real(10)));
        s.confirm = confirm_step;
        return s;
    }

    static StopRule for_working_precision(bool confirm_step = false) {
        return for_digits(gaussq::digits<Real>(), confirm_step);
    }
};

enum class Monotonicity { decreasing, increasing };

template <RealScalar Real>
struct MonotoneInterval {
    Real lo;
    Real hi;
    Monotonicity direction;
};

/// Normal-form coefficient A(t) with its monotonicity partition.
template <RealScalar Real>
struct CoefficientModel {
    std::function<Real(const Real&)> value;
    std::function<Real(const Real&)> derivative;
    std::vector<MonotoneInterval<Real>> partition;
    std::optional<Real> extremum;

    Real operator()(const Real& t) const { return value(t); }

    /// Direction of A just right of t (interval [lo, hi) containing t).
    Monotonicity direction_at(const Real& t) const {
        for (const auto& iv : partition)
            if (!(t < iv.lo) && t < iv.hi) return iv.direction;
        throw bound_violation("point outside the coefficient partition");
    }

    /// Direction of A just left of t (interval (lo, hi] containing t).
    Monotonicity direction_left_of(const Real& t) const {
        for (const auto& iv : partition)
            if (iv.lo < t && !(iv.hi < t)) return iv.direction;
        throw bound_violation("point outside the coefficient partition");
    }
};

/// Moves of a sweep: forward = increasing t (A decreasing, T_{-1}),
/// backward = decreasing t (A increasing, T_{+1}).
enum class SweepDirection { forward = 1, backward = -1 };

/// Stopping conditions of a sweep beyond the StopRule of each node.
template <RealScalar Real>
struct SweepLimits {
    int max_nodes = 0;
    /// Forward sweeps end when an iterate passes this point (no zeros beyond).
    std::optional<Real> upper_bound;
    /// Relative slack on upper_bound so a zero sitting on the bound is kept.
    Real bound_slack = Real(1) / 1000000;
    /// Target of the one-shot bisection when the hyperbolic step leaves its
    /// domain (backward sweeps).
    std::optional<Real> lower_bound;
};

template <RealScalar Real>
struct SweepNode {
    Real point;
    Real derivative;
    /// Residual y/y' at the accepted point.
    Real ratio;
    int iterations = 0;
    long terms = 0;
    /// All iterates produced for this node (only with SweepOptions::trace).
    std::vector<Real> iterates;
};

template <RealScalar Real>
struct SweepResult {
    std::vector<SweepNode<Real>> nodes;
    long extra_iterations = 0;
    long extra_terms = 0;
    bool reached_bound = false;
};

struct SweepOptions {
    bool trace = false;
};

/// Function evaluator driven by a sweep. It owns the current point and the
/// solution values there; advance() moves to a new point keeping one
/// normalization for the whole sweep and returns the work spent.
template <class E, class Real>
concept SweepEvaluator = requires(E e, const E ce, const Real& t) {
    { ce.point() } -> std::convertible_to<Real>;
    { ce.ratio() } -> std::convertible_to<Real>;
    { ce.derivative() } -> std::convertible_to<Real>;
    { e.advance(t, t) } -> std::convertible_to<long>;
};

/// Computes consecutive zeros starting from the evaluator's current point.
///
/// If `start_is_zero` the current point is treated as a zero (y = 0) for the
/// first step, which then becomes t +- pi/sqrt(A(t)). Accepted zeros are
/// treated the same way for the following node.
template <RealScalar Real, SweepEvaluator<Real> Eval>
SweepResult<Real> sweep(Eval& ev, const CoefficientModel<Real>& model, SweepDirection dir,
                        bool start_is_zero, const SweepLimits<Real>& limits,
                        const StopRule<Real>& stop, const SweepOptions& options = {}) {
    const bool forward = dir == SweepDirection::forward;
    const int j = forward ? -1 : 1;
    const Monotonicity expected = forward ? Monotonicity::decreasing : Monotonicity::increasing;

    SweepResult<Real> out;
    bool from_zero = start_is_zero;

    while (static_cast<int>(out.nodes.size()) < limits.max_nodes) {
        Real t = ev.point();
        int checked = 0;
        long cost = 0;
        bool first = true;
        bool bisected = false;
        bool confirming = false;
        Real last_gap = num::infinity<Real>();
        std::vector<Real> iterates;
        if (options.trace) iterates.push_back(t);

        for (;;) {
            const Real a = model(t);
            const Real h = (first && from_zero) ? Real(0) : Real(ev.ratio());
            Real delta;
            if (a > Real(0)) {
                const Monotonicity actual =
                    forward ? model.direction_at(t) : model.direction_left_of(t);
                if (actual != expected)
                    throw bound_violation("sweep direction disagrees with the monotonicity of A");
                delta = t_increment(h, a, j);
                // Iterates approach the zero monotonically with shrinking
                // gaps. A longer step means rounding put the iterate on the
                // far side of the zero and the branch correction jumped a
                // whole period; take the local (principal branch) step.
                if (!first && num::abs(delta) > last_gap) {
                    const Real root = num::sqrt(a);
                    delta = -num::atan(Real(root * h)) / root;
                }
            } else if (a < Real(0) && !forward) {
                try {
                    delta = t_increment_negative(h, a);
                } catch (const atanh_domain&) {
                    if (bisected || !limits.lower_bound) throw;
                    bisected = true;
                    delta = (*limits.lower_bound - t) / 2;
                }
            } else if (forward && limits.upper_bound) {
                // Past the turning point: no zeros remain ahead.
                out.extra_iterations += checked;
                out.extra_terms += cost;
                out.reached_bound = true;
                return out;
            } else {
                throw non_positive_coefficient("A(t) <= 0 inside a sweep at t = " +
                                               to_decimal(t, 17));
            }

            const Real next = t + delta;
            if (forward && limits.upper_bound &&
                next > *limits.upper_bound * (Real(1) + limits.bound_slack)) {
                out.extra_iterations += checked;
                out.extra_terms += cost;
                out.reached_bound = true;
                return out;
            }
            if (!forward && !(next > Real(0)))
                throw bound_violation("backward sweep left the positive axis");

            cost += ev.advance(next, delta);
            if (options.trace) iterates.push_back(next);

            bool converged = false;
            if (!first) {
                ++checked;
                converged = num::abs(Real(next - t)) < stop.tau;
            }
            const bool stationary = next == t;
            last_gap = num::abs(Real(next - t));
            first = false;
            t = next;

            if (confirming || stationary) break;
            if (converged) {
                if (!stop.confirm) break;
                confirming = true;
                continue;
            }
            if (checked >= stop.max_iterations)
                throw max_iterations_exceeded("fixed-point iteration did not settle at t = " +
                                              to_decimal(t, 17));
        }

        SweepNode<Real> node{t, Real(ev.derivative()), Real(ev.ratio()), checked, cost,
                             std::move(iterates)};
        out.nodes.push_back(std::move(node));
        from_zero = true;
    }
    return out;
}

}  // namespace gaussq
