#pragma once

// Gauss-Laguerre rules, weight x^alpha e^{-x} on (0, inf), and the
// Radau-Laguerre rule with a fixed node at x = 0.
//
// Everything runs in z = sqrt(x), where y(z) = z^{alpha+1/2} e^{-z^2/2} L_n^{(alpha)}(z^2)
// satisfies y'' + A(z) y = 0 with A(z) = -z^2 + 2L + (1/4 - alpha^2)/z^2 and
// L = 2n + alpha + 1. For |alpha| > 1/2, A has its maximum at
// z_e = (alpha^2 - 1/4)^{1/4}; zeros above it are swept forward, zeros below it
// backward. The ratio y/y' needed to start a sweep comes from a continued
// fraction (or, for n < 10, from the degree recurrence); afterwards y is
// carried by local Taylor series.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gaussq/errors.hpp"
#include "gaussq/fixed_point.hpp"
#include "gaussq/rule.hpp"
#include "gaussq/scalar.hpp"
#include "gaussq/taylor.hpp"

namespace gaussq {

namespace detail {

template <RealScalar Real>
void check_laguerre_args(int n, const Real& alpha) {
    if (n < 1) throw invalid_argument("Laguerre degree must be >= 1");
    if (!(alpha > Real(-1))) throw invalid_argument("Laguerre parameter must satisfy alpha > -1");
}

}  // namespace detail

/// A(z) = -z^2 + 2L + (1/4 - alpha^2)/z^2 with its monotonicity partition.
template <RealScalar Real>
CoefficientModel<Real> laguerre_coefficient(int n, const Real& alpha) {
    detail::check_laguerre_args(n, alpha);
    const Real two_l = 2 * (Real(2 * n + 1) + alpha);
    const Real c = Real(1) / 4 - alpha * alpha;
    CoefficientModel<Real> m;
    m.value = [two_l, c](const Real& z) { return Real(-z * z + two_l + c / (z * z)); };
    m.derivative = [c](const Real& z) { return Real(-2 * z - 2 * c / (z * z * z)); };
    if (c < Real(0)) {
        const Real ze = num::sqrt(num::sqrt(Real(-c)));
        m.partition = {{Real(0), ze, Monotonicity::increasing},
                       {ze, num::infinity<Real>(), Monotonicity::decreasing}};
        m.extremum = ze;
    } else {
        m.partition = {{Real(0), num::infinity<Real>(), Monotonicity::decreasing}};
    }
    return m;
}

/// Turning points x_L < x_R of A in the x variable (A > 0 between them).
template <RealScalar Real>
struct TurningPoints {
    Real x_left;
    Real x_right;
};

template <RealScalar Real>
TurningPoints<Real> laguerre_turning_points(int n, const Real& alpha) {
    detail::check_laguerre_args(n, alpha);
    const Real l = Real(2 * n + 1) + alpha;
    const Real c = alpha * alpha - Real(1) / 4;
    const Real xr = l + num::sqrt(Real(l * l - c));
    return {c / xr, xr};
}

/// Interval (x_l, x_u) containing all zeros of L_n^{(alpha)}, with x_l = P / x_u.
template <RealScalar Real>
struct ZeroBounds {
    Real x_u;
    Real x_l;
    Real P;
};

template <RealScalar Real>
ZeroBounds<Real> laguerre_bounds(int n, const Real& alpha) {
    detail::check_laguerre_args(n, alpha);
    const Real nn = Real(n);
    const Real a1 = alpha + 1;
    const Real root = num::sqrt(Real(nn * nn + (nn + 2) * a1));
    const Real xu = (2 * nn * nn + nn * (alpha - 1) + 2 * a1 + 2 * (nn - 1) * root) / (nn + 2);
    const Real p = a1 * (nn * (alpha + 5) + 2 * (alpha - 1)) / (nn + 2);
    return {xu, p / xu, p};
}

/// A ratio value with the number of recurrence steps or partial quotients spent.
template <RealScalar Real>
struct RatioValue {
    Real value;
    int depth = 0;
};

namespace detail {

// R_{n-1} = L_n / L_{n-1} by the forward degree recurrence. Throws
// ratio_blowup when an intermediate ratio vanishes.
template <RealScalar Real>
Real laguerre_degree_ratio(int n, const Real& alpha, const Real& x) {
    Real r = alpha + 1 - x;
    for (int k = 1; k < n; ++k) {
        if (r == Real(0)) throw ratio_blowup("intermediate Laguerre ratio vanishes");
        r = (Real(2 * k + 1) + alpha - x - (Real(k) + alpha) / r) / Real(k + 1);
    }
    return r;
}

// r^{(alpha)} = a_alpha / (b_alpha + a_{alpha+1} / (b_{alpha+1} + ...)),
// a_s = -(n+s)/x, b_s = -(1 + s/x). The denominator
// g = b_alpha + a_{alpha+1} / (b_{alpha+1} + ...) is evaluated by the modified
// Lentz method and r = a_alpha / g.
template <RealScalar Real>
RatioValue<Real> laguerre_cf_value(int n, const Real& alpha, const Real& x, const Real& tol,
                                   int max_depth) {
    const Real tiny = std::numeric_limits<Real>::min() * 1024;
    auto a_at = [&](int k) { return Real(-(Real(n) + alpha + Real(k)) / x); };
    auto b_at = [&](int k) { return Real(-(Real(1) + (alpha + Real(k)) / x)); };
    Real g = b_at(0);
    if (g == Real(0)) g = tiny;
    Real c = g, d = Real(0);
    for (int k = 1; k < max_depth; ++k) {
        const Real a = a_at(k);
        const Real b = b_at(k);
        d = b + a * d;
        if (d == Real(0)) d = tiny;
        c = b + a / c;
        if (c == Real(0)) c = tiny;
        d = Real(1) / d;
        const Real delta = c * d;
        g *= delta;
        if (num::abs(Real(delta - 1)) < tol) return {a_at(0) / g, k + 1};
    }
    throw cf_no_convergence("Laguerre continued fraction did not converge in " +
                            std::to_string(max_depth) + " terms at x = " + to_decimal(x, 17));
}

template <RealScalar Real>
Real cf_tolerance(int digits) {
    return std::max(num::pow10_neg<Real>(digits), Real(2 * std::numeric_limits<Real>::epsilon()));
}

}  // namespace detail

/// Default depth cap of the continued fraction; grows with x and alpha.
template <RealScalar Real>
int laguerre_cf_default_depth(const Real& alpha, const Real& x) {
    using std::ceil;
    const Real big = std::max(num::abs(alpha), x);
    const double scale = static_cast<double>(big);
    return 500 + static_cast<int>(std::ceil(8.0 * std::min(scale, 1.0e7)));
}

/// y'/y at z = sqrt(x) from the degree recurrence (meant for n < 10).
/// Throws ratio_blowup when x is a zero of L_n^{(alpha)} or of an
/// intermediate ratio.
template <RealScalar Real>
RatioValue<Real> laguerre_ratio_recurrence(int n, const Real& alpha, const Real& x) {
    detail::check_laguerre_args(n, alpha);
    if (!(x > Real(0))) throw invalid_argument("laguerre_ratio_recurrence: x must be positive");
    const Real r = detail::laguerre_degree_ratio(n, alpha, x);
    if (r == Real(0)) throw ratio_blowup("x is a zero of the Laguerre polynomial");
    const Real z = num::sqrt(x);
    const Real v = (Real(2 * n) + alpha + Real(1) / 2) / z - z - 2 * (Real(n) + alpha) / (z * r);
    return {v, n};
}

/// y'/y at z = sqrt(x) from the continued fraction in the parameter.
/// `tol` defaults to max(10^{-D}, 2 eps); `max_depth` to laguerre_cf_default_depth.
template <RealScalar Real>
RatioValue<Real> laguerre_ratio_cf(int n, const Real& alpha, const Real& x,
                                   std::optional<Real> tol = std::nullopt,
                                   std::optional<int> max_depth = std::nullopt) {
    detail::check_laguerre_args(n, alpha);
    if (!(x > Real(0))) throw invalid_argument("laguerre_ratio_cf: x must be positive");
    const Real t = tol ? *tol : detail::cf_tolerance<Real>(digits<Real>());
    const int cap = max_depth ? *max_depth : laguerre_cf_default_depth(alpha, x);
    const auto r = detail::laguerre_cf_value(n, alpha, x, t, cap);
    const Real z = num::sqrt(x);
    const Real v = (Real(1) / 2 - alpha) / z - z + 2 * (Real(n) + alpha) / (z * r.value);
    return {v, r.depth};
}

/// h = y/y' at z = sqrt(x), finite at the zeros (h = 0 there). Uses the
/// recurrence for n < 10 and the continued fraction otherwise.
template <RealScalar Real>
RatioValue<Real> laguerre_h(int n, const Real& alpha, const Real& z, const Real& tol,
                            std::optional<int> max_depth = std::nullopt) {
    const Real x = z * z;
    if (n < 10) {
        Real xs = x;
        for (int attempt = 0;; ++attempt) {
            try {
                const Real r = detail::laguerre_degree_ratio(n, alpha, xs);
                const Real zs = num::sqrt(xs);
                const Real den = (Real(2 * n) + alpha + Real(1) / 2 - xs) * r - 2 * (Real(n) + alpha);
                return {zs * r / den, n};
            } catch (const ratio_blowup&) {
                if (attempt == 3) throw;
                xs *= Real(1) + 8 * unit_roundoff<Real>();
            }
        }
    }
    const int cap = max_depth ? *max_depth : laguerre_cf_default_depth(alpha, x);
    const auto r = detail::laguerre_cf_value(n, alpha, x, tol, cap);
    const Real den = (Real(1) / 2 - alpha - x) * r.value + 2 * (Real(n) + alpha);
    return {z * r.value / den, r.depth};
}

/// Local Taylor evaluator in z. With P = z^2 and
/// Q = -z^4 + 2L z^2 + 1/4 - alpha^2 the scaled coefficients
/// c_j = y^{(j)}(z) h^j / j! satisfy the seven-term recurrence
///
///   z^2 (j+1)(j+2) c_{j+2} = -[2z j(j+1) h c_{j+1} + (j(j-1) + Q) h^2 c_j
///       + Q' h^3 c_{j-1} + Q''/2 h^4 c_{j-2} + Q'''/6 h^5 c_{j-3} + Q''''/24 h^6 c_{j-4}].
///
/// The series converges for |h| < z. Steps longer than z/2 are split so each
/// piece converges quickly.
template <RealScalar Real>
class LaguerreTaylor {
public:
    LaguerreTaylor(int n, const Real& alpha, const Real& center, const Real& y, const Real& yp,
                   TaylorLimits<Real> limits,
                   StepOrdering ordering = StepOrdering::difference_of_iterates)
        : n_(n), alpha_(alpha), center_(center), y_(y), yp_(yp), limits_(std::move(limits)),
          ordering_(ordering) {
        if (!(center > Real(0))) throw invalid_argument("Laguerre Taylor center must be positive");
    }

    const Real& point() const { return center_; }
    const Real& value() const { return y_; }
    const Real& derivative() const { return yp_; }
    Real ratio() const {
        if (yp_ == Real(0))
            return y_ > Real(0) ? num::infinity<Real>() : -num::infinity<Real>();
        return y_ / yp_;
    }
    const TaylorLimits<Real>& limits() const { return limits_; }

    long advance(const Real& target, const Real& raw_step) {
        if (!(target > Real(0))) throw outside_disc("Laguerre Taylor target must be positive");
        const Real h = ordering_ == StepOrdering::difference_of_iterates ? Real(target - center_)
                                                                         : raw_step;
        return advance_by(target, h, limits_.max_splits, 0);
    }

    long advance(const Real& target) { return advance(target, Real(target - center_)); }

private:
    long advance_by(const Real& target, const Real& h, int splits_left, int depth) {
        if (h == Real(0)) {
            center_ = target;
            return 1;
        }
        if (depth > 200) throw term_limit_exceeded("Laguerre Taylor step could not be subdivided");
        if (!(2 * num::abs(h) < center_)) {
            const Real mid = center_ + h / 2;
            const long first = advance_by(mid, Real(mid - center_), splits_left, depth + 1);
            return first + advance_by(target, Real(target - center_), splits_left, depth + 1);
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
            throw term_limit_exceeded("Laguerre Taylor series did not converge within " +
                                      std::to_string(limits_.max_terms) + " terms");
        const Real mid = center_ + h / 2;
        const long first = advance_by(mid, Real(mid - center_), splits_left - 1, depth + 1);
        return first + advance_by(target, Real(target - center_), splits_left - 1, depth + 1);
    }

    int sum_series(const Real& h, Real& y_out, Real& yp_out) const {
        const Real& z = center_;
        const Real two_l = 2 * (Real(2 * n_ + 1) + alpha_);
        const Real z2 = z * z;
        const Real q0 = -z2 * z2 + two_l * z2 + Real(1) / 4 - alpha_ * alpha_;
        const Real q1 = -4 * z2 * z + 2 * two_l * z;
        const Real q2 = -6 * z2 + two_l;
        const Real q3 = -4 * z;
        const Real u = h / z;
        const Real u2 = u * u;
        const Real h2 = h * h;
        const Real k1 = 2 * u;
        const Real e0 = q0 * u2;
        const Real e1 = q1 * h * u2;
        const Real e2 = q2 * h2 * u2;
        const Real e3 = q3 * h2 * h * u2;
        const Real e4 = -h2 * h2 * u2;

        // c[0] = c_{j+1}, c[1] = c_j, ..., c[5] = c_{j-4}
        std::array<Real, 6> c;
        c.fill(Real(0));
        c[0] = yp_ * h;
        c[1] = y_;
        Real sy = c[0] + c[1];
        Real shyp = c[0];
        for (int j = 0;; ++j) {
            const Real jr = Real(j);
            const Real num = k1 * jr * Real(j + 1) * c[0] + (Real(j * (j - 1)) * u2 + e0) * c[1] +
                             e1 * c[2] + e2 * c[3] + e3 * c[4] + e4 * c[5];
            const Real next = -num / Real((j + 1) * (j + 2));
            for (std::size_t i = 5; i > 0; --i) c[i] = c[i - 1];
            c[0] = next;
            const int terms = j + 3;
            sy += next;
            shyp += Real(j + 2) * next;
            if (terms >= limits_.min_terms) {
                const Real scale = num::abs(sy) + num::abs(shyp);
                const Real last = Real(j + 2) * num::abs(c[0]) + Real(j + 1) * num::abs(c[1]);
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
    Real alpha_;
    Real center_;
    Real y_;
    Real yp_;
    TaylorLimits<Real> limits_;
    StepOrdering ordering_;
};

/// Evaluates (y, y') at `target` and re-centers `state` there. Only targets
/// inside the convergence disc |target - center| < center are accepted.
template <RealScalar Real>
struct LaguerreEvaluation {
    Real y;
    Real yp;
    long terms;
};

template <RealScalar Real>
LaguerreEvaluation<Real> laguerre_taylor_eval(LaguerreTaylor<Real>& state, const Real& target) {
    if (!(num::abs(Real(target - state.point())) < state.point()))
        throw outside_disc("target outside the convergence disc of the Taylor series");
    const long terms = state.advance(target);
    return {state.value(), state.derivative(), terms};
}

/// Sweep evaluator that recomputes h = y/y' from scratch at every point.
/// derivative() reports the local normalization (y, y') = (h, 1).
template <RealScalar Real>
class LaguerreRatioEvaluator {
public:
    LaguerreRatioEvaluator(int n, const Real& alpha, const Real& z, const Real& tol,
                           std::optional<int> max_depth = std::nullopt)
        : n_(n), alpha_(alpha), tol_(tol), max_depth_(max_depth), z_(z) {
        depth_ = evaluate();
    }

    const Real& point() const { return z_; }
    const Real& ratio() const { return h_; }
    Real derivative() const { return Real(1); }
    int last_depth() const { return depth_; }

    long advance(const Real& target, const Real&) {
        z_ = target;
        depth_ = evaluate();
        return depth_;
    }

private:
    int evaluate() {
        const auto r = laguerre_h(n_, alpha_, z_, tol_, max_depth_);
        h_ = r.value;
        return r.depth;
    }

    int n_;
    Real alpha_;
    Real tol_;
    std::optional<int> max_depth_;
    Real z_;
    Real h_ = Real(0);
    int depth_ = 0;
};

template <RealScalar Real>
struct LaguerreOptions {
    std::optional<int> digits;
    StepOrdering ordering = StepOrdering::difference_of_iterates;
    std::optional<int> cf_max_depth;
    bool trace = false;
};

/// Zeros in z with y' in one common normalization, ascending.
template <RealScalar Real>
struct LaguerreNodes {
    std::vector<Real> z;
    std::vector<Real> derivatives;
    std::vector<int> iterations;
    std::vector<long> terms;
    /// Normalization segment of each derivative; all equal after assembly.
    std::vector<int> segment;
    /// Ascending index of the first node obtained from the ratio evaluator.
    std::optional<std::size_t> first_ratio_index;
    /// Node used as the origin of the scaled weights.
    std::size_t reference_index = 0;
    int forward_count = 0;
    int backward_count = 0;
    int ratio_count = 0;
    Real start = Real(0);
    long extra_iterations = 0;
    long extra_terms = 0;
};

namespace detail {

template <RealScalar Real>
struct SeedValues {
    Real y;
    Real yp;
};

// Values (y, y') with y/y' = h and max(|y|, |y'|) = 1.
template <RealScalar Real>
SeedValues<Real> seed_from_ratio(const Real& h) {
    if (num::abs(h) > Real(1)) return {Real(1), Real(1) / h};
    return {h, Real(1)};
}

}  // namespace detail

template <RealScalar Real>
LaguerreNodes<Real> laguerre_nodes(int n, const Real& alpha, const StopRule<Real>& stop,
                                   const LaguerreOptions<Real>& options = {}) {
    detail::check_laguerre_args(n, alpha);
    const auto model = laguerre_coefficient<Real>(n, alpha);
    const auto bounds = laguerre_bounds<Real>(n, alpha);
    const Real zu = num::sqrt(bounds.x_u);
    const Real zl = num::sqrt(bounds.x_l);
    const Real tol = detail::cf_tolerance<Real>(stop.digits);
    const auto limits = TaylorLimits<Real>::for_digits(stop.digits);
    const SweepOptions sopt{options.trace};
    const bool has_extremum = model.extremum.has_value();

    LaguerreNodes<Real> out;
    // Below the lower bound by a small margin, so that a bound sitting on the
    // first zero (n = 1) still leaves that zero ahead of the sweep.
    Real start = has_extremum ? *model.extremum : Real(zl * (1 - Real(1) / 1024));

    auto ratio_at = [&](const Real& z) {
        auto r = laguerre_h(n, alpha, z, tol, options.cf_max_depth);
        out.extra_terms += r.depth;
        return r.value;
    };

    Real h_start = ratio_at(start);
    if (h_start == Real(0)) {
        // The start point is itself a zero; step just below it so the forward
        // sweep picks it up.
        start -= start * unit_roundoff<Real>() * 4;
        h_start = ratio_at(start);
    }
    out.start = start;

    SweepLimits<Real> fwd_limits;
    fwd_limits.upper_bound = zu;

    std::vector<SweepNode<Real>> above;       // ascending, above the start
    std::vector<int> above_segment;
    std::vector<SweepNode<Real>> below;       // descending, below the start
    std::optional<LaguerreTaylor<Real>> back_seed;

    auto absorb = [&](const SweepResult<Real>& r) {
        out.extra_iterations += r.extra_iterations;
        out.extra_terms += r.extra_terms;
    };

    if (alpha >= Real(2)) {
        const auto s = detail::seed_from_ratio(h_start);
        LaguerreTaylor<Real> ev(n, alpha, start, s.y, s.yp, limits, options.ordering);
        fwd_limits.max_nodes = n;
        auto fr = sweep(ev, model, SweepDirection::forward, false, fwd_limits, stop, sopt);
        absorb(fr);
        for (auto& node : fr.nodes) {
            above.push_back(std::move(node));
            above_segment.push_back(0);
        }
        back_seed.emplace(n, alpha, start, s.y, s.yp, limits, options.ordering);
    } else {
        LaguerreRatioEvaluator<Real> rev(n, alpha, start, tol, options.cf_max_depth);
        fwd_limits.max_nodes = std::min(2, n);
        auto cr = sweep(rev, model, SweepDirection::forward, false, fwd_limits, stop, sopt);
        absorb(cr);
        out.ratio_count = static_cast<int>(cr.nodes.size());

        if (cr.nodes.empty()) {
            const auto s = detail::seed_from_ratio(h_start);
            back_seed.emplace(n, alpha, start, s.y, s.yp, limits, options.ordering);
        } else {
            const auto& last = cr.nodes.back();
            const auto s = detail::seed_from_ratio(last.ratio);
            LaguerreTaylor<Real> ev(n, alpha, last.point, s.y, s.yp, limits, options.ordering);
            LaguerreTaylor<Real> rejoin = ev;

            fwd_limits.max_nodes = n - static_cast<int>(cr.nodes.size());
            auto fr = sweep(ev, model, SweepDirection::forward, true, fwd_limits, stop, sopt);
            absorb(fr);

            // The ratio-evaluator nodes only know y/y'; carry the Taylor
            // normalization back through them so all derivatives agree.
            std::vector<SweepNode<Real>> cf_nodes = cr.nodes;
            cf_nodes.back().derivative = s.yp;
            for (std::size_t i = cf_nodes.size() - 1; i-- > 0;) {
                out.extra_terms += rejoin.advance(cf_nodes[i].point);
                cf_nodes[i].derivative = rejoin.derivative();
            }
            for (auto& node : cf_nodes) {
                above.push_back(std::move(node));
                above_segment.push_back(0);
            }
            for (auto& node : fr.nodes) {
                above.push_back(std::move(node));
                above_segment.push_back(0);
            }
            const int missing = n - static_cast<int>(above.size());
            if (missing > 0 && has_extremum) {
                out.extra_terms += rejoin.advance(start);
                back_seed.emplace(std::move(rejoin));
            }
        }
    }

    const int missing = n - static_cast<int>(above.size());
    if (missing > 0) {
        if (!back_seed || !has_extremum)
            throw count_mismatch("Laguerre sweep found " + std::to_string(above.size()) +
                                 " of " + std::to_string(n) + " zeros");
        SweepLimits<Real> back_limits;
        back_limits.max_nodes = missing;
        back_limits.lower_bound = zl;
        auto br = sweep(*back_seed, model, SweepDirection::backward, false, back_limits, stop, sopt);
        absorb(br);
        below = std::move(br.nodes);
    }

    const std::size_t total = below.size() + above.size();
    if (static_cast<int>(total) != n)
        throw count_mismatch("Laguerre sweep assembled " + std::to_string(total) + " of " +
                             std::to_string(n) + " zeros");

    out.forward_count = static_cast<int>(above.size()) - out.ratio_count;
    out.backward_count = static_cast<int>(below.size());
    // First node above the start, or the first backward node if there is none.
    out.reference_index = above.empty() ? below.size() - 1 : below.size();
    if (out.ratio_count > 0) out.first_ratio_index = below.size();
    auto push = [&](const SweepNode<Real>& node, int seg) {
        out.z.push_back(node.point);
        out.derivatives.push_back(node.derivative);
        out.iterations.push_back(node.iterations);
        out.terms.push_back(node.terms);
        out.segment.push_back(seg);
    };
    for (std::size_t i = below.size(); i-- > 0;) push(below[i], 0);
    for (std::size_t i = 0; i < above.size(); ++i) push(above[i], above_segment[i]);

    for (std::size_t i = 1; i < out.z.size(); ++i)
        if (!(out.z[i - 1] < out.z[i]))
            throw count_mismatch("Laguerre zeros are not strictly increasing");
    return out;
}

template <RealScalar Real>
struct LaguerreWeights {
    std::vector<Real> weights;   // normalized to sum one
    std::vector<Real> scaled;
};

/// Normalized weights from the zeros z_i and y'(z_i) in one normalization.
///
/// With omega_i = |y'(z_i)|^{-2} and F_i = x_j - x_i + (alpha + 1/2) log(x_i / x_j),
/// w_i = omega_i e^{F_i} / lambda and scaled_i = omega_i / lambda where
/// lambda = sum omega_i e^{F_i}.
template <RealScalar Real>
LaguerreWeights<Real> laguerre_weights(const Real& alpha, const std::vector<Real>& z,
                                       const std::vector<Real>& derivatives,
                                       std::size_t reference_index,
                                       const std::vector<int>& segment = {}) {
    const std::size_t n = z.size();
    if (n == 0 || derivatives.size() != n || reference_index >= n)
        throw invalid_argument("laguerre_weights: inconsistent input sizes");
    if (!segment.empty()) {
        if (segment.size() != n) throw invalid_argument("laguerre_weights: segment size mismatch");
        for (int s : segment)
            if (s != segment.front())
                throw inconsistent_normalization("derivatives come from different normalizations");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (derivatives[i] == Real(0)) throw zero_derivative("y' vanishes at a Laguerre node");
        if (i > 0 && (derivatives[i] > Real(0)) == (derivatives[i - 1] > Real(0)))
            throw inconsistent_normalization("derivative signs do not alternate between zeros");
    }

    const Real xj = z[reference_index] * z[reference_index];
    const Real a = alpha + Real(1) / 2;
    std::vector<Real> omega(n), wbar(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Real xi = z[i] * z[i];
        omega[i] = Real(1) / (derivatives[i] * derivatives[i]);
        const Real f = xj - xi + a * num::log(Real(xi / xj));
        wbar[i] = omega[i] * num::exp(f);
    }
    std::vector<Real> sorted = wbar;
    std::sort(sorted.begin(), sorted.end());
    Real lambda = Real(0);
    for (const auto& v : sorted) lambda += v;

    LaguerreWeights<Real> out;
    out.weights.resize(n);
    out.scaled.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.weights[i] = wbar[i] / lambda;
        out.scaled[i] = omega[i] / lambda;
    }
    return out;
}

namespace detail {

template <RealScalar Real>
std::optional<Real> representable_gamma(const Real& alpha) {
    const Real lg = num::lgamma(Real(alpha + 1));
    const Real v = num::exp(lg);
    if (!num::isfinite(v) || v == Real(0)) return std::nullopt;
    return v;
}

template <RealScalar Real>
void fill_stats(IterationStats& stats, const LaguerreNodes<Real>& nodes) {
    for (std::size_t i = 0; i < nodes.z.size(); ++i)
        stats.record(nodes.iterations[i], nodes.terms[i]);
    stats.extra_iterations = nodes.extra_iterations;
    stats.extra_terms = nodes.extra_terms;
    stats.finalize();
}

}  // namespace detail

/// The n-point Gauss-Laguerre rule with weights normalized to sum one.
template <RealScalar Real>
QuadratureRule<Real> laguerre_rule(int n, const Real& alpha,
                                   const LaguerreOptions<Real>& options = {}) {
    detail::check_laguerre_args(n, alpha);
    const int d = options.digits ? *options.digits : digits<Real>();
    const auto stop = StopRule<Real>::for_digits(d, true);
    const auto nodes = laguerre_nodes<Real>(n, alpha, stop, options);
    const auto w =
        laguerre_weights<Real>(alpha, nodes.z, nodes.derivatives, nodes.reference_index,
                               nodes.segment);

    QuadratureRule<Real> rule;
    rule.kind = QuadratureKind<Real>::laguerre(alpha);
    rule.n = n;
    rule.nodes.reserve(nodes.z.size());
    for (const auto& z : nodes.z) rule.nodes.push_back(z * z);
    rule.weights = w.weights;
    rule.scaled_weights = w.scaled;
    rule.derivatives = nodes.derivatives;
    rule.reference_index = nodes.reference_index;
    rule.mu0 = detail::representable_gamma(alpha);
    detail::fill_stats(rule.stats, nodes);
    return rule;
}

/// 1 / binom(n + alpha + 1, n) = prod_{k=1..n} k / (alpha + 1 + k).
template <RealScalar Real>
Real radau_boundary_weight(int n, const Real& alpha) {
    detail::check_laguerre_args(n, alpha);
    Real s = Real(0);
    for (int k = 1; k <= n; ++k) s += num::log(Real((alpha + Real(1 + k)) / Real(k)));
    return num::exp(-s);
}

/// Radau-Laguerre rule with the node x = 0 fixed: interior nodes are the zeros
/// of L_n^{(alpha+1)}, all weights normalized so that they sum to one.
///
/// Interior weights are (alpha + 1) w_i / x_i with w_i the normalized weights
/// of the (n, alpha + 1) Gauss rule; scaled weights carry the same factor.
template <RealScalar Real>
QuadratureRule<Real> radau_laguerre_rule(int n, const Real& alpha,
                                         const LaguerreOptions<Real>& options = {}) {
    detail::check_laguerre_args(n, alpha);
    auto inner = laguerre_rule<Real>(n, Real(alpha + 1), options);
    QuadratureRule<Real> rule = std::move(inner);
    rule.kind = QuadratureKind<Real>::radau_laguerre(alpha);
    const Real a1 = alpha + 1;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        rule.weights[i] = a1 * rule.weights[i] / rule.nodes[i];
        rule.scaled_weights[i] = a1 * rule.scaled_weights[i] / rule.nodes[i];
    }
    rule.boundary_weight = radau_boundary_weight<Real>(n, alpha);
    rule.mu0 = detail::representable_gamma(alpha);
    return rule;
}

}  // namespace gaussq
