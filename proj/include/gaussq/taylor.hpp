#pragma once

#include <algorithm>
#include <cmath>

#include "gaussq/scalar.hpp"

namespace gaussq {

/// How local Taylor steps are formed from the fixed-point output.
///
/// difference_of_iterates: the new iterate is rounded first and the step is
/// h = t_new - t_old, so h is exactly the distance the center moves.
/// raw_increment: h is the unrounded increment returned by the iteration.
/// The second form lets the center and the series drift apart by rounding
/// and exists only so tests can measure the effect.
enum class StepOrdering { difference_of_iterates, raw_increment };

/// Truncation policy of a local Taylor series: sum until the last terms
/// contribute less than `tol` relatively, with at least `min_terms` and at
/// most `max_terms` terms. A step that does not converge is split in halves
/// at most `max_splits` levels deep.
template <RealScalar Real>
struct TaylorLimits {
    Real tol;
    int min_terms = 20;
    int max_terms = 50;
    int max_splits = 6;

    /// tol = 10^{-D}; max_terms = 50 E^{1.5} with D = 2^{3+E}, E >= 1.
    static TaylorLimits for_digits(int d) {
        TaylorLimits l{num::pow10_neg<Real>(d)};
        const double e = std::max(1.0, std::log2(static_cast<double>(d)) - 3.0);
        l.max_terms = std::max(l.min_terms + 1, static_cast<int>(std::ceil(50.0 * std::pow(e, 1.5))));
        return l;
    }
};

}  // namespace gaussq
