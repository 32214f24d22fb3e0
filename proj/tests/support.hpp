#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "gaussq/gaussq.hpp"
#include "gaussq/precision.hpp"

namespace gaussq::test {

using ref_float = mp_float<50>;

template <class T>
double rel_err(const T& a, const T& b) {
    using std::abs;
    if (b == T(0)) return static_cast<double>(abs(a));
    return static_cast<double>(abs(T((a - b) / b)));
}

/// Relative error of a double against a high-precision value, without
/// rounding the reference first.
inline double rel_err_hp(double a, const ref_float& ref) {
    if (ref == 0) return std::abs(a);
    return abs((ref_float(a) - ref) / ref).convert_to<double>();
}

/// Deterministic generator for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    template <class T>
    const T& pick(const std::vector<T>& xs) {
        return xs[static_cast<std::size_t>(integer(0, static_cast<int>(xs.size()) - 1))];
    }

private:
    std::mt19937_64 rng_;
};

/// Golub-Welsch reference at 50 digits.
inline oracle::ReferenceRule<ref_float> hermite_reference(int n) {
    return oracle::reference_rule(QuadratureKind<ref_float>::hermite(), n);
}

inline oracle::ReferenceRule<ref_float> laguerre_reference(int n, double alpha) {
    return oracle::reference_rule(QuadratureKind<ref_float>::laguerre(ref_float(alpha)), n, true);
}

}  // namespace gaussq::test
