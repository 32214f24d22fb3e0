#pragma once

// Precision-generic real scalar contract.
//
// Every algorithm in the library is written against RealScalar. Built-in
// floating types satisfy it directly; Boost.Multiprecision numbers satisfy it
// through ADL overloads of the elementary functions (use et_off numbers so
// that expressions yield values rather than expression templates).

#include <charconv>
#include <cmath>
#include <concepts>
#include <ios>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>

#include "gaussq/errors.hpp"

namespace gaussq {

// Variable-precision MPFR numbers leave numeric_limits::is_specialized false
// but still provide a runtime epsilon() and infinity().
template <class T>
concept RealScalar = (std::numeric_limits<T>::is_specialized ||
                      (std::numeric_limits<T>::radix == 2 && std::numeric_limits<T>::has_infinity)) &&
                     !std::numeric_limits<T>::is_integer &&
                     requires(const T a, const T b, int i) {
                         { a + b } -> std::convertible_to<T>;
                         { a - b } -> std::convertible_to<T>;
                         { a * b } -> std::convertible_to<T>;
                         { a / b } -> std::convertible_to<T>;
                         { -a } -> std::convertible_to<T>;
                         { a < b } -> std::convertible_to<bool>;
                         { a == b } -> std::convertible_to<bool>;
                         T(i);
                     };

/// Elementary functions resolved by ADL, falling back to <cmath>.
namespace num {

template <RealScalar T>
T abs(const T& x) {
    using std::abs;
    return abs(x);
}
template <RealScalar T>
T sqrt(const T& x) {
    using std::sqrt;
    return sqrt(x);
}
template <RealScalar T>
T exp(const T& x) {
    using std::exp;
    return exp(x);
}
template <RealScalar T>
T log(const T& x) {
    using std::log;
    return log(x);
}
template <RealScalar T>
T atan(const T& x) {
    using std::atan;
    return atan(x);
}
template <RealScalar T>
T atanh(const T& x) {
    using std::atanh;
    return atanh(x);
}
template <RealScalar T>
T floor(const T& x) {
    using std::floor;
    return floor(x);
}
template <RealScalar T>
T lgamma(const T& x) {
    using std::lgamma;
    return lgamma(x);
}
template <RealScalar T>
bool isinf(const T& x) {
    using std::isinf;
    return isinf(x);
}
template <RealScalar T>
bool isfinite(const T& x) {
    using std::isfinite;
    return isfinite(x);
}

template <RealScalar T>
T pi() {
    if constexpr (std::is_floating_point_v<T>)
        return std::numbers::pi_v<T>;
    else
        return 4 * num::atan(T(1));
}

template <RealScalar T>
T infinity() {
    return std::numeric_limits<T>::infinity();
}

/// 10^(-d) at working precision.
template <RealScalar T>
T pow10_neg(int d) {
    // 10^d by squaring is exact while it fits the significand.
    T p = T(1), b = T(10);
    for (int e = d < 0 ? -d : d; e > 0; e >>= 1) {
        if (e & 1) p *= b;
        b *= b;
    }
    return d < 0 ? p : T(1) / p;
}

}  // namespace num

/// Unit roundoff u = eps/2 of the current working precision.
template <RealScalar T>
T unit_roundoff() {
    return std::numeric_limits<T>::epsilon() / 2;
}

/// Working decimal digits D = round(-log10(eps)).
template <RealScalar T>
int digits() {
    using std::log10;
    using std::round;
    const T eps = std::numeric_limits<T>::epsilon();
    return static_cast<int>(round(-log10(eps)));
}

/// Significant digits that guarantee a bit-exact decimal round trip.
template <RealScalar T>
int round_trip_digits() {
    constexpr int md = std::numeric_limits<T>::max_digits10;
    if (md > 0 && md < 100000) return md;
    return digits<T>() + 3;
}

/// Round-to-nearest scientific decimal string with `significant` digits.
template <RealScalar T>
std::string to_decimal(const T& x, int significant) {
    if (significant < 1) significant = 1;
    if constexpr (std::is_floating_point_v<T>) {
        char buf[128];
        auto r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific,
                               significant - 1);
        return std::string(buf, r.ptr);
    } else {
        std::ostringstream os;
        os << std::scientific;
        os.precision(significant - 1);
        os << x;
        return os.str();
    }
}

template <RealScalar T>
std::string to_decimal(const T& x) {
    return to_decimal(x, round_trip_digits<T>());
}

template <RealScalar T>
T from_decimal(std::string_view s) {
    if constexpr (std::is_floating_point_v<T>) {
        T v{};
        auto r = std::from_chars(s.data(), s.data() + s.size(), v);
        if (r.ec != std::errc{} || r.ptr != s.data() + s.size())
            throw invalid_argument("not a decimal number: " + std::string(s));
        return v;
    } else {
        try {
            return T(std::string(s));
        } catch (const std::exception&) {
            throw invalid_argument("not a decimal number: " + std::string(s));
        }
    }
}

}  // namespace gaussq
