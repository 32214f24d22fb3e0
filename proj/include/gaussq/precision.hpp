#pragma once

// Concrete scalar types beyond the built-in ones. Requires linking MPFR/GMP
// (CMake target gaussq::mpfr).

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace gaussq {

/// IEEE binary128 layout (113-bit significand), software arithmetic.
using quad = boost::multiprecision::cpp_bin_float_quad;

/// MPFR float with a fixed number of decimal digits.
template <unsigned Digits10>
using mp_float =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<Digits10>,
                                  boost::multiprecision::et_off>;

/// MPFR float whose precision is taken from the thread's default at
/// construction time; see scoped_precision.
using mp_dynamic =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

/// Sets the default mp_dynamic precision for the lifetime of the object.
class scoped_precision {
public:
    explicit scoped_precision(unsigned digits10) : saved_(mp_dynamic::default_precision()) {
        mp_dynamic::default_precision(digits10);
    }
    ~scoped_precision() { mp_dynamic::default_precision(saved_); }
    scoped_precision(const scoped_precision&) = delete;
    scoped_precision& operator=(const scoped_precision&) = delete;

private:
    unsigned saved_;
};

}  // namespace gaussq
