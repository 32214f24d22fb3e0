#pragma once

#include <stdexcept>
#include <string>

namespace gaussq {

/// Base class of every failure raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied an out-of-domain parameter (n = 0, alpha <= -1, ...).
class invalid_argument : public error {
public:
    using error::error;
};

// Fixed-point solver.
class non_positive_coefficient : public error {
public:
    using error::error;
};
class degenerate_state : public error {
public:
    using error::error;
};
class atanh_domain : public error {
public:
    using error::error;
};
class max_iterations_exceeded : public error {
public:
    using error::error;
};
class bound_violation : public error {
public:
    using error::error;
};

// Function evaluation.
class term_limit_exceeded : public error {
public:
    using error::error;
};
class outside_disc : public error {
public:
    using error::error;
};
class ratio_blowup : public error {
public:
    using error::error;
};
class cf_no_convergence : public error {
public:
    using error::error;
};

// Rule assembly.
class count_mismatch : public error {
public:
    using error::error;
};
class inconsistent_normalization : public error {
public:
    using error::error;
};
class zero_derivative : public error {
public:
    using error::error;
};

// Reference eigensolver.
class no_convergence : public error {
public:
    using error::error;
};

}  // namespace gaussq
