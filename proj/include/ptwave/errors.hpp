#pragma once

#include <stdexcept>
#include <string>

namespace ptwave {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user-supplied configuration (mismatched grids, wrong lengths, ...).
struct config_error : error {
    using error::error;
};

// Bad argument to a library call (out-of-range order, degenerate input, ...).
struct argument_error : error {
    using error::error;
};

// An internal invariant was violated (lost conjugate symmetry, ...).
struct consistency_error : error {
    using error::error;
};

// A Fourier symbol misbehaves on the grid (non-finite value, ...).
struct operator_error : error {
    using error::error;
};

// The stabilizing-factor quotient or a mode denominator is (near) zero.
struct singular_denominator_error : error {
    using error::error;
};

// Negative stabilizing factor with a fractional exponent in play.
struct sign_breakdown_error : error {
    using error::error;
};

} // namespace ptwave
