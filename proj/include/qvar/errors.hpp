#pragma once

#include <stdexcept>
#include <string>

namespace qvar {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parameter lies outside its admissible domain (argument-level, not data).
struct param_out_of_range : error {
    using error::error;
};

/// A parameter combination is not meaningful for the requested object.
struct param_unsupported : error {
    using error::error;
};

/// A matrix claimed to be a covariance fails the positive-semidefinite check.
struct not_psd : error {
    using error::error;
};

/// Panel refinement exhausted its budget before reaching the error target.
struct quadrature_not_converged : error {
    using error::error;
};

/// Series truncation hit max_terms before the tail estimate fell below tolerance.
struct series_not_converged : error {
    using error::error;
};

/// Covariance with zero quadratic content; normalized cumulants undefined.
struct degenerate_covariance : error {
    using error::error;
};

struct empty_input : error {
    using error::error;
};

struct too_few_samples : error {
    using error::error;
};

struct fine_grid_too_coarse : error {
    using error::error;
};

struct config_invalid : error {
    using error::error;
};

/// Rate fit is not identifiable (fewer than 3 points, or nonpositive distances).
struct degenerate_fit : error {
    using error::error;
};

struct io_error : error {
    using error::error;
};

struct format_error : error {
    using error::error;
};

} // namespace qvar
