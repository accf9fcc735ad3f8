#pragma once

#include <stdexcept>
#include <string>

namespace lapcon {

// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched or unusable sizes (n < 2, U.n != P.n, ...).
struct invalid_dimension_error : error {
  using error::error;
};

// Out-of-range scalar parameters (tau < 0, empty grids, bad quantile, ...).
struct invalid_parameter_error : error {
  using error::error;
};

// Weight vectors that violate the product-form probability constraint.
struct invalid_profile_error : error {
  using error::error;
};

// An operation that divides by a vertex degree met a nonpositive degree.
struct zero_degree_error : error {
  using error::error;
};

// The second-smallest eigenvalue is not simple within tolerance.
struct degenerate_gap_error : error {
  using error::error;
};

// Non-finite input or a failed numerical routine.
struct numeric_error : error {
  using error::error;
};

// Unreadable or unwritable files.
struct io_error : error {
  using error::error;
};

}  // namespace lapcon
