#pragma once

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kzw {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Base class for every numerical failure raised by the library.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument sits on (or within tolerance of) a pole of the function.
class PoleError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Argument outside the domain where the representation is valid.
class DomainError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// An iterative method exhausted its budget before meeting its tolerance.
class NonConvergence : public NumericError {
 public:
  using NumericError::NumericError;
};

// ---------------------------------------------------------------------------
// Configuration and results
// ---------------------------------------------------------------------------

/// Tolerances and work caps shared by every adaptive method.
struct EvalConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-15;
  int max_series_terms = 200;
  int max_quad_levels = 12;
  double contour_height_cap = 200.0;
  int oscillatory_period_cap = 400;

  /// Throws std::invalid_argument when a cap is non-positive or rel_tol is
  /// below 100 machine epsilons.
  void validate() const;

  /// max(rel_tol * |value|, abs_tol)
  double target(double magnitude) const;
};

enum class Method {
  integral,
  mellin_barnes,
  bilateral_series,
  double_sum,
  basset_z0,
  laplace_series,
  double_integral,
  asymptotic_large_x,
  asymptotic_small_x,
};

std::string_view to_string(Method m);

/// A value with an a-posteriori error estimate.
struct Evaluation {
  Complex value{};
  double err_est = 0.0;
  Method method = Method::double_sum;
  long work = 0;
  bool converged = false;
};

/// Relative distance used throughout for tolerance comparisons.
inline double rel_diff(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace kzw
