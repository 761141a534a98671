#include <limits>
#include <stdexcept>

#include "kzw/types.hpp"

namespace kzw {

void EvalConfig::validate() const {
  if (!(rel_tol >= 100.0 * std::numeric_limits<double>::epsilon())) {
    throw std::invalid_argument("rel_tol must be at least 100 machine epsilons");
  }
  if (!(abs_tol > 0.0)) throw std::invalid_argument("abs_tol must be positive");
  if (max_series_terms <= 0 || max_quad_levels <= 0 ||
      oscillatory_period_cap <= 0 || !(contour_height_cap > 0.0)) {
    throw std::invalid_argument("work caps must be positive");
  }
}

double EvalConfig::target(double magnitude) const {
  return std::max(rel_tol * magnitude, abs_tol);
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::integral: return "integral";
    case Method::mellin_barnes: return "mellin_barnes";
    case Method::bilateral_series: return "bilateral_series";
    case Method::double_sum: return "double_sum";
    case Method::basset_z0: return "basset_z0";
    case Method::laplace_series: return "laplace_series";
    case Method::double_integral: return "double_integral";
    case Method::asymptotic_large_x: return "asymptotic_large_x";
    case Method::asymptotic_small_x: return "asymptotic_small_x";
  }
  return "unknown";
}

}  // namespace kzw
