#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "kzw/identities.hpp"

namespace kzw::detail {

inline IdentityReport make_report(std::string name,
                                  std::vector<std::pair<std::string, Complex>> params,
                                  Complex lhs, Complex rhs, double tol, const EvalConfig& cfg) {
  IdentityReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_residual = std::abs(lhs - rhs);
  r.rel_residual = r.abs_residual / std::max({std::abs(lhs), std::abs(rhs), cfg.abs_tol});
  r.tolerance = tol;
  r.pass = r.rel_residual <= tol;
  return r;
}

}  // namespace kzw::detail
