#pragma once

#include <cmath>

#include "kzw/types.hpp"

namespace kzw::detail {

// sin(pi s) and cos(pi s) with the integer part of Re s removed first, so
// that values near the zeros keep full relative accuracy.
inline Complex sin_pi(Complex s) {
  const double n = std::round(s.real());
  const Complex r(s.real() - n, s.imag());
  const Complex v = std::sin(kPi * r);
  return (static_cast<long long>(n) % 2 == 0) ? v : -v;
}

inline Complex cos_pi(Complex s) {
  const double n = std::round(s.real());
  const Complex r(s.real() - n, s.imag());
  const Complex v = std::cos(kPi * r);
  return (static_cast<long long>(n) % 2 == 0) ? v : -v;
}

}  // namespace kzw::detail
