#include <array>
#include <cmath>

#include "kzw/special.hpp"
#include "trig.hpp"

namespace kzw::special {
namespace {

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

// Series factor A(s) with Gamma(s) = sqrt(2 pi) t^(s-1/2) e^-t A(s),
// t = s + g - 1/2, valid for Re s >= 1/2.
Complex lanczos_sum(Complex s) {
  const Complex sm1 = s - 1.0;
  Complex acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    acc += kLanczos[i] / (sm1 + static_cast<double>(i));
  }
  return acc;
}

bool near_nonpositive_integer(Complex s) {
  if (s.real() > 0.5) return false;
  const double n = std::round(s.real());
  return std::abs(s - Complex(n, 0.0)) < 1e-12;
}

}  // namespace

Complex lgamma(Complex s) {
  if (s.real() < 0.5) {
    throw DomainError("lgamma: requires Re s >= 1/2");
  }
  const Complex t = s + (kLanczosG - 0.5);
  return kHalfLog2Pi + (s - 0.5) * std::log(t) - t + std::log(lanczos_sum(s));
}

Complex gamma(Complex s) {
  if (near_nonpositive_integer(s)) {
    throw PoleError("gamma: argument at a pole");
  }
  if (s.real() < 0.5) {
    // Gamma(s) Gamma(1-s) = pi / sin(pi s)
    return kPi / (detail::sin_pi(s) * gamma(1.0 - s));
  }
  const Complex t = s + (kLanczosG - 0.5);
  return std::sqrt(2.0 * kPi) * std::exp((s - 0.5) * std::log(t) - t) *
         lanczos_sum(s);
}

Complex rgamma(Complex s) {
  if (s.real() < 0.5) {
    const double n = std::round(s.real());
    if (s.imag() == 0.0 && s.real() == n) return 0.0;
    return detail::sin_pi(s) * gamma(1.0 - s) / kPi;
  }
  return 1.0 / gamma(s);
}

}  // namespace kzw::special
