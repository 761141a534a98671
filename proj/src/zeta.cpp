#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "kzw/special.hpp"
#include "trig.hpp"

namespace kzw::special {
namespace {

// Stieltjes constants gamma_0 .. gamma_3.
constexpr std::array<double, 4> kStieltjes = {
    0.57721566490153286061, -0.07281584548367672486, -0.00969036319287231848,
    0.00205383442030334587};

// Borwein's accelerated alternating series for eta(s) = (1 - 2^{1-s}) zeta(s).
// The error bound grows like e^{pi |Im s| / 2} / (3 + sqrt 8)^n, so n scales
// with |Im s|.
Complex eta_borwein(Complex s) {
  const double t = std::abs(s.imag());
  const int n = std::min(
      220, 20 + static_cast<int>(std::ceil((kPi * t / 2.0 + 40.0) / 1.7627)));
  // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), built by term ratios.
  std::vector<double> d(static_cast<std::size_t>(n) + 1);
  double term = 1.0;  // i = 0 term divided by n: (n-1)!/n! * n = 1
  double acc = term;
  d[0] = acc;
  for (int i = 1; i <= n; ++i) {
    term *= 4.0 * (n + i - 1.0) * (n - i + 1.0) / ((2.0 * i) * (2.0 * i - 1.0));
    acc += term;
    d[i] = acc;
  }
  const double dn = d[n];
  Complex sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double weight = (d[k] - dn) / dn;
    const Complex power = std::exp(-s * std::log(static_cast<double>(k + 1)));
    sum += (k % 2 == 0 ? weight : -weight) * power;
  }
  return -sum;
}

// 1 - 2^s without cancellation near s = 0.
Complex one_minus_pow2(Complex s) {
  const Complex e = s * std::log(2.0);
  const double half_sin = std::sin(e.imag() / 2.0);
  const Complex em1(std::expm1(e.real()) * std::cos(e.imag()) - 2.0 * half_sin * half_sin,
                    std::exp(e.real()) * std::sin(e.imag()));
  return -em1;
}

}  // namespace

Complex zeta(Complex s) {
  if (std::abs(s - 1.0) < 1e-12) throw PoleError("zeta: pole at s = 1");
  const Complex factor = one_minus_pow2(1.0 - s);
  if (s.real() < 0.0 || std::abs(factor) < 0.1) {
    // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s); the
    // reflected point has Re(1 - s) > 0 and 1 - 2^s well away from zero.
    if (s.real() < 0.0 && s.imag() == 0.0 && s.real() == std::round(s.real()) &&
        static_cast<long long>(s.real()) % 2 == 0) {
      return 0.0;
    }
    const Complex r = 1.0 - s;
    const Complex reflected = eta_borwein(r) / one_minus_pow2(s);
    return std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi)) *
           detail::sin_pi(s / 2.0) * gamma(r) * reflected;
  }
  return eta_borwein(s) / factor;
}

Complex zeta_times_s_minus_1(Complex s) {
  const Complex e = s - 1.0;
  if (std::abs(e) < 1e-3) {
    // (s-1) zeta(s) = 1 + sum_n (-1)^n gamma_n e^{n+1} / n!
    Complex acc = 1.0;
    Complex power = e;
    double fact = 1.0;
    for (std::size_t n = 0; n < kStieltjes.size(); ++n) {
      if (n > 0) {
        power *= e;
        fact *= static_cast<double>(n);
      }
      acc += (n % 2 == 0 ? 1.0 : -1.0) * kStieltjes[n] * power / fact;
    }
    return acc;
  }
  return e * zeta(s);
}

}  // namespace kzw::special
