#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <vector>

#include "kzw/special.hpp"
#include "trig.hpp"

namespace kzw::special {
namespace {

using LComplex = std::complex<long double>;

bool is_integer_order(Complex nu) {
  return nu.imag() == 0.0 && nu.real() == std::round(nu.real());
}

// (x/2)^nu sum_m (sign x^2/4)^m / (m! Gamma(m + nu + 1)), sign = -1 for J and
// +1 for I. The reciprocal gammas are anchored where Re(m + nu + 1) >= 1/2
// and recurred in both directions, so orders at or near negative integers
// need no special casing.
Complex ascending_series(Complex nu, Complex x, double sign) {
  if (x == 0.0) {
    if (nu == 0.0) return 1.0;
    if (nu.real() > 0.0 || is_integer_order(nu)) return 0.0;
    throw DomainError("bessel: x = 0 with Re nu <= 0");
  }
  int anchor = 0;
  if (nu.real() + 1.0 < 0.5) {
    anchor = static_cast<int>(std::ceil(0.5 - (nu.real() + 1.0)));
  }
  std::vector<Complex> low(static_cast<std::size_t>(anchor) + 1);
  low[anchor] = rgamma(nu + static_cast<double>(anchor) + 1.0);
  for (int m = anchor; m > 0; --m) {
    low[m - 1] = low[m] * (nu + static_cast<double>(m));
  }

  const Complex half = x / 2.0;
  const LComplex q(sign * half * half);
  LComplex power = 1.0L;  // q^m / m!
  LComplex sum = 0.0L;
  LComplex rg = low[0];
  int quiet = 0;
  const int cap = 600;
  for (int m = 0; m < cap; ++m) {
    if (m > 0) {
      power *= q / static_cast<long double>(m);
      if (m <= anchor) {
        rg = low[m];
      } else {
        rg /= LComplex(nu + static_cast<double>(m));
      }
    }
    const LComplex term = power * rg;
    sum += term;
    if (m > anchor && static_cast<long double>(m) > std::abs(q)) {
      if (std::abs(term) <= 1e-19L * std::abs(sum)) {
        if (++quiet >= 2) break;
      } else {
        quiet = 0;
      }
    }
    if (m == cap - 1) throw NonConvergence("bessel: ascending series cap");
  }
  const Complex prefactor = std::exp(nu * std::log(half));
  return prefactor * Complex(static_cast<double>(sum.real()),
                             static_cast<double>(sum.imag()));
}

// Hankel large-argument sums P ~ sum (-1)^k a_{2k} / x^{2k} and
// Q ~ sum (-1)^k a_{2k+1} / x^{2k+1}, plus the plain and alternating sums
// of a_k / x^k used by I.
struct HankelSums {
  Complex p, q;
  Complex plain, alternating;
};

HankelSums hankel_sums(Complex nu, Complex x) {
  const Complex mu = 4.0 * nu * nu;
  HankelSums s{1.0, 0.0, 1.0, 1.0};
  Complex term = 1.0;
  double prev = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (static_cast<double>(k) * 8.0 * x);
    const double mag = std::abs(term);
    if (mag > prev && k > std::abs(nu)) break;  // asymptotic series turning
    prev = mag;
    const double sgn = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      s.p += sgn * term;
    } else {
      s.q += sgn * term;
    }
    s.plain += term;
    s.alternating += (k % 2 == 0) ? term : -term;
    if (mag < 1e-17) break;
  }
  return s;
}

void hankel_JY(Complex nu, Complex x, Complex* j, Complex* y) {
  const HankelSums s = hankel_sums(nu, x);
  const Complex chi = x - (nu / 2.0 + 0.25) * kPi;
  const Complex amp = std::sqrt(2.0 / (kPi * x));
  const Complex c = std::cos(chi);
  const Complex sn = std::sin(chi);
  if (j) *j = amp * (s.p * c - s.q * sn);
  if (y) *y = amp * (s.p * sn + s.q * c);
}

// Y by Schlafli's integral, valid for Re x > 0 and every order.
Complex schlafli_Y(Complex nu, Complex x) {
  using boost::math::quadrature::gauss;
  auto osc = [&](double th) { return std::sin(x * std::sin(th) - nu * th); };
  const int panels = 4 + static_cast<int>(std::abs(x) + std::abs(nu));
  const double width = kPi / panels;
  Complex first = 0.0;
  for (int i = 0; i < panels; ++i) {
    first += gauss<double, 20>::integrate(osc, i * width, (i + 1) * width);
  }

  const Complex cos_nu_pi = detail::cos_pi(nu);
  auto decay = [&](double t) {
    return (std::exp(nu * t) + std::exp(-nu * t) * cos_nu_pi) *
           std::exp(-x * std::sinh(t));
  };
  // Cut where x sinh t - |Re nu| t exceeds 45.
  double upper = 1.0;
  const double xr = x.real();
  const double nr = std::abs(nu.real());
  while (xr * std::sinh(upper) - nr * upper < 45.0) upper *= 1.25;
  boost::math::quadrature::tanh_sinh<double> ts;
  const Complex second = ts.integrate(decay, 0.0, upper, 1e-15);
  return (first - second) / kPi;
}

// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt by the trapezoid rule
// with step halving. Regular at integer orders.
Complex K_trapezoid(Complex nu, Complex x) {
  auto f = [&](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); };
  const double nr = std::abs(nu.real());
  const double peak = std::asinh(nr / std::max(x.real(), 1e-300));
  // Beyond `last` the integrand is below e^-50 of its scale.
  double last = 1.0;
  while (x.real() * std::cosh(last) - nr * last < 50.0) last += 1.0;

  // Sum f over t = offset + k * step, k >= 0, until past the peak and small.
  auto tail_sum = [&](double offset, double step, Complex scale_ref) {
    Complex acc = 0.0;
    for (int k = 0;; ++k) {
      const double t = offset + k * step;
      const Complex v = f(t);
      acc += v;
      const double ref = std::max(std::abs(acc), std::abs(scale_ref));
      if (t > peak && (std::abs(v) <= 1e-18 * ref || v == 0.0)) break;
      if (t > last) break;
    }
    return acc;
  };

  double h = 0.5;
  Complex total = h * (0.5 * f(0.0) + tail_sum(h, h, 0.0));
  for (int level = 0; level < 14; ++level) {
    const Complex mid = tail_sum(h / 2.0, h, total);
    const Complex next = total / 2.0 + (h / 2.0) * mid;
    h /= 2.0;
    const double diff = std::abs(next - total);
    total = next;
    if (diff <= 1e-10 * std::abs(total)) return total;
  }
  throw NonConvergence("bessel_K: trapezoid did not settle");
}

}  // namespace

Complex bessel_K(Complex nu, Complex x) {
  if (!(x.real() > 0.0)) throw DomainError("bessel_K: requires Re x > 0");
  if (nu.real() < 0.0) nu = -nu;
  if (nu.real() <= 2.0) return K_trapezoid(nu, x);
  const int n = static_cast<int>(std::floor(nu.real()));
  std::vector<Complex> ladder(static_cast<std::size_t>(n) + 1);
  bessel_K_ladder(nu - static_cast<double>(n), x, n + 1, ladder.data());
  return ladder.back();
}

void bessel_K_ladder(Complex nu0, Complex x, int count, Complex* out) {
  if (count <= 0) return;
  if (!(x.real() > 0.0)) throw DomainError("bessel_K: requires Re x > 0");
  out[0] = K_trapezoid(nu0.real() < 0.0 ? -nu0 : nu0, x);
  if (count == 1) return;
  const Complex nu1 = nu0 + 1.0;
  out[1] = K_trapezoid(nu1.real() < 0.0 ? -nu1 : nu1, x);
  for (int k = 1; k + 1 < count; ++k) {
    out[k + 1] = out[k - 1] + (2.0 * (nu0 + static_cast<double>(k)) / x) * out[k];
  }
}

Complex bessel_J(Complex nu, Complex x) {
  if (std::abs(x) <= kBesselAsymptoticCrossover) {
    return ascending_series(nu, x, -1.0);
  }
  if (x.real() < 0.0) {
    if (!is_integer_order(nu)) {
      throw DomainError("bessel_J: Re x < 0 beyond the series range");
    }
    const Complex v = bessel_J(nu, -x);
    return (static_cast<long long>(nu.real()) % 2 == 0) ? v : -v;
  }
  Complex j;
  hankel_JY(nu, x, &j, nullptr);
  return j;
}

Complex bessel_Y(Complex nu, Complex x) {
  if (!(x.real() > 0.0)) throw DomainError("bessel_Y: requires Re x > 0");
  if (std::abs(x) <= kBesselAsymptoticCrossover) return schlafli_Y(nu, x);
  Complex y;
  hankel_JY(nu, x, nullptr, &y);
  return y;
}

Complex bessel_I(Complex nu, Complex x) {
  if (std::abs(x) <= kBesselAsymptoticCrossover) {
    return ascending_series(nu, x, 1.0);
  }
  if (x.real() < 0.0) {
    if (!is_integer_order(nu)) {
      throw DomainError("bessel_I: Re x < 0 beyond the series range");
    }
    const Complex v = bessel_I(nu, -x);
    return (static_cast<long long>(nu.real()) % 2 == 0) ? v : -v;
  }
  const HankelSums s = hankel_sums(nu, x);
  const Complex root = std::sqrt(2.0 * kPi * x);
  const Complex lead = std::exp(x) / root * s.alternating;
  // Exponentially small companion; on the real axis take the average of the
  // two one-sided forms.
  const Complex i(0.0, 1.0);
  const Complex up = i * std::exp(i * kPi * nu);
  const Complex down = -i * std::exp(-i * kPi * nu);
  Complex factor;
  if (x.imag() > 0.0) {
    factor = up;
  } else if (x.imag() < 0.0) {
    factor = down;
  } else {
    factor = 0.5 * (up + down);
  }
  return lead + factor * std::exp(-x) / root * s.plain;
}

Complex bessel_K_half_integer(int n, Complex y) {
  if (n < 0) n = -n - 1;  // K_{-n-1/2} = K_{n+1/2}
  Complex sum = 1.0;
  Complex term = 1.0;
  for (int k = 0; k < n; ++k) {
    term *= static_cast<double>(n + k + 1) * static_cast<double>(n - k) /
            (static_cast<double>(k + 1) * 2.0 * y);
    sum += term;
  }
  return std::sqrt(kPi / (2.0 * y)) * std::exp(-y) * sum;
}

}  // namespace kzw::special
