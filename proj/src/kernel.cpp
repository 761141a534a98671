#include <cmath>

#include "kzw/special.hpp"
#include "trig.hpp"

namespace kzw::special {

KernelSample koshliakov_kernel(Complex z, double u) {
  if (!(std::abs(z.real()) < 0.5)) {
    throw DomainError("koshliakov_kernel: requires -1/2 < Re z < 1/2");
  }
  if (!(u > 0.0)) throw DomainError("koshliakov_kernel: requires u > 0");
  const Complex nu = 2.0 * z;
  const double arg = 4.0 * std::sqrt(u);
  const Complex m = (2.0 / kPi) * bessel_K(nu, arg) - bessel_Y(nu, arg);
  KernelSample out;
  out.m_part = detail::cos_pi(z) * m;
  out.j_part = -detail::sin_pi(z) * bessel_J(nu, arg);
  out.value = out.m_part + out.j_part;
  return out;
}

}  // namespace kzw::special
