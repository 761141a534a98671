#include <cmath>

#include "kzw/special.hpp"

namespace kzw::special {

Complex sigma_divisor(std::int64_t n, Complex z) {
  if (n < 1) throw DomainError("sigma_divisor: n must be positive");
  Complex sum = 0.0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    sum += std::exp(-z * std::log(static_cast<double>(d)));
    const std::int64_t other = n / d;
    if (other != d) sum += std::exp(-z * std::log(static_cast<double>(other)));
  }
  return sum;
}

std::int64_t divisor_count(std::int64_t n) {
  if (n < 1) throw DomainError("divisor_count: n must be positive");
  std::int64_t count = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) count += (n / d == d) ? 1 : 2;
  }
  return count;
}

}  // namespace kzw::special
