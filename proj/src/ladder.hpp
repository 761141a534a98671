#pragma once

#include <cmath>
#include <vector>

#include "kzw/special.hpp"

namespace kzw::detail {

// K_{z+k}(y) for every integer k. With mu = z - round(Re z), the orders
// mu + j (j >= 0) and -mu + j (j >= 0) are both reached by upward recurrence
// from |Re| <= 1/2, the stable direction for K.
class KLadder {
 public:
  KLadder(Complex z, Complex y) : y_(y) {
    shift_ = static_cast<int>(std::round(z.real()));
    mu_ = z - static_cast<double>(shift_);
  }

  Complex at(int k) {
    const int j = k + shift_;
    if (j >= 0) return get(up_, mu_, j);
    return get(down_, -mu_, -j);
  }

  Complex argument() const { return y_; }

 private:
  Complex get(std::vector<Complex>& v, Complex base, int j) {
    if (static_cast<int>(v.size()) <= j) extend(v, base, j + 1);
    return v[static_cast<std::size_t>(j)];
  }

  void extend(std::vector<Complex>& v, Complex base, int need) {
    if (v.empty()) {
      v.push_back(special::bessel_K(base, y_));
      v.push_back(special::bessel_K(base + 1.0, y_));
    }
    while (static_cast<int>(v.size()) < need) {
      const std::size_t i = v.size() - 1;
      const Complex next = v[i - 1] + (2.0 * (base + static_cast<double>(i)) / y_) * v[i];
      if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) {
        throw NonConvergence("K ladder overflow");
      }
      v.push_back(next);
    }
  }

  Complex y_;
  Complex mu_;
  int shift_ = 0;
  std::vector<Complex> up_;
  std::vector<Complex> down_;
};

}  // namespace kzw::detail
