#include <cmath>
#include <limits>
#include <string>

#include "kzw/special.hpp"

namespace kzw::special {
namespace {

constexpr double kSeriesEps = 1e-17;

bool is_nonpositive_integer(Complex c) {
  return c.imag() == 0.0 && c.real() <= 0.0 && c.real() == std::round(c.real());
}

// Generic pFq summation; `ratio(n)` returns term_{n+1}/term_n.
template <class Ratio>
Complex sum_series(Ratio ratio, int max_terms, const char* name) {
  Complex sum = 1.0;
  Complex term = 1.0;
  int quiet = 0;
  for (int n = 0; n < max_terms; ++n) {
    term *= ratio(n);
    sum += term;
    if (term == 0.0) return sum;
    if (std::abs(term) <= kSeriesEps * std::abs(sum)) {
      // Require two consecutive small terms so a passing near-zero partial
      // term does not stop the series early.
      if (++quiet >= 2) return sum;
    } else {
      quiet = 0;
    }
  }
  throw NonConvergence(std::string(name) + ": term cap reached");
}

}  // namespace

Complex hyp1f1_series(Complex a, Complex c, Complex x, int max_terms) {
  if (is_nonpositive_integer(c)) throw PoleError("hyp1f1: c is a pole");
  return sum_series(
      [&](int n) {
        const double dn = n;
        return (a + dn) * x / ((c + dn) * (dn + 1.0));
      },
      max_terms, "hyp1f1");
}

Complex hyp1f1(Complex a, Complex c, Complex x, int max_terms) {
  if (x.real() < 0.0 && std::abs(x) > 1.0) {
    return std::exp(x) * hyp1f1_series(c - a, c, -x, max_terms);
  }
  return hyp1f1_series(a, c, x, max_terms);
}

Complex hyp0f2(Complex c1, Complex c2, Complex x, int max_terms) {
  if (is_nonpositive_integer(c1) || is_nonpositive_integer(c2)) {
    throw PoleError("hyp0f2: lower parameter is a pole");
  }
  return sum_series(
      [&](int n) {
        const double dn = n;
        return x / ((c1 + dn) * (c2 + dn) * (dn + 1.0));
      },
      max_terms, "hyp0f2");
}

Complex hyp2f2(Complex a1, Complex a2, Complex c1, Complex c2, Complex x,
               int max_terms) {
  if (is_nonpositive_integer(c1) || is_nonpositive_integer(c2)) {
    throw PoleError("hyp2f2: lower parameter is a pole");
  }
  return sum_series(
      [&](int n) {
        const double dn = n;
        return (a1 + dn) * (a2 + dn) * x / ((c1 + dn) * (c2 + dn) * (dn + 1.0));
      },
      max_terms, "hyp2f2");
}

}  // namespace kzw::special
