#include "kzw/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <vector>

namespace kzw::quad {

QuadResult finite(const RealFn& f, double a, double b, double tol, int max_levels) {
  QuadResult r;
  auto counted = [&](double t) {
    ++r.evals;
    return f(t);
  };
  boost::math::quadrature::tanh_sinh<double> ts(static_cast<std::size_t>(max_levels));
  double err = 0.0;
  r.value = ts.integrate(counted, a, b, tol, &err);
  r.err_est = err * std::abs(r.value);
  return r;
}

QuadResult half_line(const RealFn& f, double a, double tol, int max_levels) {
  QuadResult r;
  auto counted = [&](double t) {
    ++r.evals;
    return f(t + a);
  };
  boost::math::quadrature::exp_sinh<double> es(static_cast<std::size_t>(max_levels));
  double err = 0.0;
  r.value = es.integrate(counted, 0.0, std::numeric_limits<double>::infinity(), tol, &err);
  r.err_est = err * std::abs(r.value);
  return r;
}

QuadResult smooth(const RealFn& f, double a, double b, double tol) {
  QuadResult r;
  auto counted = [&](double t) {
    ++r.evals;
    return f(t);
  };
  double err = 0.0;
  r.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      counted, a, b, 8, tol, &err);
  r.err_est = err;
  return r;
}

Extrapolation wynn_epsilon(std::span<const Complex> partial_sums) {
  const std::size_t n = partial_sums.size();
  if (n == 0) return {};
  if (n < 3) {
    return {partial_sums.back(),
            n == 2 ? std::abs(partial_sums[1] - partial_sums[0]) : 0.0};
  }
  // prev holds column j-1, cur column j; each column is one shorter.
  std::vector<Complex> prev(n + 1, 0.0);
  std::vector<Complex> cur(partial_sums.begin(), partial_sums.end());
  Complex best = cur.back();
  Complex before = cur[n - 2];
  for (std::size_t j = 1; j < n; ++j) {
    std::vector<Complex> next(n - j);
    bool degenerate = false;
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      const Complex diff = cur[k + 1] - cur[k];
      if (diff == 0.0) {
        degenerate = true;
        break;
      }
      next[k] = prev[k + 1] + 1.0 / diff;
    }
    if (degenerate) break;
    if (j % 2 == 0) {
      before = best;
      best = next.back();
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {best, std::abs(best - before)};
}

OscillatoryResult oscillatory_tail(const RealFn& f, double a, double half_period,
                                   int max_chunks, double rel_tol, double abs_tol) {
  constexpr std::size_t kWindow = 31;
  OscillatoryResult out;
  std::vector<Complex> sums;
  Complex running = 0.0;
  Complex last_estimate = 0.0;
  int agreeing = 0;
  for (int k = 0; k < max_chunks; ++k) {
    const double lo = a + k * half_period;
    running += smooth(f, lo, lo + half_period, 1e-13).value;
    sums.push_back(running);
    out.chunks = k + 1;
    if (sums.size() < 6) continue;
    const std::size_t start = sums.size() > kWindow ? sums.size() - kWindow : 0;
    const Extrapolation ex = wynn_epsilon(
        std::span<const Complex>(sums.data() + start, sums.size() - start));
    const double change = std::abs(ex.value - last_estimate);
    last_estimate = ex.value;
    out.value = ex.value;
    out.err_est = std::max(change, ex.err_est);
    if (out.err_est <= std::max(rel_tol * std::abs(ex.value), abs_tol)) {
      if (++agreeing >= 2) {
        out.converged = true;
        return out;
      }
    } else {
      agreeing = 0;
    }
  }
  return out;
}

}  // namespace kzw::quad
