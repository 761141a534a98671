#include "kzw/kzw.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "kzw/quadrature.hpp"
#include "kzw/special.hpp"
#include "ladder.hpp"

namespace kzw {
namespace {

namespace sp = kzw::special;

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Results with a relative error estimate above this are not returned.
constexpr double kUsable = 1e-6;

Evaluation finish(Complex value, double err, Method m, long work,
                  const EvalConfig& cfg) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()) ||
      !std::isfinite(err)) {
    throw NonConvergence(std::string(to_string(m)) + ": non-finite result");
  }
  Evaluation e;
  e.value = value;
  e.err_est = err;
  e.method = m;
  e.work = work;
  e.converged = err <= cfg.target(std::abs(value));
  if (!e.converged && err > std::max(kUsable * std::abs(value), cfg.abs_tol)) {
    throw NonConvergence(std::string(to_string(m)) + ": tolerance not reached");
  }
  return e;
}

bool is_zero(Complex z) { return std::abs(z) < 1e-10; }

// Trapezoid rule on [lo, hi] with step halving from h0. Returns the last
// estimate and |T(h) - T(h/2)| as the error, with a rounding floor from the
// absolute sum.
struct TrapResult {
  Complex value;
  double err;
  long evals;
};

TrapResult halving_trapezoid(const std::function<Complex(double)>& f, double lo,
                             double hi, double h0, int max_levels,
                             const std::function<double(Complex)>& target) {
  long evals = 0;
  int n = std::max(2, static_cast<int>(std::ceil((hi - lo) / h0)));
  double h = (hi - lo) / n;
  Complex sum = 0.0;
  double abs_sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    const Complex v = f(lo + k * h) * ((k == 0 || k == n) ? 0.5 : 1.0);
    sum += v;
    abs_sum += std::abs(v);
    ++evals;
  }
  Complex est = h * sum;
  double err = std::numeric_limits<double>::infinity();
  for (int level = 0; level < max_levels; ++level) {
    Complex mid = 0.0;
    for (int k = 0; k < n; ++k) {
      const Complex v = f(lo + (k + 0.5) * h);
      mid += v;
      abs_sum += std::abs(v);
      ++evals;
    }
    sum += mid;
    n *= 2;
    h /= 2.0;
    const Complex next = h * sum;
    const double floor = 8.0 * kEps * h * abs_sum;
    const double diff = std::abs(next - est);
    err = std::max(diff, floor);
    est = next;
    if (err <= target(est) || diff <= floor) break;
  }
  return {est, err, evals};
}

// Smallest |v| range outside which |f| stays below `ratio` times its peak,
// scanning in unit-ish steps from the origin.
double scan_extent(const std::function<double(double)>& mag, double dir,
                   double step, double cap, double ratio, double peak_hint) {
  double peak = peak_hint;
  double v = 0.0;
  int quiet = 0;
  while (std::abs(v) < cap) {
    v += dir * step;
    const double m = mag(v);
    peak = std::max(peak, m);
    if (m <= ratio * peak) {
      if (++quiet >= 2) return std::abs(v);
    } else {
      quiet = 0;
    }
  }
  return cap;
}

}  // namespace

KzwPoint::KzwPoint(Complex z_, Complex w_, Complex x_) : z(z_), w(w_), x(x_) {
  if (x == 0.0 || !(std::abs(std::arg(x)) < kPi / 4.0)) {
    throw DomainError("K_{z,w}(x) requires |arg x| < pi/4");
  }
}

AsymptoticTerms asymptotic_terms(Complex z, Complex w, int order) {
  if (order < 0 || order > 1) throw DomainError("asymptotic order must be 0 or 1");
  AsymptoticTerms t;
  t.P = {1.0};
  t.R = {1.0};
  if (order == 1) {
    const Complex z2 = z * z, w2 = w * w;
    t.P.push_back((32.0 * z2 - 3.0 * w2 - 8.0) / 128.0);
    t.Q.push_back(w / 8.0);
    t.R.push_back((4.0 * z2 - 1.0) * (2.0 - w2) / 32.0);
  }
  return t;
}

Evaluation eval_integral(const KzwPoint& p, const EvalConfig& cfg) {
  cfg.validate();
  const Complex X = p.x / 2.0;
  const Complex X2 = X * X;
  const double r = std::sqrt(std::abs(X));
  const Complex pref = std::exp(-p.z * std::log(X));
  const Complex two_z = 2.0 * p.z;
  auto f = [&](double v) -> Complex {
    const double t = r * std::exp(v);
    const Complex expo = -t * t - X2 / (t * t) + two_z * std::log(t);
    if (expo.real() < -745.0) return 0.0;
    return std::exp(expo) * std::cos(p.w * t) * std::cos(p.w * X / t);
  };
  auto mag = [&](double v) { return std::abs(f(v)); };
  const double peak = mag(0.0);
  const double hi = scan_extent(mag, 1.0, 0.5, 40.0, 1e-22, peak);
  const double lo = -scan_extent(mag, -1.0, 0.5, 40.0, 1e-22, peak);
  const double apref = std::abs(pref);
  const TrapResult tr = halving_trapezoid(
      f, lo, hi, 0.5, cfg.max_quad_levels,
      [&](Complex est) { return cfg.target(std::abs(est) * apref) / apref; });
  return finish(pref * tr.value, apref * tr.err, Method::integral, tr.evals, cfg);
}

Evaluation eval_mellin_barnes(const KzwPoint& p, const EvalConfig& cfg) {
  cfg.validate();
  const double c = std::max(std::abs(p.z.real()), 0.0) + 0.5;
  const Complex q = -p.w * p.w / 4.0;
  const Complex log_x = std::log(p.x);
  const double log2 = std::log(2.0);
  auto g = [&](double tau) -> Complex {
    const Complex s(c, tau);
    const Complex a1 = (s - p.z) / 2.0, a2 = (s + p.z) / 2.0;
    return sp::gamma(a1) * sp::gamma(a2) * sp::hyp1f1(a1, 0.5, q) *
           sp::hyp1f1(a2, 0.5, q) * std::exp((s - 2.0) * log2 - s * log_x);
  };
  auto mag = [&](double tau) { return std::abs(g(tau)); };
  const double peak = mag(0.0);
  const double cap = cfg.contour_height_cap;
  const double ratio = 1e-18;
  const double hi = scan_extent(mag, 1.0, 1.0, cap, ratio, peak);
  const double lo = -scan_extent(mag, -1.0, 1.0, cap, ratio, peak);
  // Tail beyond a capped end, bounded by the Gamma envelope e^{-pi |t| / 4}.
  double truncation = 0.0;
  if (hi >= cap) truncation += mag(hi) * 4.0 / kPi;
  if (-lo >= cap) truncation += mag(lo) * 4.0 / kPi;
  const double scale = 1.0 / (2.0 * kPi);
  const TrapResult tr = halving_trapezoid(
      g, lo, hi, 0.25, cfg.max_quad_levels,
      [&](Complex est) { return cfg.target(std::abs(est) * scale) / scale; });
  return finish(scale * tr.value, scale * (tr.err + truncation),
                Method::mellin_barnes, tr.evals, cfg);
}

Evaluation eval_bilateral_series(const KzwPoint& p, const EvalConfig& cfg) {
  cfg.validate();
  if (!(std::abs(p.z.real()) < 0.5)) {
    throw DomainError("bilateral series requires |Re z| < 1/2");
  }
  const Complex X = p.x / 2.0;
  // I_{2n} + J_{2n} is even, so any square root of w^2 X will do; this one
  // keeps the result bitwise even in w.
  const Complex y = 2.0 * std::sqrt(p.w * p.w * X);
  detail::KLadder k(p.z, 2.0 * X);
  auto ij = [&](int n) { return sp::bessel_I(2.0 * n, y) + sp::bessel_J(2.0 * n, y); };
  Complex sum = 0.5 * k.at(0) * ij(0);
  double abs_sum = std::abs(sum);
  double prev = abs_sum;
  double tail = std::numeric_limits<double>::infinity();
  int n = 1;
  for (; n <= cfg.max_series_terms; ++n) {
    const Complex term = 0.5 * ((n % 2 == 0) ? 1.0 : -1.0) * (k.at(n) + k.at(-n)) * ij(n);
    sum += term;
    const double a = std::abs(term);
    abs_sum += a;
    if (n > 2 && n > std::abs(y)) {
      const double rho = prev > 0.0 ? a / prev : 0.0;
      if (rho < 0.5) {
        tail = a * rho / (1.0 - rho);
        if (tail <= 0.1 * cfg.target(std::abs(sum))) break;
      }
    }
    if (a == 0.0 && n > std::abs(y)) {
      tail = 0.0;
      break;
    }
    prev = a;
  }
  if (n > cfg.max_series_terms) throw NonConvergence("bilateral series: term cap");
  return finish(sum, tail + 64.0 * kEps * abs_sum, Method::bilateral_series, n, cfg);
}

Evaluation eval_double_sum(const KzwPoint& p, const EvalConfig& cfg) {
  cfg.validate();
  const Complex X = p.x / 2.0;
  const Complex y = -p.w * p.w * X;
  detail::KLadder k(p.z, 2.0 * X);
  // c[n] = y^n / (2n)!
  std::vector<Complex> c{1.0};
  Complex sum = 0.0;
  double abs_sum = 0.0;
  double prev = 0.0;
  double tail = std::numeric_limits<double>::infinity();
  long work = 0;
  int j = 0;
  for (; j <= cfg.max_series_terms; ++j) {
    if (j > 0) c.push_back(c.back() * y / (static_cast<double>(2 * j - 1) * (2 * j)));
    Complex diag = 0.0;
    double mag = 0.0;
    for (int n = 0; n <= j; ++n) {
      const Complex term = c[n] * c[j - n] * k.at(2 * n - j);
      diag += term;
      mag += std::abs(term);
      ++work;
    }
    sum += diag;
    abs_sum += mag;
    if (p.w == 0.0) {
      tail = 0.0;
      break;
    }
    if (j >= 3) {
      const double rho = prev > 0.0 ? mag / prev : 0.0;
      if (rho < 0.5) {
        tail = mag * rho / (1.0 - rho);
        if (tail <= 0.1 * cfg.target(std::abs(sum))) break;
      }
    }
    prev = mag;
  }
  if (j > cfg.max_series_terms) throw NonConvergence("double sum: term cap");
  return finish(sum, tail + 64.0 * kEps * abs_sum, Method::double_sum, work, cfg);
}

Evaluation eval_basset_z0(Complex w, Complex x, const EvalConfig& cfg) {
  cfg.validate();
  KzwPoint check(0.0, w, x);
  const Complex w2 = w * w, x2 = x * x;
  auto f = [&](double u) -> Complex {
    const Complex d = x2 + u * u;
    return std::exp(-w2 * x2 / (2.0 * d)) * std::cos(w2 * x * u / (2.0 * d)) *
           std::cos(u) / std::sqrt(d);
  };
  const quad::QuadResult head = quad::smooth(f, 0.0, kPi / 2.0, 1e-14);
  const quad::OscillatoryResult tail = quad::oscillatory_tail(
      f, kPi / 2.0, kPi, cfg.oscillatory_period_cap, cfg.rel_tol, cfg.abs_tol);
  const Complex value = head.value + tail.value;
  const double err = head.err_est + tail.err_est + 16.0 * kEps * std::abs(value);
  return finish(value, err, Method::basset_z0, head.evals + 31L * tail.chunks, cfg);
}

Evaluation eval_laplace_series(const KzwPoint& p, const EvalConfig& cfg) {
  cfg.validate();
  if (!(p.z.real() > -0.5)) throw DomainError("Laplace series requires Re z > -1/2");
  const Complex x = p.x, z = p.z;
  const Complex outer = -p.w * p.w * x / 2.0;
  const Complex inner_arg = -p.w * p.w * x * x / 4.0;
  const Complex zh = z - 0.5;
  Complex sum = 0.0;
  double err = 0.0;
  long work = 0;
  Complex coeff = 1.0;  // outer^n / (2n)!
  double prev = 0.0;
  int n = 0;
  bool done = false;
  for (; n <= cfg.max_series_terms && !done; ++n) {
    if (n > 0) coeff *= outer / (static_cast<double>(2 * n - 1) * (2 * n));
    auto f = [&](double t) -> Complex {
      const Complex arg = x * (2.0 * t + 1.0);
      if (arg.real() > 700.0) return 0.0;
      Complex v = std::exp(zh * (std::log(t) + std::log1p(t)) +
                           (0.5 - n) * std::log1p(2.0 * t)) *
                  sp::bessel_K_half_integer(n, arg);
      if (inner_arg != 0.0) v *= sp::hyp0f2(0.5, z + 0.5, inner_arg * t * (t + 1.0));
      return v;
    };
    const quad::QuadResult in = quad::half_line(f, 0.0, 1e-14, cfg.max_quad_levels);
    work += in.evals;
    const Complex term = coeff * in.value;
    sum += term;
    err += std::abs(coeff) * in.err_est;
    const double a = std::abs(term);
    if (p.w == 0.0) break;
    if (n >= 2) {
      const double rho = prev > 0.0 ? a / prev : 0.0;
      if (rho < 0.5) {
        const double tail = a * rho / (1.0 - rho);
        if (tail <= 0.1 * cfg.target(std::abs(sum))) {
          err += tail;
          done = true;
        }
      }
    }
    prev = a;
  }
  if (!done && p.w != 0.0) throw NonConvergence("Laplace series: term cap");
  const Complex pref = std::exp((z + 0.5) * std::log(2.0 * x)) * sp::rgamma(z + 0.5);
  return finish(pref * sum, std::abs(pref) * err + 16.0 * kEps * std::abs(pref * sum),
                Method::laplace_series, work, cfg);
}

Evaluation eval_double_integral(const KzwPoint& p, const EvalConfig& cfg) {
  cfg.validate();
  if (!(p.z.real() > -1.0)) throw DomainError("double integral requires Re z > -1");
  const Complex x = p.x, z = p.z;
  const Complex a = x / 2.0;
  const Complex w2x = p.w * p.w * x / 8.0;
  // y = v^power removes the y^z endpoint singularity.
  const double power = 1.0 / (1.0 + z.real());
  long work = 0;
  double inner_err = 0.0;
  auto inner = [&](Complex root_y) {
    // t = tau^2 turns t^{-1/2} dt into 2 dtau.
    auto g = [&](double tau) -> Complex {
      const Complex e = -2.0 * std::sqrt(tau * tau + a) * root_y;
      if (e.real() < -700.0) return 0.0;
      Complex v = 2.0 * std::exp(e);
      if (w2x != 0.0) v *= sp::hyp0f2(0.5, 0.5, -w2x * tau * tau);
      return v;
    };
    const quad::QuadResult r = quad::half_line(g, 0.0, 1e-12, cfg.max_quad_levels);
    work += r.evals;
    inner_err = std::max(inner_err, r.err_est / std::max(std::abs(r.value), 1e-300));
    return r.value;
  };
  auto outer = [&](double v) -> Complex {
    if (v == 0.0) return 0.0;
    const double y = std::pow(v, power);
    const Complex root_y = std::sqrt(y + a);
    if ((-2.0 * std::sqrt(a) * root_y).real() < -700.0) return 0.0;
    // y^z * dy/dv, combined in logs so tiny v cannot underflow y to zero.
    const double lv = std::log(v);
    Complex val = power * std::exp(z * power * lv + (power - 1.0) * lv) / root_y;
    if (w2x != 0.0) val *= sp::hyp0f2(0.5, 1.0 + z, -w2x * y);
    return val * inner(root_y);
  };
  const quad::QuadResult o = quad::half_line(outer, 0.0, 1e-11, cfg.max_quad_levels);
  const Complex pref = 0.5 * sp::rgamma(1.0 + z);
  const Complex value = pref * o.value;
  const double err = std::abs(pref) * o.err_est + inner_err * std::abs(value) +
                     16.0 * kEps * std::abs(value);
  return finish(value, err, Method::double_integral, work, cfg);
}

Evaluation asymptotic_large_x(const KzwPoint& p, int order) {
  const AsymptoticTerms terms = asymptotic_terms(p.z, p.w, order);
  const Complex X = p.x / 2.0;
  const Complex rX = std::sqrt(X);
  const Complex lead = 0.25 * std::sqrt(kPi / X) * std::exp(-2.0 * X);
  const Complex cs = std::cos(2.0 * p.w * rX), sn = std::sin(2.0 * p.w * rX);
  const Complex damp = std::exp(-p.w * p.w / 4.0);
  Complex P = terms.P[0], R = terms.R[0], Q = 0.0;
  if (order == 1) {
    P += terms.P[1] / X;
    R += terms.R[1] / X;
    Q += terms.Q[0] / rX;
  }
  Evaluation e;
  e.value = lead * (cs * P - sn * Q + damp * R);
  e.method = Method::asymptotic_large_x;
  e.work = 1;
  // First omitted term. For order 1 the next coefficients are not available;
  // they are sized by the square of the largest first-order coefficient.
  const double scale = std::abs(lead) * (std::abs(cs) + std::abs(sn) + std::abs(damp));
  const AsymptoticTerms t1 = asymptotic_terms(p.z, p.w, 1);
  if (order == 0) {
    const double c1 = std::max({std::abs(t1.P[1]), std::abs(t1.R[1])});
    e.err_est = scale * (std::abs(t1.Q[0]) / std::abs(rX) + c1 / std::abs(X));
  } else {
    const double c1 = std::max({std::abs(t1.P[1]), std::abs(t1.R[1]), std::abs(t1.Q[0])});
    e.err_est = scale * (c1 * c1 / std::abs(X * X) + c1 * c1 / std::abs(X * rX));
  }
  const EvalConfig cfg;
  e.converged = e.err_est <= cfg.target(std::abs(e.value));
  return e;
}

Evaluation asymptotic_small_x(const KzwPoint& p) {
  Evaluation e;
  e.method = Method::asymptotic_small_x;
  e.work = 1;
  const Complex q = -p.w * p.w / 4.0;
  if (is_zero(p.z)) {
    e.value = -std::log(p.x) - (p.w * p.w / 2.0) * sp::hyp2f2(1.0, 1.0, 1.5, 2.0, q);
    // The expansion continues with the constant log 2 - gamma.
    e.err_est = std::abs(std::log(2.0) - kEulerGamma);
  } else if (p.z.real() > 0.0) {
    const Complex half_x = p.x / 2.0;
    e.value = 0.5 * sp::gamma(p.z) * std::exp(-p.z * std::log(half_x)) *
              sp::hyp1f1(p.z, 0.5, q);
    try {
      // Next pole of the Mellin integrand, at s = -z.
      e.err_est = std::abs(0.5 * sp::gamma(-p.z) * std::exp(p.z * std::log(half_x)) *
                           sp::hyp1f1(-p.z, 0.5, q));
    } catch (const PoleError&) {
      e.err_est = std::abs(e.value) * std::abs(p.x * p.x * std::log(p.x));
    }
    const double z_only = std::abs(e.value) * std::abs(p.x * p.x);
    e.err_est = std::max(e.err_est, z_only);
  } else {
    throw DomainError("small-x asymptotics require Re z > 0 or z = 0");
  }
  const EvalConfig cfg;
  e.converged = e.err_est <= cfg.target(std::abs(e.value));
  return e;
}

Evaluation eval_auto(const KzwPoint& p, const EvalConfig& cfg) {
  cfg.validate();
  const double ax = std::abs(p.x);
  if (ax >= 30.0) {
    Evaluation a = asymptotic_large_x(p, 1);
    a.converged = a.err_est <= cfg.target(std::abs(a.value));
    if (a.converged) return a;
    return eval_integral(p, cfg);
  }
  if (ax <= 1e-3 && (p.z.real() > 0.0 || is_zero(p.z))) {
    Evaluation s = asymptotic_small_x(p);
    s.converged = s.err_est <= cfg.target(std::abs(s.value));
    return s;
  }
  try {
    Evaluation d = eval_double_sum(p, cfg);
    if (d.converged) return d;
  } catch (const NumericError&) {
  }
  return eval_integral(p, cfg);
}

Comparison compare_methods(const KzwPoint& p, const EvalConfig& cfg) {
  Comparison out;
  auto run = [&](Method m, const std::function<Evaluation()>& fn) {
    MethodOutcome o{m, std::nullopt, {}};
    try {
      o.eval = fn();
    } catch (const NumericError& e) {
      o.error = e.what();
    }
    out.outcomes.push_back(std::move(o));
  };
  run(Method::integral, [&] { return eval_integral(p, cfg); });
  run(Method::mellin_barnes, [&] { return eval_mellin_barnes(p, cfg); });
  if (std::abs(p.z.real()) < 0.5) {
    run(Method::bilateral_series, [&] { return eval_bilateral_series(p, cfg); });
  }
  run(Method::double_sum, [&] { return eval_double_sum(p, cfg); });
  if (is_zero(p.z)) run(Method::basset_z0, [&] { return eval_basset_z0(p.w, p.x, cfg); });
  if (p.z.real() > -0.5) {
    run(Method::laplace_series, [&] { return eval_laplace_series(p, cfg); });
  }
  if (p.z.real() > -1.0) {
    run(Method::double_integral, [&] { return eval_double_integral(p, cfg); });
  }
  for (std::size_t i = 0; i < out.outcomes.size(); ++i) {
    for (std::size_t j = i + 1; j < out.outcomes.size(); ++j) {
      const auto& a = out.outcomes[i].eval;
      const auto& b = out.outcomes[j].eval;
      if (a && b) {
        out.max_pairwise_rel = std::max(out.max_pairwise_rel, rel_diff(a->value, b->value));
      }
    }
  }
  return out;
}

}  // namespace kzw
