#include "kzw/identities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>

#include "kzw/kzw.hpp"
#include "kzw/quadrature.hpp"
#include "kzw/special.hpp"
#include "ladder.hpp"
#include "report.hpp"

namespace kzw {

namespace sp = special;

namespace {

constexpr Complex kI{0.0, 1.0};

using LComplex = std::complex<long double>;
using detail::make_report;

// Top-level report carrying the worst of `parts`.
IdentityReport worst_of(std::string name, std::vector<std::pair<std::string, Complex>> params,
                        std::vector<IdentityReport> parts, double tol) {
  IdentityReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.tolerance = tol;
  r.pass = true;
  const IdentityReport* worst = nullptr;
  for (const IdentityReport& p : parts) {
    r.pass = r.pass && p.pass;
    r.work += p.work;
    if (!worst || p.rel_residual > worst->rel_residual) worst = &p;
  }
  if (worst) {
    r.lhs = worst->lhs;
    r.rhs = worst->rhs;
    r.abs_residual = worst->abs_residual;
    r.rel_residual = worst->rel_residual;
  }
  r.parts = std::move(parts);
  return r;
}

bool near_integer(Complex z, double eps) {
  return std::abs(z - std::round(z.real())) < eps;
}

// Envelope of |K_{nu,w}(2X)| from the large-argument expansion, doubled.
double large_x_envelope(Complex nu, Complex w, double X) {
  const AsymptoticTerms t = asymptotic_terms(nu, w, 1);
  const double rX = std::sqrt(X);
  const double c = std::abs(std::cos(2.0 * w * rX));
  const double s = std::abs(std::sin(2.0 * w * rX));
  const double d = std::abs(std::exp(-w * w / 4.0));
  const double bracket = c * (1.0 + std::abs(t.P[1]) / X) + s * std::abs(t.Q[0]) / rX +
                         d * (1.0 + std::abs(t.R[1]) / X);
  return 2.0 * 0.25 * std::sqrt(kPi / X) * std::exp(-2.0 * X) * bracket;
}

// Bound on sum_{m > n} |sigma_{-z}(m) m^{z/2} K_{z/2,w}(2 m y)|.
double divisor_tail(Complex z, Complex w, double y, int n) {
  const double rz = z.real();
  double tail = 0.0;
  for (int m = n + 1;; ++m) {
    const double weight = sp::sigma_divisor(m, rz).real() * std::pow(m, rz / 2.0);
    const double term = weight * large_x_envelope(z / 2.0, w, m * y);
    tail += term;
    if (term <= 1e-20 * tail || term < 1e-300) break;
  }
  return tail;
}

// G(y) = -(1/2) sum_{k>=1} H_k y^k / k!, H_k = sum_{j<k} 1/(j + 1/2).
Complex g_correction(Complex y) {
  Complex sum = 0.0, power = 1.0;
  double harmonic = 0.0;
  for (int k = 1; k < 500; ++k) {
    harmonic += 1.0 / (k - 0.5);
    power *= y / static_cast<double>(k);
    const Complex term = harmonic * power;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum) && k > std::abs(y)) break;
  }
  return -0.5 * sum;
}

// Gamma-zeta terms of the Ramanujan-Guinand form at a regular z.
Complex rg_general_rhs_regular(Complex z, Complex w, double a, double b) {
  const Complex q = w * w / 4.0;
  const Complex u = (1.0 - z) / 2.0, v = (1.0 + z) / 2.0;
  const Complex first = 0.25 * sp::gamma(z / 2.0) * sp::zeta(z) *
                        (std::pow(b, u) * sp::hyp1f1(u, 0.5, q) - std::pow(a, u) * sp::hyp1f1(u, 0.5, -q));
  const Complex second = 0.25 * sp::gamma(-z / 2.0) * sp::zeta(-z) *
                         (std::pow(b, v) * sp::hyp1f1(v, 0.5, q) - std::pow(a, v) * sp::hyp1f1(v, 0.5, -q));
  return first + second;
}

// The same, continued to integer z (where individual factors have poles) by
// a symmetric Richardson limit with step 1e-4.
Complex rg_general_rhs(Complex z, Complex w, double a, double b) {
  if (!near_integer(z, 1e-6)) return rg_general_rhs_regular(z, w, a, b);
  const double h = 1e-4;
  auto mean = [&](double step) {
    return 0.5 * (rg_general_rhs_regular(z + step, w, a, b) + rg_general_rhs_regular(z - step, w, a, b));
  };
  return (4.0 * mean(h / 2.0) - mean(h)) / 3.0;
}

// 2 int_0^inf g(t) k(z, x t) dt with t = u^2 / x, which turns the kernel's
// oscillation into cos(4u - phase). g must decay like exp(-2 gamma t).
struct KernelIntegral {
  Complex value{};
  double err_est = 0.0;
  long evals = 0;
};

KernelIntegral kernel_transform(Complex z, double x, const std::function<Complex(double)>& g,
                                double u_max) {
  // Below u_floor the integrand behaves like u^{1 - 4|Re z|}; its share is
  // under u_floor^{2 - 4|Re z|}.
  const double u_floor = 1e-35;
  auto integrand = [&](double u) -> Complex {
    if (u < u_floor) return 0.0;
    const double t = u * u / x;
    return u * g(t) * sp::koshliakov_kernel(z, u * u).value;
  };
  KernelIntegral out;
  const double chunk = kPi / 4.0;
  const quad::QuadResult head = quad::finite(integrand, 0.0, chunk, 1e-14);
  out.value += head.value;
  out.err_est += head.err_est;
  out.evals += head.evals;
  for (double a = chunk; a < u_max; a += chunk) {
    const quad::QuadResult r = quad::smooth(integrand, a, a + chunk, 1e-14);
    out.value += r.value;
    out.err_est += r.err_est;
    out.evals += r.evals;
  }
  out.value *= 4.0 / x;
  out.err_est *= 4.0 / x;
  return out;
}

// u beyond which |K_{z,w'}(2 gamma t)| < e^{-90} relative to its scale.
double kernel_u_max(Complex w, double gamma, double x) {
  const double im = std::abs(w.imag()) + std::abs(w.real());
  const double s = (im + std::sqrt(im * im + 180.0)) / 2.0;
  return std::sqrt(x * s * s / gamma);
}

// Sum over j of (-x)^j d^k/dw^k w^{2j} sum_{n+m=j} K_{n-m+z}(2x) / ((2n)! (2m)!),
// accumulated in long double so that finite differences in w stay clean.
Complex w_derivative(detail::KLadder& ladder, Complex w, Complex x, int k, const EvalConfig& cfg) {
  if (k % 2 == 1 && w == 0.0) return 0.0;
  const LComplex lx(x.real(), x.imag()), lw(w.real(), w.imag());
  // a[n] = (-x)^n / (2n)!
  std::vector<LComplex> a{1.0L};
  LComplex sum = 0.0L;
  long double abs_sum = 0.0L, prev = 0.0L;
  double tail = std::numeric_limits<double>::infinity();
  const int j0 = (k + 1) / 2;
  int j = 0;
  for (; j <= cfg.max_series_terms + j0; ++j) {
    if (j > 0) {
      a.push_back(a.back() * (-lx) / static_cast<long double>((2 * j - 1) * (2 * j)));
    }
    if (2 * j < k) continue;
    LComplex diag = 0.0L;
    for (int n = 0; n <= j; ++n) {
      const Complex kv = ladder.at(2 * n - j);
      diag += a[n] * a[j - n] * LComplex(kv.real(), kv.imag());
    }
    long double falling = 1.0L;
    for (int i = 0; i < k; ++i) falling *= static_cast<long double>(2 * j - i);
    const int power = 2 * j - k;
    const LComplex wp = power == 0 ? LComplex(1.0L) : std::pow(lw, power);
    const LComplex term = falling * wp * diag;
    sum += term;
    const long double mag = std::abs(term);
    abs_sum += mag;
    if (w == 0.0) {
      tail = 0.0;
      break;
    }
    if (j >= j0 + 3) {
      const long double rho = prev > 0.0L ? mag / prev : 0.0L;
      if (rho < 0.5L) {
        tail = static_cast<double>(mag * rho / (1.0L - rho));
        const double target = 0.01 * cfg.target(static_cast<double>(std::abs(sum)));
        if (tail <= target) break;
      }
    }
    prev = mag;
  }
  if (j > cfg.max_series_terms + j0) throw NonConvergence("w-derivative series: term cap");
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

}  // namespace

Complex kzw_value(Complex z, Complex w, Complex x, const EvalConfig& cfg) {
  const KzwPoint p(z, w, x);
  try {
    const Evaluation d = eval_double_sum(p, cfg);
    if (d.converged) return d.value;
  } catch (const NumericError&) {
  }
  return eval_integral(p, cfg).value;
}

SeriesSide divisor_bessel_series(Complex z, Complex w, double y, const EvalConfig& cfg,
                                 int extra_terms) {
  if (!(y > 0.0)) throw DomainError("divisor series requires y > 0");
  SeriesSide side;
  Complex sum = 0.0;
  int stop = 0;
  for (int n = 1;; ++n) {
    if (n > cfg.max_series_terms) throw NonConvergence("divisor series: term cap");
    const Complex term = sp::sigma_divisor(n, z) * std::pow(static_cast<double>(n), z / 2.0) *
                         kzw_value(z / 2.0, w, 2.0 * n * y, cfg);
    sum += term;
    side.partial_sums.push_back(sum);
    if (stop == 0 && n * y >= 5.0) {
      const double tail = divisor_tail(z, w, y, n);
      if (tail <= 0.1 * cfg.target(std::abs(sum))) {
        stop = n;
        side.tail_bound = tail;
        side.n_terms = n;
      }
    }
    if (stop > 0 && n >= stop + extra_terms) break;
  }
  return side;
}

IdentityReport check_reciprocity(Complex z, Complex w, double alpha, double x,
                                 const EvalConfig& cfg) {
  cfg.validate();
  if (!(std::abs(z.real()) < 0.5)) throw DomainError("reciprocity requires |Re z| < 1/2");
  if (!(alpha > 0.0) || !(x > 0.0)) throw DomainError("reciprocity requires alpha, x > 0");
  const double beta = 1.0 / alpha;
  const Complex damp = std::exp(-w * w / 2.0);
  auto f = [&](double t) { return damp * kzw_value(z, kI * w, 2.0 * alpha * t, cfg); };
  auto g = [&](double t) { return beta * kzw_value(z, w, 2.0 * beta * t, cfg); };
  const std::vector<std::pair<std::string, Complex>> params{
      {"z", z}, {"w", w}, {"alpha", alpha}, {"x", x}};
  const double tol = w == 0.0 ? 1e-5 : 1e-4;

  const KernelIntegral into_f = kernel_transform(z, x, g, kernel_u_max(w, beta, x));
  IdentityReport first = make_report("reciprocity: f from g", params, f(x), into_f.value, tol, cfg);
  first.work = into_f.evals;
  const KernelIntegral into_g = kernel_transform(z, x, f, kernel_u_max(kI * w, alpha, x));
  IdentityReport second = make_report("reciprocity: g from f", params, g(x), into_g.value, tol, cfg);
  second.work = into_g.evals;
  return worst_of("reciprocity", params, {first, second}, tol);
}

IdentityReport check_rg_general(Complex z, Complex w, double a, const EvalConfig& cfg) {
  cfg.validate();
  if (!(a > 0.0)) throw DomainError("Ramanujan-Guinand form requires a > 0");
  const double b = kPi * kPi / a;
  const Complex q = w * w / 4.0;
  const SeriesSide sa = divisor_bessel_series(z, kI * w, a, cfg);
  const SeriesSide sb = divisor_bessel_series(z, w, b, cfg);
  const Complex lhs = std::sqrt(a) * std::exp(-q) * sa.value() - std::sqrt(b) * std::exp(q) * sb.value();
  const Complex rhs = rg_general_rhs(z, w, a, b);
  IdentityReport r = make_report("rg-general", {{"z", z}, {"w", w}, {"a", a}, {"b", b}}, lhs, rhs,
                                 w == 0.0 ? 1e-9 : 1e-8, cfg);
  r.work = sa.n_terms + sb.n_terms;
  r.diagnostics = {{"tail_bound_a", sa.tail_bound}, {"tail_bound_b", sb.tail_bound}};
  return r;
}

Evaluation rg_modular_evaluation(Complex z, Complex w, double alpha, const EvalConfig& cfg) {
  if (near_integer(z, 1e-10) && std::abs(std::abs(z.real()) - 1.0) < 0.5) {
    throw DomainError("modular form excludes z = +-1");
  }
  const Complex q = w * w / 4.0;
  const SeriesSide s = divisor_bessel_series(z, kI * w, kPi * alpha, cfg);
  const Complex u = (1.0 - z) / 2.0, v = (1.0 + z) / 2.0;
  const Complex first = sp::gamma(z / 2.0) * sp::zeta(z) * std::pow(kPi, -z / 2.0) *
                        std::pow(alpha, z / 2.0 - 1.0) * sp::hyp1f1(u, 0.5, q);
  const Complex second = sp::gamma(-z / 2.0) * sp::zeta(-z) * std::pow(kPi, z / 2.0) *
                         std::pow(alpha, -z / 2.0 - 1.0) * sp::hyp1f1(v, 0.5, q);
  Evaluation e;
  e.value = std::sqrt(alpha) * (4.0 * std::exp(-q) * s.value() - first - second);
  e.err_est = 4.0 * std::sqrt(alpha) * std::abs(std::exp(-q)) * s.tail_bound;
  e.method = Method::double_sum;
  e.work = s.n_terms;
  e.converged = true;
  return e;
}

Complex rg_modular_side(Complex z, Complex w, double alpha, const EvalConfig& cfg) {
  return rg_modular_evaluation(z, w, alpha, cfg).value;
}

IdentityReport check_rg_modular(Complex z, Complex w, double alpha, const EvalConfig& cfg) {
  cfg.validate();
  if (!(alpha > 0.0)) throw DomainError("modular form requires alpha > 0");
  const Complex lhs = rg_modular_side(z, w, alpha, cfg);
  const Complex rhs = rg_modular_side(z, kI * w, 1.0 / alpha, cfg);
  return make_report("rg-modular", {{"z", z}, {"w", w}, {"alpha", alpha}, {"beta", 1.0 / alpha}},
                     lhs, rhs, 1e-8, cfg);
}

Complex rg_modular_side_z0(Complex w, double alpha, const EvalConfig& cfg) {
  const Complex y = w * w / 4.0;
  const SeriesSide s = divisor_bessel_series(0.0, kI * w, kPi * alpha, cfg);
  const double c = kEulerGamma - std::log(4.0 * kPi * alpha);
  return std::sqrt(alpha) *
         (4.0 * std::exp(-y) * s.value() - (std::exp(y) * c - 2.0 * g_correction(y)) / alpha);
}

IdentityReport check_koshliakov_w(Complex w, double alpha, const EvalConfig& cfg) {
  cfg.validate();
  if (!(alpha > 0.0)) throw DomainError("Koshliakov form requires alpha > 0");
  const double beta = 1.0 / alpha;
  const Complex y = w * w / 4.0;
  const SeriesSide sa = divisor_bessel_series(0.0, kI * w, kPi * alpha, cfg);
  const SeriesSide sb = divisor_bessel_series(0.0, w, kPi * beta, cfg);
  const double ca = kEulerGamma - std::log(4.0 * kPi * alpha);
  const double cb = kEulerGamma - std::log(4.0 * kPi * beta);
  const Complex lhs = std::sqrt(alpha) * (4.0 * std::exp(-y) * sa.value() - (ca * (1.0 + y) + 2.0 * y) / alpha);
  const Complex rhs = std::sqrt(beta) * (4.0 * std::exp(y) * sb.value() - (cb * (1.0 - y) - 2.0 * y) / beta);
  IdentityReport r = make_report("koshliakov-w", {{"w", w}, {"alpha", alpha}, {"beta", beta}}, lhs,
                                 rhs, w == 0.0 ? 1e-9 : 1e-8, cfg);
  r.work = sa.n_terms + sb.n_terms;
  const Complex exact_l = std::sqrt(alpha) *
                          (4.0 * std::exp(-y) * sa.value() - (std::exp(y) * ca - 2.0 * g_correction(y)) / alpha);
  const Complex exact_r = std::sqrt(beta) *
                          (4.0 * std::exp(y) * sb.value() - (std::exp(-y) * cb - 2.0 * g_correction(-y)) / beta);
  r.diagnostics = {{"exact_limit_rel_residual", rel_diff(exact_l, exact_r)},
                   {"tail_bound_alpha", sa.tail_bound},
                   {"tail_bound_beta", sb.tail_bound}};
  return r;
}

Complex kzw_w_derivative(Complex z, Complex w, Complex x, int k, const EvalConfig& cfg) {
  if (k < 0) throw DomainError("derivative order must be non-negative");
  const KzwPoint p(z, w, 2.0 * x);
  detail::KLadder ladder(z, 2.0 * x);
  return w_derivative(ladder, w, x, k, cfg);
}

IdentityReport check_dde(Complex z, Complex w, Complex x, const EvalConfig& cfg) {
  cfg.validate();
  const std::vector<std::pair<std::string, Complex>> params{{"z", z}, {"w", w}, {"x", x}};
  const KzwPoint check(z, w, 2.0 * x);
  auto deriv = [&](int s, Complex at_w, int k) {
    detail::KLadder shifted(z + static_cast<double>(s), 2.0 * x);
    return w_derivative(shifted, at_w, x, k, cfg);
  };

  const Complex d4 = deriv(0, w, 4);
  const Complex d2p = deriv(1, w, 2), d2m = deriv(-1, w, 2);
  const Complex k2p = deriv(2, w, 0), k0 = deriv(0, w, 0), k2m = deriv(-2, w, 0);
  const Complex diff = x * x * (k2p - 2.0 * k0 + k2m);
  auto assemble = [&](Complex a4, Complex a2p, Complex a2m) {
    return std::pair{a4 + 2.0 * x * (a2p + a2m), -diff};
  };

  auto [lhs, rhs] = assemble(d4, d2p, d2m);
  IdentityReport analytic = make_report("dde: analytic", params, lhs, rhs, 1e-9, cfg);
  const double largest = std::max({std::abs(d4), std::abs(2.0 * x * d2p), std::abs(2.0 * x * d2m),
                                   std::abs(x * x * k2p), std::abs(2.0 * x * x * k0), std::abs(x * x * k2m)});

  // Central differences in w.
  auto fd = [&](double h) {
    auto f = [&](int s, double step) { return deriv(s, w + step, 0); };
    auto second = [&](int s) { return (f(s, h) - 2.0 * f(s, 0.0) + f(s, -h)) / (h * h); };
    const Complex fourth =
        (f(0, 2.0 * h) - 4.0 * f(0, h) + 6.0 * f(0, 0.0) - 4.0 * f(0, -h) + f(0, -2.0 * h)) / std::pow(h, 4);
    return std::array<Complex, 3>{fourth, second(1), second(-1)};
  };
  const double h = 1e-2;
  const auto coarse = fd(h), fine = fd(h / 2.0);
  auto [lc, rc] = assemble(coarse[0], coarse[1], coarse[2]);
  auto [lf, rf] = assemble(fine[0], fine[1], fine[2]);
  IdentityReport fd_coarse = make_report("dde: finite difference h=1e-2", params, lc, rc, 1e-3, cfg);
  IdentityReport fd_fine = make_report("dde: finite difference h=5e-3", params, lf, rf, 1e-3, cfg);
  const double ratio = fd_coarse.abs_residual / fd_fine.abs_residual;
  double deriv_distance = 0.0;
  const Complex exact[3] = {d4, d2p, d2m};
  for (int i = 0; i < 3; ++i) {
    const Complex extrapolated = (4.0 * fine[i] - coarse[i]) / 3.0;
    deriv_distance = std::max(deriv_distance, rel_diff(extrapolated, exact[i]));
  }

  IdentityReport r = analytic;
  r.name = "dde";
  r.pass = analytic.pass && ratio >= 3.0 && ratio <= 5.0 && deriv_distance <= 1e-5;
  r.parts = {analytic, fd_coarse, fd_fine};
  r.diagnostics = {{"largest_term", largest},
                   {"normalized_residual", analytic.abs_residual / largest},
                   {"fd_ratio", ratio},
                   {"fd_derivative_distance", deriv_distance}};
  return r;
}

IdentityReport check_lemma_inteq(Complex w, Complex x, const EvalConfig& cfg) {
  cfg.validate();
  const KzwPoint check(0.0, w, 2.0 * x);
  const std::vector<std::pair<std::string, Complex>> params{{"w", w}, {"x", x}};
  const Complex x2 = x * x;

  // int exp(-t^2 - x^2/t^2) cos(w t) dt/t with t = e^v, split at the ridge.
  const double ridge = 0.5 * std::log(std::abs(x));
  auto g = [&](double v) -> Complex {
    const double e2 = std::exp(2.0 * v);
    const Complex expo = -e2 - x2 / e2;
    if (expo.real() < -700.0) return 0.0;
    return std::exp(expo) * std::cos(w * std::exp(v));
  };
  const quad::QuadResult up = quad::half_line(g, ridge, 1e-14, cfg.max_quad_levels);
  const quad::QuadResult down =
      quad::half_line([&](double v) { return g(-v); }, -ridge, 1e-14, cfg.max_quad_levels);
  const Complex left = up.value + down.value;

  // exp(-w^2 x^2 / (4(x^2 + t^2))) cos(2t) / sqrt(x^2 + t^2): head up to the
  // first zero of cos 2t, then half-period chunks with extrapolation.
  auto h = [&](double t) -> Complex {
    const Complex r2 = x2 + t * t;
    return std::exp(-w * w * x2 / (4.0 * r2)) * std::cos(2.0 * t) / std::sqrt(r2);
  };
  const quad::QuadResult head = quad::smooth(h, 0.0, kPi / 4.0, 1e-14);
  const quad::OscillatoryResult tail =
      quad::oscillatory_tail(h, kPi / 4.0, kPi / 2.0, cfg.oscillatory_period_cap, 1e-14, 1e-17);
  if (!tail.converged) throw NonConvergence("lemma: oscillatory tail did not settle");
  const Complex right = head.value + tail.value;

  // sum (-w^2 x)^n / (2n)! K_n(2x)
  detail::KLadder ladder(0.0, 2.0 * x);
  Complex series = 0.0, c = 1.0;
  double prev = 0.0;
  int n = 0;
  for (;; ++n) {
    if (n > cfg.max_series_terms) throw NonConvergence("lemma: series term cap");
    if (n > 0) c *= -w * w * x / static_cast<double>((2 * n - 1) * (2 * n));
    const Complex term = c * ladder.at(n);
    series += term;
    const double a = std::abs(term);
    if (w == 0.0) break;
    if (n >= 3 && prev > 0.0) {
      const double rho = a / prev;
      if (rho < 0.5 && a * rho / (1.0 - rho) <= 1e-3 * cfg.target(std::abs(series))) break;
    }
    prev = a;
  }

  IdentityReport lr = make_report("lemma: left integral vs right integral", params, left, right, 1e-8, cfg);
  lr.work = up.evals + down.evals + head.evals + tail.chunks;
  IdentityReport ls = make_report("lemma: left integral vs series", params, left, series, 1e-8, cfg);
  ls.work = n + 1;
  IdentityReport rs = make_report("lemma: right integral vs series", params, right, series, 1e-8, cfg);
  return worst_of("lemma-inteq", params, {lr, ls, rs}, 1e-8);
}

}  // namespace kzw
