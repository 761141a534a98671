#include "kzw/xi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kzw/quadrature.hpp"
#include "kzw/special.hpp"
#include "report.hpp"

namespace kzw {

namespace sp = special;

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPanel = 2.0;
constexpr double kInitialCap = 40.0;
constexpr double kMaxCap = 640.0;

// Upper bound for |xi(s)|, 0 < Re s < 1, |Im s| >= 10. Stirling's relative
// error there is below 1/100; the factor 2 absorbs it.
double xi_envelope(Complex s) {
  const double sigma = s.real(), tau = std::abs(s.imag());
  const double zeta_bound = std::abs(s) / std::abs(s - 1.0) + std::abs(s) / sigma;
  return 2.0 * 0.5 * std::abs(s) * std::abs(s - 1.0) * std::pow(kPi, -sigma / 2.0) *
         std::sqrt(2.0 * kPi) * std::pow(tau / 2.0, sigma / 2.0 - 0.5) * std::exp(-kPi * tau / 4.0) *
         zeta_bound;
}

// Envelope of |xi_integrand| for t >= 20 + |Im z|.
double integrand_envelope(double t, Complex z, Complex w, double alpha) {
  const Complex s_plus = 0.5 - z / 2.0 + kI * (t / 2.0);
  const Complex s_minus = 0.5 + z / 2.0 + kI * (t / 2.0);
  const Complex den = (t * t + (z + 1.0) * (z + 1.0)) * (t * t + (z - 1.0) * (z - 1.0));
  return xi_envelope(s_plus) * xi_envelope(s_minus) *
         std::abs(nabla2(alpha, z / 2.0, w, Complex(0.5, t / 2.0))) / std::abs(den);
}

// Bound on int_T^inf |integrand|. Past T the log of the envelope is concave
// (polynomial and sub-exponential factors against e^{-pi t / 4}), so its
// secant slope over [T - 1, T] bounds the decay rate from below.
double tail_bound(double T, Complex z, Complex w, double alpha) {
  const double here = integrand_envelope(T, z, w, alpha);
  const double before = integrand_envelope(T - 1.0, z, w, alpha);
  const double rate = std::log(before / here);
  if (!(rate > 0.0)) return std::numeric_limits<double>::infinity();
  return here / rate;
}

}  // namespace

Complex xi_function(Complex s) {
  if (s.real() < 0.5) s = 1.0 - s;
  const Complex prefactor = std::exp(-s / 2.0 * std::log(kPi)) * sp::gamma(s / 2.0);
  return 0.5 * s * prefactor * sp::zeta_times_s_minus_1(s);
}

Complex riemann_Xi(Complex t) { return xi_function(0.5 + kI * t); }

Complex nabla2(double x, Complex z, Complex w, Complex s) {
  if (!(x > 0.0)) throw DomainError("nabla2 requires x > 0");
  const Complex q = -w * w / 4.0;
  auto rho = [&](Complex u) {
    return std::pow(x, 0.5 - u) * sp::hyp1f1((1.0 - u - z) / 2.0, 0.5, q) *
           sp::hyp1f1((1.0 - u + z) / 2.0, 0.5, q);
  };
  return rho(s) + rho(1.0 - s);
}

Complex xi_integrand(double t, Complex z, Complex w, double alpha) {
  const Complex den = (t * t + (z + 1.0) * (z + 1.0)) * (t * t + (z - 1.0) * (z - 1.0));
  return riemann_Xi((t + kI * z) / 2.0) * riemann_Xi((t - kI * z) / 2.0) *
         nabla2(alpha, z / 2.0, w, Complex(0.5, t / 2.0)) / den;
}

Evaluation xi_integral_lhs(Complex z, Complex w, double alpha, const EvalConfig& cfg) {
  cfg.validate();
  if (!(std::abs(z.real()) < 1.0)) throw DomainError("Xi integral requires -1 < Re z < 1");
  if (!(alpha > 0.0)) throw DomainError("Xi integral requires alpha > 0");
  auto f = [&](double t) { return xi_integrand(t, z, w, alpha); };
  Evaluation e;
  e.method = Method::integral;
  double cap = std::max(kInitialCap, 20.0 + std::abs(z.imag()) + kPanel);
  double a = 0.0;
  Complex sum = 0.0;
  double quad_err = 0.0;
  for (;;) {
    for (; a < cap; a += kPanel) {
      const quad::QuadResult r = quad::smooth(f, a, a + kPanel, 0.01 * cfg.rel_tol);
      sum += r.value;
      quad_err += r.err_est;
      e.work += r.evals;
    }
    const double tail = tail_bound(cap, z, w, alpha);
    const double scale = 16.0 / kPi;
    if (scale * tail <= 0.1 * cfg.target(scale * std::abs(sum))) {
      e.value = scale * sum;
      e.err_est = scale * (quad_err + tail);
      e.converged = true;
      return e;
    }
    if (cap >= kMaxCap) throw NonConvergence("Xi integral: tail certificate failed at the cap");
    cap *= 2.0;
  }
}

Evaluation xi_integral_rhs(Complex z, Complex w, double alpha, const EvalConfig& cfg) {
  cfg.validate();
  if (!(std::abs(z.real()) < 1.0)) throw DomainError("Xi integral requires -1 < Re z < 1");
  if (!(alpha > 0.0)) throw DomainError("Xi integral requires alpha > 0");
  const Complex damp = std::exp(-w * w / 4.0);
  if (z == 0.0) {
    Evaluation e;
    e.value = damp * rg_modular_side_z0(w, alpha, cfg);
    e.err_est = cfg.target(std::abs(e.value));
    e.method = Method::double_sum;
    e.converged = true;
    return e;
  }
  Evaluation e = rg_modular_evaluation(z, w, alpha, cfg);
  e.value *= damp;
  e.err_est *= std::abs(damp);
  return e;
}

IdentityReport check_xi_theorem(Complex z, Complex w, double alpha, const EvalConfig& cfg) {
  const Evaluation lhs = xi_integral_lhs(z, w, alpha, cfg);
  const Evaluation rhs = xi_integral_rhs(z, w, alpha, cfg);
  IdentityReport r = detail::make_report("xi-thm", {{"z", z}, {"w", w}, {"alpha", alpha}}, lhs.value,
                                         rhs.value, 1e-5, cfg);
  r.work = lhs.work + rhs.work;
  r.diagnostics = {{"lhs_err_est", lhs.err_est}, {"rhs_err_est", rhs.err_est}};
  return r;
}

IdentityReport check_xi_corollary_z0(Complex w, double alpha, const EvalConfig& cfg) {
  const Evaluation lhs = xi_integral_lhs(0.0, w, alpha, cfg);
  const Complex y = w * w / 4.0;
  const SeriesSide s = divisor_bessel_series(0.0, kI * w, kPi * alpha, cfg);
  const double c = kEulerGamma - std::log(4.0 * kPi * alpha);
  const Complex printed = std::sqrt(alpha) * std::exp(-y) *
                          (4.0 * std::exp(-y) * s.value() - c * (1.0 - y) / alpha + w * w / (2.0 * alpha));
  IdentityReport r = detail::make_report("xi-corollary", {{"w", w}, {"alpha", alpha}}, lhs.value,
                                         printed, 1e-5, cfg);
  r.work = lhs.work + s.n_terms;
  const Complex exact = std::exp(-y) * rg_modular_side_z0(w, alpha, cfg);
  r.diagnostics = {{"exact_limit_rel_residual", rel_diff(lhs.value, exact)},
                   {"lhs_err_est", lhs.err_est}};
  return r;
}

}  // namespace kzw
