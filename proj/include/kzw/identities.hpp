#pragma once

// Numerical checks of the exact identities satisfied by K_{z,w}: reciprocity
// in the Koshliakov kernel, the generalized Ramanujan-Guinand transformation
// and its z = 0 case, an integral interchange lemma, and the
// differential-difference equation in z and w.

#include <string>
#include <utility>
#include <vector>

#include "kzw/types.hpp"

namespace kzw {

struct IdentityReport {
  std::string name;
  std::vector<std::pair<std::string, Complex>> params;
  Complex lhs{};
  Complex rhs{};
  double abs_residual = 0.0;
  /// abs_residual / max(|lhs|, |rhs|, abs_tol)
  double rel_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  long work = 0;
  /// Sub-checks (both directions, pairwise comparisons, ...). For symmetric
  /// checks lhs/rhs above are those of the worst part and pass requires every
  /// part; check_dde keeps the analytic comparison on top.
  std::vector<IdentityReport> parts;
  /// Named scalar diagnostics that are not themselves residuals.
  std::vector<std::pair<std::string, double>> diagnostics;
};

/// A Dirichlet-type series sum_{n>=1} c_n. tail_bound bounds everything past
/// the first n_terms terms; partial_sums may run further.
struct SeriesSide {
  std::vector<Complex> partial_sums;
  double tail_bound = 0.0;
  int n_terms = 0;

  Complex value() const { return n_terms > 0 ? partial_sums[n_terms - 1] : Complex{}; }
};

/// sum_{n>=1} sigma_{-z}(n) n^{z/2} K_{z/2,w}(2 n y), y > 0. The tail bound
/// comes from the large-argument envelope of K_{z/2,w} with a safety factor
/// of two. `extra_terms` keeps summing past the stopping point.
SeriesSide divisor_bessel_series(Complex z, Complex w, double y, const EvalConfig& cfg = {},
                                 int extra_terms = 0);

/// Both directions of the reciprocal pair
///   e^{-w^2/2} K_{z,iw}(2 alpha x) = 2 int_0^inf beta K_{z,w}(2 beta t) k(z, x t) dt
///   beta K_{z,w}(2 beta x) = 2 int_0^inf e^{-w^2/2} K_{z,iw}(2 alpha t) k(z, x t) dt
/// with beta = 1/alpha and k the Koshliakov kernel. Requires |Re z| < 1/2.
/// Tolerance 1e-4, or 1e-5 at w = 0.
IdentityReport check_reciprocity(Complex z, Complex w, double alpha, double x,
                                 const EvalConfig& cfg = {});

/// Ramanujan-Guinand form with a b = pi^2. Valid for every z; at z = +-1 the
/// singular Gamma-zeta bracket is taken as a symmetric Richardson limit.
/// Tolerance 1e-8, or 1e-9 at w = 0.
IdentityReport check_rg_general(Complex z, Complex w, double a, const EvalConfig& cfg = {});

/// F(z, w, alpha) = F(z, iw, 1/alpha), where
///   F(z, w, alpha) = sqrt(alpha) (4 sum sigma_{-z}(n) n^{z/2} e^{-w^2/4} K_{z/2,iw}(2 n pi alpha)
///       - Gamma(z/2) zeta(z) pi^{-z/2} alpha^{z/2-1} 1F1((1-z)/2; 1/2; w^2/4)
///       - Gamma(-z/2) zeta(-z) pi^{z/2} alpha^{-z/2-1} 1F1((1+z)/2; 1/2; w^2/4)).
/// Throws DomainError at z = +-1. Tolerance 1e-8.
IdentityReport check_rg_modular(Complex z, Complex w, double alpha, const EvalConfig& cfg = {});

/// F(z, w, alpha) as defined above; lhs of check_rg_modular.
Complex rg_modular_side(Complex z, Complex w, double alpha, const EvalConfig& cfg = {});

/// The same with err_est taken from the certified series tail.
Evaluation rg_modular_evaluation(Complex z, Complex w, double alpha, const EvalConfig& cfg = {});

/// The z = 0 transformation with divisor counts d(n), in the printed form
///   sqrt(alpha) {4 sum d(n) e^{-w^2/4} K_{0,iw}(2 n pi alpha)
///       - (1/alpha)((gamma - log 4 pi alpha)(1 + w^2/4) + w^2/2)}
///   = sqrt(beta) {4 sum d(n) e^{w^2/4} K_{0,w}(2 n pi beta)
///       - (1/beta)((gamma - log 4 pi beta)(1 - w^2/4) - w^2/2)}.
/// Diagnostic "exact_limit_rel_residual" reports the residual when the
/// boundary terms are replaced by the exact z -> 0 limit of F.
/// Tolerance 1e-8, or 1e-9 at w = 0.
IdentityReport check_koshliakov_w(Complex w, double alpha, const EvalConfig& cfg = {});

/// lim_{z->0} F(z, w, alpha), computed exactly:
///   sqrt(alpha) (4 sum d(n) e^{-y} K_{0,iw}(2 n pi alpha)
///       - (1/alpha)(e^y (gamma - log 4 pi alpha) - 2 G(y))),  y = w^2/4,
/// with G(y) = -(1/2) sum_{k>=1} H_k y^k / k!, H_k = sum_{j<k} 1/(j + 1/2).
Complex rg_modular_side_z0(Complex w, double alpha, const EvalConfig& cfg = {});

/// k-th derivative in w of K_{z,w}(2x), by termwise differentiation of the
/// double series. k >= 0.
Complex kzw_w_derivative(Complex z, Complex w, Complex x, int k, const EvalConfig& cfg = {});

/// d^4/dw^4 K_{z,w}(2x) + 2x (d^2/dw^2 K_{z+1,w}(2x) + d^2/dw^2 K_{z-1,w}(2x))
///   + x^2 (K_{z+2,w}(2x) - 2 K_{z,w}(2x) + K_{z-2,w}(2x)) = 0.
/// Parts: the analytic residual, and finite-difference residuals at h = 1e-2
/// and 5e-3. Diagnostics: the largest assembled term, the residual normalized
/// by it, the finite-difference decay ratio, and the distance between
/// Richardson-extrapolated finite-difference derivatives and the analytic
/// ones. Tolerance 1e-9 on the analytic residual; the decay ratio must lie in
/// [3, 5] and the derivative distance below 1e-5.
IdentityReport check_dde(Complex z, Complex w, Complex x, const EvalConfig& cfg = {});

/// Three-way comparison of
///   int_0^inf exp(-t^2 - x^2/t^2) cos(w t) dt/t,
///   int_0^inf exp(-w^2 x^2 / (4(x^2 + t^2))) cos(2t) / sqrt(x^2 + t^2) dt,
///   sum_n (-w^2 x)^n / (2n)! K_n(2x).
/// Tolerance 1e-8 pairwise.
IdentityReport check_lemma_inteq(Complex w, Complex x, const EvalConfig& cfg = {});

/// K_{z,w}(x) through the reference double series, falling back to the
/// integral representation.
Complex kzw_value(Complex z, Complex w, Complex x, const EvalConfig& cfg = {});

}  // namespace kzw
