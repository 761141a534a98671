#pragma once

// The generalized modified Bessel function K_{z,w}(x), evaluated through each
// of its representations, plus asymptotic forms, a regime dispatcher and a
// cross-method comparison.
//
// Every entry point takes the argument x of K_{z,w}(x). K_{z,w} is even in z
// and in w and reduces to K_z(x) at w = 0.

#include <optional>
#include <string>
#include <vector>

#include "kzw/types.hpp"

namespace kzw {

/// A point (z, w, x) with the sector constraint |arg x| < pi/4 checked on
/// construction.
struct KzwPoint {
  Complex z;
  Complex w;
  Complex x;

  /// Throws DomainError when x = 0 or |arg x| >= pi/4.
  KzwPoint(Complex z, Complex w, Complex x);
};

/// Large-x expansion coefficients for K_{z,w}(2X):
///   P = sum P[k] X^{-k},  Q = sum Q[k] X^{-k-1/2},  R = sum R[k] X^{-k}.
struct AsymptoticTerms {
  std::vector<Complex> P;
  std::vector<Complex> Q;
  std::vector<Complex> R;
};

/// Coefficients through X^{-order}; order 0 keeps P[0] = R[0] = 1 only.
AsymptoticTerms asymptotic_terms(Complex z, Complex w, int order);

/// Trapezoid rule in log t on the integral
/// K_{z,w}(2X) = X^{-z} int_0^inf exp(-t^2 - X^2/t^2) cos(wt) cos(wX/t) t^{2z-1} dt.
Evaluation eval_integral(const KzwPoint& p, const EvalConfig& cfg = {});

/// Inverse Mellin transform along Re s = max(|Re z|, 0) + 1/2.
Evaluation eval_mellin_barnes(const KzwPoint& p, const EvalConfig& cfg = {});

/// (1/2) sum_n (-1)^n K_{z+n}(2X) (I_{2n} + J_{2n})(2w sqrt X), X = x/2.
/// Requires |Re z| < 1/2.
Evaluation eval_bilateral_series(const KzwPoint& p, const EvalConfig& cfg = {});

/// sum_{n,m} (-w^2 X)^{n+m} / ((2n)! (2m)!) K_{n-m+z}(2X), X = x/2. The
/// reference method.
Evaluation eval_double_sum(const KzwPoint& p, const EvalConfig& cfg = {});

/// Basset-type integral for K_{0,w}(x).
Evaluation eval_basset_z0(Complex w, Complex x, const EvalConfig& cfg = {});

/// Series of Laplace-type integrals; requires Re z > -1/2.
Evaluation eval_laplace_series(const KzwPoint& p, const EvalConfig& cfg = {});

/// Double integral over (t, y) in (0, inf)^2; requires Re z > -1. Lowest
/// accuracy tier.
Evaluation eval_double_integral(const KzwPoint& p, const EvalConfig& cfg = {});

/// Leading large-x behaviour with corrections through `order` (0 or 1).
/// err_est is an estimate of the first omitted term.
Evaluation asymptotic_large_x(const KzwPoint& p, int order);

/// Leading small-x term: (1/2) Gamma(z) (x/2)^{-z} 1F1(z; 1/2; -w^2/4) for
/// Re z > 0, -log x - (w^2/2) 2F2(1,1; 3/2,2; -w^2/4) for z = 0.
/// err_est is the magnitude of the next term of the expansion.
Evaluation asymptotic_small_x(const KzwPoint& p);

/// Regime dispatcher; Evaluation::method records the choice.
Evaluation eval_auto(const KzwPoint& p, const EvalConfig& cfg = {});

struct MethodOutcome {
  Method method;
  std::optional<Evaluation> eval;  ///< empty when the method threw
  std::string error;
};

struct Comparison {
  std::vector<MethodOutcome> outcomes;
  double max_pairwise_rel = 0.0;  ///< over methods that returned a value
};

/// Runs every exact representation whose preconditions p satisfies.
Comparison compare_methods(const KzwPoint& p, const EvalConfig& cfg = {});

}  // namespace kzw
