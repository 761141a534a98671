#pragma once

// Quadrature and series-acceleration helpers shared by the evaluation
// methods and identity checks.

#include <functional>
#include <span>

#include "kzw/types.hpp"

namespace kzw::quad {

using RealFn = std::function<Complex(double)>;

struct QuadResult {
  Complex value{};
  double err_est = 0.0;
  long evals = 0;
};

/// Double-exponential (tanh-sinh) quadrature on [a, b]; tolerates integrable
/// endpoint singularities.
QuadResult finite(const RealFn& f, double a, double b, double tol,
                  int max_levels = 12);

/// exp-sinh quadrature on [a, inf) for integrands with exponential decay.
QuadResult half_line(const RealFn& f, double a, double tol, int max_levels = 12);

/// Adaptive Gauss-Kronrod (31 point) on [a, b] for smooth integrands.
QuadResult smooth(const RealFn& f, double a, double b, double tol);

struct Extrapolation {
  Complex value{};
  double err_est = 0.0;
};

/// Wynn's epsilon algorithm applied to a sequence of partial sums. The error
/// estimate is the distance between the two most recent even-column
/// diagonal entries.
Extrapolation wynn_epsilon(std::span<const Complex> partial_sums);

/// int_a^inf f for slowly decaying oscillatory f: integrates consecutive
/// chunks of length `half_period` and extrapolates the partial sums. Stops
/// once two successive extrapolations agree to max(rel_tol |I|, abs_tol) or
/// `max_chunks` is exhausted (then err_est reports the last disagreement).
struct OscillatoryResult {
  Complex value{};
  double err_est = 0.0;
  int chunks = 0;
  bool converged = false;
};
OscillatoryResult oscillatory_tail(const RealFn& f, double a, double half_period,
                                   int max_chunks, double rel_tol, double abs_tol);

}  // namespace kzw::quad
