#pragma once

// Complex special-function building blocks: gamma, confluent and generalized
// hypergeometric series, Bessel functions of complex order, the Riemann zeta
// function, divisor sums and the Koshliakov kernel.

#include <cstdint>

#include "kzw/types.hpp"

namespace kzw::special {

// --- gamma ------------------------------------------------------------------

/// Complex gamma function (Lanczos, reflection for Re s < 1/2).
/// Throws PoleError within 1e-12 of a non-positive integer.
Complex gamma(Complex s);

/// 1/Gamma(s); entire, returns exactly zero at the poles of Gamma.
Complex rgamma(Complex s);

/// Principal branch of log Gamma(s) for Re s > 0.
Complex lgamma(Complex s);

// --- hypergeometric series ----------------------------------------------------

/// Confluent hypergeometric 1F1(a; c; x). For Re x < 0 and |x| > 1 the Kummer
/// transformation e^x 1F1(c-a; c; -x) is summed instead.
Complex hyp1f1(Complex a, Complex c, Complex x, int max_terms = 1000);

/// 1F1 by the plain power series, no transformation.
Complex hyp1f1_series(Complex a, Complex c, Complex x, int max_terms = 1000);

/// 0F2(-; c1, c2; x)
Complex hyp0f2(Complex c1, Complex c2, Complex x, int max_terms = 1000);

/// 2F2(a1, a2; c1, c2; x)
Complex hyp2f2(Complex a1, Complex a2, Complex c1, Complex c2, Complex x,
               int max_terms = 1000);

// --- Bessel family --------------------------------------------------------------

/// Modified Bessel function of the second kind, |arg x| < pi/2, any order.
Complex bessel_K(Complex nu, Complex x);

/// K_{nu0}(x), K_{nu0+1}(x), ..., K_{nu0+count-1}(x) by upward recurrence
/// from two direct evaluations.
void bessel_K_ladder(Complex nu0, Complex x, int count, Complex* out);

/// Bessel function of the first kind. Ascending series for |x| <= 17,
/// Hankel expansion beyond (Re x > 0 required there).
Complex bessel_J(Complex nu, Complex x);

/// Bessel function of the second kind for Re x > 0.
Complex bessel_Y(Complex nu, Complex x);

/// Modified Bessel function of the first kind.
Complex bessel_I(Complex nu, Complex x);

/// K_{n+1/2}(y) by its terminating closed form.
Complex bessel_K_half_integer(int n, Complex y);

/// Order at which J, Y and I switch from ascending series or integral
/// representation to their large-argument expansions.
inline constexpr double kBesselAsymptoticCrossover = 17.0;

// --- zeta and arithmetic ----------------------------------------------------------

/// Riemann zeta function. Throws PoleError within 1e-12 of s = 1.
Complex zeta(Complex s);

/// (s - 1) zeta(s), analytic at s = 1.
Complex zeta_times_s_minus_1(Complex s);

/// sigma_{-z}(n) = sum over divisors d of n of d^{-z}.
Complex sigma_divisor(std::int64_t n, Complex z);

/// Number of divisors, sigma_0(n).
std::int64_t divisor_count(std::int64_t n);

// --- Koshliakov kernel ---------------------------------------------------------

struct KernelSample {
  Complex value;   ///< m_part + j_part
  Complex m_part;  ///< cos(pi z) M_{2z}(4 sqrt u)
  Complex j_part;  ///< -sin(pi z) J_{2z}(4 sqrt u)
};

/// cos(pi z) M_{2z}(4 sqrt u) - sin(pi z) J_{2z}(4 sqrt u) with
/// M_nu = (2/pi) K_nu - Y_nu. Requires -1/2 < Re z < 1/2 and u > 0.
KernelSample koshliakov_kernel(Complex z, double u);

}  // namespace kzw::special
