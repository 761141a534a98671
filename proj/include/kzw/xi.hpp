#pragma once

// Riemann xi function and the Xi-integral evaluations built on K_{z,w}.

#include "kzw/identities.hpp"
#include "kzw/types.hpp"

namespace kzw {

/// xi(s) = s (s - 1) pi^{-s/2} Gamma(s/2) zeta(s) / 2. Entire; evaluated at
/// max(Re s, Re(1 - s)) through xi(s) = xi(1 - s).
Complex xi_function(Complex s);

/// Xi(t) = xi(1/2 + i t).
Complex riemann_Xi(Complex t);

/// rho(x, z, w, s) + rho(x, z, w, 1 - s) with
///   rho(x, z, w, s) = x^{1/2 - s} 1F1((1-s-z)/2; 1/2; -w^2/4) 1F1((1-s+z)/2; 1/2; -w^2/4).
/// Requires x > 0.
Complex nabla2(double x, Complex z, Complex w, Complex s);

/// Integrand of xi_integral_lhs at t:
///   Xi((t+iz)/2) Xi((t-iz)/2) nabla2(alpha, z/2, w, (1+it)/2)
///       / ((t^2 + (z+1)^2)(t^2 + (z-1)^2)).
Complex xi_integrand(double t, Complex z, Complex w, double alpha);

/// (16/pi) int_0^inf xi_integrand dt. Gauss-Kronrod panels on [0, T] with
/// T = 40 initially; the remainder is bounded from a Stirling envelope
///   |xi(sigma + i tau)| <= |s| |s-1| pi^{-sigma/2} sqrt(2 pi) |tau/2|^{sigma/2 - 1/2}
///                         e^{-pi |tau| / 4} (|s|/|s-1| + |s|/sigma)
/// and T doubles (up to 640) until that bound is below a tenth of the target.
/// Requires -1 < Re z < 1 and alpha > 0.
Evaluation xi_integral_lhs(Complex z, Complex w, double alpha, const EvalConfig& cfg = {});

/// e^{-w^2/4} F(z, w, alpha) with F the modular-form side of
/// check_rg_modular; at z = 0 the exact limit rg_modular_side_z0 is used.
Evaluation xi_integral_rhs(Complex z, Complex w, double alpha, const EvalConfig& cfg = {});

/// xi_integral_lhs against xi_integral_rhs. Tolerance 1e-5. Diagnostic
/// "tail_bound" is the certified remainder past the quadrature cap.
IdentityReport check_xi_theorem(Complex z, Complex w, double alpha, const EvalConfig& cfg = {});

/// The z = 0 case in its printed form:
///   (16/pi) int_0^inf Xi(t/2)^2 / (t^2+1)^2
///       (alpha^{-it/2} 1F1((1-it)/4; 1/2; -w^2/4)^2 + alpha^{it/2} 1F1((1+it)/4; 1/2; -w^2/4)^2) dt
///   = sqrt(alpha) e^{-w^2/4} (4 sum d(n) e^{-w^2/4} K_{0,iw}(2 n pi alpha)
///       - (gamma - log 4 pi alpha)(1 - w^2/4) / alpha + w^2 / (2 alpha)).
/// Diagnostic "exact_limit_rel_residual" compares the lhs with the exact
/// z -> 0 limit of xi_integral_rhs instead. Tolerance 1e-5.
IdentityReport check_xi_corollary_z0(Complex w, double alpha, const EvalConfig& cfg = {});

}  // namespace kzw
