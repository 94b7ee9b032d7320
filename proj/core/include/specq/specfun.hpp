#pragma once

#include "specq/convergence.hpp"

namespace specq {

/// Principal branch of the Lambert W function, w e^w = z, defined for
/// z >= -1/e. Halley iteration from a piecewise initial guess
/// (branch-point series near -1/e, log-based guess elsewhere).
double lambert_w0(double z, const ConvergenceControl& ctrl = {});

/// Gamma function for s > 0 (Lanczos approximation, g = 7).
double gamma_real(double s);

/// Riemann zeta for s > 1, via the accelerated alternating series.
double riemann_zeta(double s, const ConvergenceControl& ctrl = {});

/// Dirichlet eta for s > 0: eta(s) = sum (-1)^(k-1)/k^s.
double dirichlet_eta(double s, const ConvergenceControl& ctrl = {});

/// Polylogarithm Li_s(z) = sum z^k / k^s for s > 1 and |z| <= 1.
double polylog_neg_arg(double s, double z, const ConvergenceControl& ctrl = {});

/// Error function, accurate to better than 1e-12 absolute over the reals.
double erf(double x);

}  // namespace specq
