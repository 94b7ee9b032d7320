#pragma once

#include <functional>

#include "specq/convergence.hpp"

namespace specq {

/// Definite integral of f over (a, b) by adaptive Gauss-Kronrod (7-15)
/// bisection. Either endpoint may be infinite; infinite ends are mapped onto
/// a finite panel with x = a + t/(1-t), which requires the integrand to decay
/// at the open end (exponential decay, or at least ~1/x^2 for a finite
/// integral). Quadrature nodes are strictly interior, so f is never evaluated
/// at the endpoints themselves.
///
/// Throws ConvergenceError when the error estimate cannot be brought below
/// max(abs_tol, rel_tol*|result|) within the subdivision budget.
double adaptive_integrate(const std::function<double(double)>& f,
                          double a, double b,
                          const ConvergenceControl& ctrl = {});

}  // namespace specq
