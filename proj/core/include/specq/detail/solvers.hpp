#pragma once

// Internal bracketed solvers shared by the analysis and circuits modules.
// Not part of the public surface.

#include <cmath>
#include <functional>

#include "specq/convergence.hpp"

namespace specq::detail {

// Brent root finder on [a, b] with f(a) f(b) <= 0. Abscissa tolerance is
// 1e-12 relative, independent of the value tolerances in ConvergenceControl.
inline double brent_root(const std::function<double(double)>& f, double a,
                         double b, double fa, double fb, int max_iter,
                         const char* stage) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0)
        throw ConvergenceError(stage, "root bracket does not straddle zero");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < std::max(max_iter, 100); ++iter) {
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol = 2.0 * 1e-16 * std::fabs(b) + 0.5e-12 * (std::fabs(b) + 1e-30);
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol || fb == 0.0) return b;

        if (std::fabs(e) >= tol && std::fabs(fa) > std::fabs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {  // secant
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {  // inverse quadratic
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            if (2.0 * p < std::fmin(3.0 * xm * q - std::fabs(tol * q),
                                    std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::fabs(d) > tol) ? d : (xm > 0 ? tol : -tol);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            e = d = b - a;
        }
    }
    throw ConvergenceError(stage, "root iteration exceeded max_iter");
}

// Golden-section maximum of f on [a, b]; returns the abscissa.
inline double golden_max(const std::function<double(double)>& f, double a,
                         double b) {
    constexpr double gr = 0.6180339887498949;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fcv = f(c), fdv = f(d);
    while (d - c > 1e-13 * (std::fabs(c) + std::fabs(d)) + 1e-300) {
        if (fcv > fdv) {
            b = d; d = c; fdv = fcv;
            c = b - gr * (b - a);
            fcv = f(c);
        } else {
            a = c; c = d; fcv = fdv;
            d = a + gr * (b - a);
            fdv = f(d);
        }
        if (b - a < 1e-15 * std::fabs(b)) break;
    }
    return 0.5 * (a + b);
}

inline double golden_min(const std::function<double(double)>& f, double a,
                         double b) {
    return golden_max([&f](double x) { return -f(x); }, a, b);
}

}  // namespace specq::detail
