#include "specq/specfun.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

namespace specq {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInvE = 0.36787944117144232160;  // 1/e

// Branch-point expansion of W0 about z = -1/e, p = sqrt(2(ez+1)).
double w0_branch_series(double p) {
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
}

// Cohen-Rodriguez Villegas-Zagier acceleration of sum_{k>=0} (-1)^k a(k)
// with a(k) = 1/(k+1)^s; error ~ (3+sqrt8)^-n.
double eta_accelerated(double s) {
    constexpr int n = 44;
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0, c = -d, sum = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        sum += c * std::pow(static_cast<double>(k + 1), -s);
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1));
    }
    return sum / d;
}

}  // namespace

double lambert_w0(double z, const ConvergenceControl& ctrl) {
    ctrl.validate();
    if (std::isnan(z)) return z;
    if (z < -kInvE)
        throw std::domain_error("lambert_w0: z < -1/e is outside the principal branch");
    if (z == 0.0) return 0.0;
    if (z <= -kInvE * (1.0 - 1e-12)) {
        // So close to the branch point that the series is already at full
        // accuracy and the Halley denominator would degenerate.
        const double p = std::sqrt(std::fmax(0.0, 2.0 * (std::exp(1.0) * z + 1.0)));
        return std::fmax(-1.0, w0_branch_series(p));
    }

    double w;
    if (z < -0.32) {
        w = w0_branch_series(std::sqrt(2.0 * (std::exp(1.0) * z + 1.0)));
    } else {
        // log-based guess, good to a few percent on (-0.32, inf)
        const double l1 = std::log1p(z);
        w = l1 * (1.0 - std::log1p(l1) / (2.0 + l1));
    }

    for (int iter = 0; iter < ctrl.max_iter; ++iter) {
        const double ew = std::exp(w);
        const double f = w * ew - z;
        const double fp = ew * (w + 1.0);
        double denom = fp - f * (w + 2.0) / (2.0 * (w + 1.0));
        if (denom == 0.0) denom = fp;
        const double step = f / denom;
        w -= step;
        if (std::fabs(step) <= ctrl.rel_tol * std::fabs(w) + ctrl.abs_tol)
            return std::fmax(w, -1.0);
    }
    throw ConvergenceError("lambert_w0", "Halley iteration exceeded max_iter");
}

double gamma_real(double s) {
    if (!(s > 0.0))
        throw std::domain_error("gamma_real: requires s > 0");
    // Lanczos, g = 7, 9 coefficients.
    static constexpr double coef[9] = {
        0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,    12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};
    if (s < 0.5)
        return kPi / (std::sin(kPi * s) * gamma_real(1.0 - s));
    const double x = s - 1.0;
    double a = coef[0];
    for (int i = 1; i < 9; ++i) a += coef[i] / (x + i);
    const double t = x + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

double riemann_zeta(double s, const ConvergenceControl& ctrl) {
    ctrl.validate();
    if (!(s > 1.0))
        throw std::domain_error("riemann_zeta: requires s > 1");
    return eta_accelerated(s) / (1.0 - std::pow(2.0, 1.0 - s));
}

double dirichlet_eta(double s, const ConvergenceControl& ctrl) {
    ctrl.validate();
    if (!(s > 0.0))
        throw std::domain_error("dirichlet_eta: requires s > 0");
    return eta_accelerated(s);
}

double polylog_neg_arg(double s, double z, const ConvergenceControl& ctrl) {
    ctrl.validate();
    if (!(s > 1.0))
        throw std::domain_error("polylog_neg_arg: requires s > 1");
    if (!(std::fabs(z) <= 1.0))
        throw std::domain_error("polylog_neg_arg: series requires |z| <= 1");
    if (z == 0.0) return 0.0;
    if (z == 1.0) return riemann_zeta(s, ctrl);
    if (z == -1.0) return -dirichlet_eta(s, ctrl);

    const double az = std::fabs(z);
    double sum = 0.0, zk = 1.0;
    // Tolerance-driven term budget; geometric tail bound below.
    for (std::int64_t k = 1; k <= 2000000; ++k) {
        zk *= z;
        const double term = zk * std::pow(static_cast<double>(k), -s);
        sum += term;
        const double tail = std::fabs(term) * az / (1.0 - az);
        if (tail <= ctrl.rel_tol * std::fabs(sum) + ctrl.abs_tol) return sum;
    }
    throw ConvergenceError("polylog_neg_arg", "series did not converge (|z| too close to 1)");
}

double erf(double x) {
    if (std::isnan(x)) return x;
    const double ax = std::fabs(x);
    const double sign = x < 0.0 ? -1.0 : 1.0;
    if (ax == 0.0) return 0.0;
    if (ax >= 6.5) return sign;  // erfc < 4e-20

    if (ax <= 2.0) {
        // Taylor series: erf(x) = 2/sqrt(pi) sum (-1)^k x^(2k+1) / (k! (2k+1))
        double term = ax, sum = ax;
        for (int k = 1; k < 200; ++k) {
            term *= -ax * ax / k;
            const double add = term / (2 * k + 1);
            sum += add;
            if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
        }
        return sign * sum * 2.0 / std::sqrt(kPi);
    }

    // Continued fraction for erfc (Lentz): sqrt(pi) e^(x^2) erfc(x) =
    // 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    const double tiny = 1e-300;
    double fval = ax, C = ax, D = 0.0;
    for (int k = 1; k < 400; ++k) {
        const double an = k / 2.0;
        D = ax + an * D;
        if (D == 0.0) D = tiny;
        C = ax + an / C;
        if (C == 0.0) C = tiny;
        D = 1.0 / D;
        const double delta = C * D;
        fval *= delta;
        if (std::fabs(delta - 1.0) < 1e-17) break;
    }
    const double erfc = std::exp(-ax * ax) / (std::sqrt(kPi) * fval);
    return sign * (1.0 - erfc);
}

}  // namespace specq
