#pragma once

#include <complex>
#include <optional>
#include <variant>

#include "specq/convergence.hpp"

namespace specq {

/// F(X) = X^M / (e^X + n) on X > 0.
/// m > 1 keeps F(0+) = 0 even at n = -1; n >= -1 keeps the denominator
/// positive. n = -1 is Bose-Einstein (Planck), n = 0 Maxwell-Boltzmann
/// (Wien), n = +1 Fermi-Dirac; fractional n is allowed.
struct GeneralizedThermal {
    double m = 3.0;
    double n = -1.0;
};

/// exp(-ln2 * x^2): unit peak, half-power points at x = +-1.
struct Gaussian {};

/// 1 / (1 + x^2): unit peak, half-power points at x = +-1.
struct Lorentzian {};

/// Normalized series-RLC conductance g(w) = 1 / (1 + Q^2 (w - 1/w)^2), w > 0.
struct RlcConductance {
    double q = 1.0;
};

/// Butterworth-Van Dyke circuit: series RLC shunted by C0, r = C0/C.
/// As a line shape this is the normalized admittance magnitude |Y R|.
struct BvdParams {
    double q = 1.0;
    double r_ratio = 0.0;
};

/// Peak-normalized convolution of a unit-sigma Gaussian with a Lorentzian of
/// half-width gamma = gamma_over_sigma; V(0) = 1.
struct Voigt {
    double gamma_over_sigma = 1.0;
};

using LineShape = std::variant<GeneralizedThermal, Gaussian, Lorentzian,
                               RlcConductance, BvdParams, Voigt>;

struct ShapeDomain {
    double lower;
    double upper;
    std::optional<double> symmetric_center;
};

/// Throws std::domain_error when shape parameters violate their invariants
/// (m <= 1, n < -1, q <= 0, r_ratio < 0, gamma_over_sigma < 0).
void validate(const LineShape& shape);

ShapeDomain domain(const LineShape& shape);

/// True for every family except the BVD admittance magnitude, whose curve
/// grows like w*r/Q at high frequency.
bool has_finite_area(const LineShape& shape);

/// Pointwise value of the curve. Throws std::domain_error outside the shape
/// domain. The thermal family is evaluated in cancellation-free form near
/// X = 0 (expm1) and in exponential form past the overflow knee.
double evaluate(const LineShape& shape, double x,
                const ConvergenceControl& ctrl = {});

/// Normalized BVD admittance Y*R = 1/(1 + jQ(w - 1/w)) + j*w*r/Q for w > 0.
std::complex<double> evaluate_bvd_admittance(const BvdParams& params,
                                             double omega);
double evaluate_bvd_admittance_magnitude(const BvdParams& params,
                                         double omega);

/// Voigt profile by direct convolution quadrature; the gamma_over_sigma = 0
/// limit is the pure unit-sigma Gaussian.
double evaluate_voigt(double gamma_over_sigma, double x,
                      const ConvergenceControl& ctrl = {});

/// Total area under the curve. Closed forms:
///   thermal  n = -1: Gamma(M+1) zeta(M+1)
///            n =  0: Gamma(M+1)
///            n = +1: Gamma(M+1) eta(M+1)
///            other |n| <= 1, n != 0: -Gamma(M+1) Li_{M+1}(-n) / n
///            n > 1: quadrature
///   Gaussian sqrt(pi/ln2), Lorentzian pi, RLC pi/(2Q), Voigt quadrature.
/// Throws std::domain_error for the BVD magnitude (area diverges).
double total_area(const LineShape& shape, const ConvergenceControl& ctrl = {});

}  // namespace specq
