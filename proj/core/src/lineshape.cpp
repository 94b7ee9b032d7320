#include "specq/lineshape.hpp"

#include <cmath>
#include <limits>

#include "specq/integrate.hpp"
#include "specq/specfun.hpp"

namespace specq {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;
constexpr double kInf = std::numeric_limits<double>::infinity();

double thermal_value(double m, double n, double x) {
    if (x == 0.0) return 0.0;  // limit for m > 1
    const double num_log = m * std::log(x);
    if (x > 700.0 || num_log > 700.0) {
        // exponential form, immune to e^x / x^m overflow
        const double shrink = n == 0.0 ? 1.0 : 1.0 + n * std::exp(-std::fmin(x, 745.0));
        return std::exp(num_log - x) / shrink;
    }
    const double num = std::pow(x, m);
    if (n == -1.0) return num / std::expm1(x);  // cancellation-free near 0
    return num / (std::exp(x) + n);
}

double rlc_value(double q, double omega) {
    const double u = omega - 1.0 / omega;
    return 1.0 / (1.0 + q * q * u * u);
}

}  // namespace

void validate(const LineShape& shape) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GeneralizedThermal>) {
                if (!(s.m > 1.0))
                    throw std::domain_error("GeneralizedThermal: requires m > 1");
                if (!(s.n >= -1.0))
                    throw std::domain_error("GeneralizedThermal: requires n >= -1");
            } else if constexpr (std::is_same_v<T, RlcConductance>) {
                if (!(s.q > 0.0))
                    throw std::domain_error("RlcConductance: requires q > 0");
            } else if constexpr (std::is_same_v<T, BvdParams>) {
                if (!(s.q > 0.0))
                    throw std::domain_error("BvdParams: requires q > 0");
                if (!(s.r_ratio >= 0.0))
                    throw std::domain_error("BvdParams: requires r_ratio >= 0");
            } else if constexpr (std::is_same_v<T, Voigt>) {
                if (!(s.gamma_over_sigma >= 0.0))
                    throw std::domain_error("Voigt: requires gamma_over_sigma >= 0");
            }
        },
        shape);
}

ShapeDomain domain(const LineShape& shape) {
    return std::visit(
        [](const auto& s) -> ShapeDomain {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GeneralizedThermal> ||
                          std::is_same_v<T, RlcConductance> ||
                          std::is_same_v<T, BvdParams>) {
                (void)s;
                return {0.0, kInf, std::nullopt};
            } else {
                return {-kInf, kInf, 0.0};
            }
        },
        shape);
}

bool has_finite_area(const LineShape& shape) {
    return !std::holds_alternative<BvdParams>(shape);
}

double evaluate(const LineShape& shape, double x, const ConvergenceControl& ctrl) {
    validate(shape);
    if (std::isnan(x)) throw std::domain_error("evaluate: x is NaN");
    return std::visit(
        [x, &ctrl](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GeneralizedThermal>) {
                if (x < 0.0)
                    throw std::domain_error("evaluate: thermal family requires x >= 0");
                return thermal_value(s.m, s.n, x);
            } else if constexpr (std::is_same_v<T, Gaussian>) {
                return std::exp(-kLn2 * x * x);
            } else if constexpr (std::is_same_v<T, Lorentzian>) {
                return 1.0 / (1.0 + x * x);
            } else if constexpr (std::is_same_v<T, RlcConductance>) {
                if (!(x > 0.0))
                    throw std::domain_error("evaluate: RLC conductance requires omega > 0");
                return rlc_value(s.q, x);
            } else if constexpr (std::is_same_v<T, BvdParams>) {
                return evaluate_bvd_admittance_magnitude(s, x);
            } else {
                return evaluate_voigt(s.gamma_over_sigma, x, ctrl);
            }
        },
        shape);
}

std::complex<double> evaluate_bvd_admittance(const BvdParams& params, double omega) {
    if (!(params.q > 0.0))
        throw std::domain_error("evaluate_bvd_admittance: requires q > 0");
    if (!(params.r_ratio >= 0.0))
        throw std::domain_error("evaluate_bvd_admittance: requires r_ratio >= 0");
    if (!(omega > 0.0))
        throw std::domain_error("evaluate_bvd_admittance: requires omega > 0");
    const double u = omega - 1.0 / omega;
    const std::complex<double> motional = 1.0 / std::complex<double>(1.0, params.q * u);
    // shunt capacitor: omega C0 R = omega r / Q under the series-RLC scaling
    return motional + std::complex<double>(0.0, omega * params.r_ratio / params.q);
}

double evaluate_bvd_admittance_magnitude(const BvdParams& params, double omega) {
    return std::abs(evaluate_bvd_admittance(params, omega));
}

double evaluate_voigt(double gamma_over_sigma, double x,
                      const ConvergenceControl& ctrl) {
    if (!(gamma_over_sigma >= 0.0))
        throw std::domain_error("evaluate_voigt: requires gamma_over_sigma >= 0");
    if (gamma_over_sigma == 0.0) return std::exp(-0.5 * x * x);

    x = std::fabs(x);  // the profile is even; keep that exact
    const double g2 = gamma_over_sigma * gamma_over_sigma;
    const auto convolution = [&](double center) {
        // the Gaussian factor is below 1e-300 past |t| = 38
        return adaptive_integrate(
            [center, g2](double t) {
                const double d = center - t;
                return std::exp(-0.5 * t * t) / (d * d + g2);
            },
            -40.0, 40.0, ctrl);
    };
    return convolution(x) / convolution(0.0);
}

double total_area(const LineShape& shape, const ConvergenceControl& ctrl) {
    validate(shape);
    return std::visit(
        [&ctrl, &shape](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GeneralizedThermal>) {
                const double order = s.m + 1.0;
                if (s.n == -1.0) return gamma_real(order) * riemann_zeta(order, ctrl);
                if (s.n == 0.0) return gamma_real(order);
                if (s.n == 1.0) return gamma_real(order) * dirichlet_eta(order, ctrl);
                if (std::fabs(s.n) <= 1.0)
                    return -gamma_real(order) * polylog_neg_arg(order, -s.n, ctrl) / s.n;
                const double m = s.m, n = s.n;
                return adaptive_integrate(
                    [m, n](double x) { return thermal_value(m, n, x); }, 0.0, kInf,
                    ctrl);
            } else if constexpr (std::is_same_v<T, Gaussian>) {
                return std::sqrt(kPi / kLn2);
            } else if constexpr (std::is_same_v<T, Lorentzian>) {
                return kPi;
            } else if constexpr (std::is_same_v<T, RlcConductance>) {
                // odd-symmetry substitution u = w - 1/w gives pi/(2Q) exactly
                return kPi / (2.0 * s.q);
            } else if constexpr (std::is_same_v<T, BvdParams>) {
                throw std::domain_error(
                    "total_area: BVD admittance magnitude has no finite area");
            } else {
                const LineShape& self = shape;
                const auto f = [&self, &ctrl](double x) {
                    return evaluate(self, x, ctrl);
                };
                return 2.0 * adaptive_integrate(f, 0.0, kInf, ctrl);
            }
        },
        shape);
}

}  // namespace specq
