#include "specq/physical.hpp"

#include <cmath>

#include "specq/specfun.hpp"

namespace specq {

namespace {
void check_context(const PhysicalContext& ctx) {
    if (!(ctx.temperature_k > 0.0))
        throw std::domain_error("PhysicalContext: temperature must be > 0 K");
}
}  // namespace

double x_to_frequency(const PhysicalContext& ctx, double x) {
    check_context(ctx);
    if (!(x > 0.0)) throw std::domain_error("x_to_frequency: requires x > 0");
    return x * PhysicalContext::boltzmann_k * ctx.temperature_k /
           PhysicalContext::planck_h;
}

double x_to_wavelength(const PhysicalContext& ctx, double x) {
    check_context(ctx);
    if (!(x > 0.0)) throw std::domain_error("x_to_wavelength: requires x > 0");
    return PhysicalContext::planck_h * PhysicalContext::lightspeed /
           (x * PhysicalContext::boltzmann_k * ctx.temperature_k);
}

double frequency_to_x(const PhysicalContext& ctx, double nu) {
    check_context(ctx);
    if (!(nu > 0.0)) throw std::domain_error("frequency_to_x: requires nu > 0");
    return PhysicalContext::planck_h * nu /
           (PhysicalContext::boltzmann_k * ctx.temperature_k);
}

double wavelength_to_x(const PhysicalContext& ctx, double lambda) {
    check_context(ctx);
    if (!(lambda > 0.0))
        throw std::domain_error("wavelength_to_x: requires lambda > 0");
    return PhysicalContext::planck_h * PhysicalContext::lightspeed /
           (lambda * PhysicalContext::boltzmann_k * ctx.temperature_k);
}

double physical_q(const GeneralizedThermal& shape, const PhysicalContext& ctx,
                  const LevelSpec& level, SpectralAxis axis,
                  const ConvergenceControl& ctrl) {
    check_context(ctx);
    const LineShape s = shape;
    const PeakInfo pk = find_peak(s, ctrl);
    const auto [lo, hi] = level_points(s, level, ctrl);
    if (axis == SpectralAxis::frequency) {
        const double nu_p = x_to_frequency(ctx, pk.x);
        const double dnu = x_to_frequency(ctx, hi) - x_to_frequency(ctx, lo);
        return nu_p / dnu;
    }
    const double lambda_p = x_to_wavelength(ctx, pk.x);
    const double dlambda = x_to_wavelength(ctx, lo) - x_to_wavelength(ctx, hi);
    return lambda_p / dlambda;
}

double wien_displacement_b(const ConvergenceControl& ctrl) {
    const double x5 = 5.0 + lambert_w0(-5.0 * std::exp(-5.0), ctrl);
    return PhysicalContext::planck_h * PhysicalContext::lightspeed /
           (x5 * PhysicalContext::boltzmann_k);
}

}  // namespace specq
