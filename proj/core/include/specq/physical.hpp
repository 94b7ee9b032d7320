#pragma once

#include "specq/analysis.hpp"

namespace specq {

/// Maps dimensionless X = h nu / (k_B T) to physical units. The constants
/// are the exact SI-defined values.
struct PhysicalContext {
    double temperature_k;

    static constexpr double planck_h = 6.62607015e-34;   // J s
    static constexpr double boltzmann_k = 1.380649e-23;  // J / K
    static constexpr double lightspeed = 299792458.0;    // m / s
};

enum class SpectralAxis { frequency, wavelength };

double x_to_frequency(const PhysicalContext& ctx, double x);   // Hz
double x_to_wavelength(const PhysicalContext& ctx, double x);  // m
double frequency_to_x(const PhysicalContext& ctx, double nu);
double wavelength_to_x(const PhysicalContext& ctx, double lambda);

/// Q measured on the physical axis (nu_p/dnu or lambda_p/dlambda). Both
/// numerator and denominator scale linearly with T, so the result matches
/// the dimensionless q_direct (frequency) or q_reciprocal (wavelength)
/// independent of temperature.
double physical_q(const GeneralizedThermal& shape, const PhysicalContext& ctx,
                  const LevelSpec& level, SpectralAxis axis,
                  const ConvergenceControl& ctrl = {});

/// Wien displacement constant b = lambda_p * T = h c / (x_peak(M=5) k_B),
/// always computed from the peak equation, never stored.
double wien_displacement_b(const ConvergenceControl& ctrl = {});

}  // namespace specq
