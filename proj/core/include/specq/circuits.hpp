#pragma once

#include <utility>

#include "specq/analysis.hpp"

namespace specq {

struct SeriesRlc {
    double r_ohms;
    double l_henry;
    double c_farad;
};

struct RlcSummary {
    double q;       // (1/R) sqrt(L/C)
    double omega1;  // 1/sqrt(LC), rad/s
    double f1;      // omega1 / 2pi, Hz
};

RlcSummary q_from_elements(const SeriesRlc& rlc);

/// Closed-form half-power frequencies of the normalized conductance,
/// w(-+) = sqrt(1 + 1/(2Q)^2) -+ 1/(2Q); w+ w- = 1 and w+ - w- = 1/Q.
std::pair<double, double> half_power_frequencies(double q);

/// Q = pi / delta for a ring-down with logarithmic decrement delta.
double q_from_log_decrement(double delta);

/// Q = (-pi/2) / ln(C_R) for a bouncing ball with restitution C_R in (0,1).
double q_from_restitution(double c_r);

/// Bandwidth measured on the admittance magnitude |Y R|, where the naive
/// f/df estimate becomes a joint property of Q and r. The level is a power
/// fraction, so crossings sit where |Y R| falls to sqrt(alpha) of its peak
/// (at r = 0 this reduces the band to exactly 1/Q).
struct BvdBandwidth {
    enum class Status {
        ok,
        no_resonant_peak,   // |Y R| has no interior maximum near w = 1
        crossings_absent,   // the dip past the peak never reaches the level
    };
    Status status = Status::ok;
    double omega_max = 0.0;
    double peak_magnitude = 0.0;
    double band = 0.0;
    double centered_q_estimate = 0.0;  // omega_max / band
};

BvdBandwidth bvd_magnitude_bandwidth(const BvdParams& params,
                                     const LevelSpec& level,
                                     const ConvergenceControl& ctrl = {});

}  // namespace specq
