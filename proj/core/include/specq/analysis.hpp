#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "specq/lineshape.hpp"

namespace specq {

/// A crossing level, stored as a power fraction alpha in (0,1). The dB view
/// is alpha = 10^(-db/10); the true half-power point alpha = 1/2 sits at
/// 10*log10(2) ~ 3.0103 dB, not at 3 dB.
class LevelSpec {
public:
    static LevelSpec fraction(double alpha);
    static LevelSpec decibels(double db);

    double alpha() const { return alpha_; }
    double db() const;

private:
    explicit LevelSpec(double alpha) : alpha_(alpha) {}
    double alpha_;
};

struct PeakInfo {
    double x;
    double value;
};

struct QFactors {
    double direct;
    std::optional<double> reciprocal;  // thermal family only (Y = 1/X axis)
};

/// Full analysis of one shape at one level. x_median and area_fraction are
/// absent for shapes without finite total area (BVD magnitude);
/// q_reciprocal is present for the thermal family only.
struct ShapeAnalysis {
    double x_peak;
    double f_peak;
    double x_lower;
    double x_upper;
    double bandwidth;
    double q_direct;
    std::optional<double> q_reciprocal;
    std::optional<double> x_median;
    std::optional<double> area_fraction;
    LevelSpec level;
};

/// Peak abscissa and value. Closed forms where they exist:
/// thermal n = -1 gives x_p = M + W0(-M e^-M), n = 0 gives x_p = M exactly;
/// other n by safeguarded Newton on X - M(1 + n e^-X) = 0. RLC peaks at
/// w = 1 and the centered families at 0 exactly; the BVD magnitude peak is
/// located numerically near w = 1.
PeakInfo find_peak(const LineShape& shape, const ConvergenceControl& ctrl = {});

/// Newton route to the thermal peak for any n >= -1; at n = -1 this is the
/// independent cross-check of the Lambert-W closed form.
double thermal_peak_newton(double m, double n, const ConvergenceControl& ctrl = {});

/// The two roots of evaluate(shape, x) = alpha * f_peak bracketing the peak.
/// The RLC pair at alpha = 1/2 is returned from the closed form
/// w = sqrt(1 + 1/(2Q)^2) -+ 1/(2Q) after verifying the numeric root
/// against it.
std::pair<double, double> level_points(const LineShape& shape,
                                       const LevelSpec& level,
                                       const ConvergenceControl& ctrl = {});

/// q_direct = x_ref / (x_upper - x_lower) with x_ref = x_peak for the
/// one-sided thermal family and x_ref = 1 (normalized center) for the
/// centered symmetric shapes and the RLC/BVD curves. For the thermal family
/// q_reciprocal repeats the measurement on the Y = 1/X axis.
QFactors q_factor(const LineShape& shape, const LevelSpec& level,
                  const ConvergenceControl& ctrl = {});

/// Abscissa splitting the total area in half, by bisection on the cumulative
/// integral; centered symmetric shapes return their center exactly.
double median_point(const LineShape& shape, const ConvergenceControl& ctrl = {});

/// Integral between the level crossings divided by the total area.
double area_fraction(const LineShape& shape, const LevelSpec& level,
                     const ConvergenceControl& ctrl = {});

/// Composes the operations above; any ConvergenceError is re-labeled with
/// the failing stage.
ShapeAnalysis full_report(const LineShape& shape, const LevelSpec& level,
                          const ConvergenceControl& ctrl = {});

struct CurvePoint {
    double x;
    double f;
};

/// Pointwise samples with linear or logarithmic spacing; endpoints are hit
/// exactly, count must be >= 2, and log spacing requires x_min > 0.
std::vector<CurvePoint> sample_curve(const LineShape& shape, double x_min,
                                     double x_max, int count, bool log_spacing,
                                     const ConvergenceControl& ctrl = {});

}  // namespace specq
