#include "specq/analysis.hpp"

#include <cmath>
#include <limits>

#include "specq/detail/solvers.hpp"
#include "specq/integrate.hpp"
#include "specq/specfun.hpp"

namespace specq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_thermal(const LineShape& s) {
    return std::holds_alternative<GeneralizedThermal>(s);
}

bool is_centered(const LineShape& s) {
    return domain(s).symmetric_center.has_value();
}

// Interior |Y R| maximum near resonance; the search window (0.5, 1.5) is the
// mode-merge detector: an edge argmax means the shunt branch has swallowed
// the resonance.
PeakInfo bvd_peak(const BvdParams& p) {
    const auto mag = [&p](double w) {
        return evaluate_bvd_admittance_magnitude(p, w);
    };
    constexpr int kScan = 2048;
    int best = 0;
    double best_v = -1.0;
    for (int i = 0; i <= kScan; ++i) {
        const double w = 0.5 + i / static_cast<double>(kScan);
        const double v = mag(w);
        if (v > best_v) {
            best_v = v;
            best = i;
        }
    }
    if (best == 0 || best == kScan)
        throw std::domain_error(
            "find_peak: BVD magnitude has no interior resonance peak in (0.5, 1.5)");
    const double lo = 0.5 + (best - 1) / static_cast<double>(kScan);
    const double hi = 0.5 + (best + 1) / static_cast<double>(kScan);
    const double x = detail::golden_max(mag, lo, hi);
    return {x, mag(x)};
}

}  // namespace

LevelSpec LevelSpec::fraction(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("LevelSpec: fraction must lie strictly in (0, 1)");
    return LevelSpec(alpha);
}

LevelSpec LevelSpec::decibels(double db) {
    if (!(db > 0.0))
        throw std::domain_error("LevelSpec: dB value must be > 0");
    return LevelSpec(std::pow(10.0, -db / 10.0));
}

double LevelSpec::db() const { return -10.0 * std::log10(alpha_); }

double thermal_peak_newton(double m, double n, const ConvergenceControl& ctrl) {
    ctrl.validate();
    if (!(m > 1.0))
        throw std::domain_error("thermal_peak_newton: requires m > 1");
    if (!(n >= -1.0))
        throw std::domain_error("thermal_peak_newton: requires n >= -1");
    if (n == 0.0) return m;

    const auto h = [m, n](double x) { return x - m * (1.0 + n * std::exp(-x)); };
    const auto hp = [m, n](double x) { return 1.0 + m * n * std::exp(-x); };

    double lo = std::fmax(0.0, m - 1.0);  // h(lo) < 0 for every m > 1
    double hi = m + 1.0;
    int guard = 0;
    while (h(hi) < 0.0) {  // only reachable for n > 1
        hi += 1.0;
        if (++guard > 1000)
            throw ConvergenceError("thermal_peak_newton", "bracket growth failed");
    }

    double x = 0.5 * (lo + hi);
    for (int it = 0; it < ctrl.max_iter; ++it) {
        const double hv = h(x);
        if (hv > 0.0)
            hi = x;
        else
            lo = x;
        const double dv = hp(x);
        double xn = dv != 0.0 ? x - hv / dv : 0.5 * (lo + hi);
        if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
        const double step = std::fabs(xn - x);
        x = xn;
        if (step <= ctrl.rel_tol * std::fabs(x) + ctrl.abs_tol) return x;
    }
    throw ConvergenceError("thermal_peak_newton", "iteration exceeded max_iter");
}

PeakInfo find_peak(const LineShape& shape, const ConvergenceControl& ctrl) {
    validate(shape);
    ctrl.validate();
    return std::visit(
        [&shape, &ctrl](const auto& s) -> PeakInfo {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GeneralizedThermal>) {
                double x;
                if (s.n == 0.0)
                    x = s.m;
                else if (s.n == -1.0)
                    x = s.m + lambert_w0(-s.m * std::exp(-s.m), ctrl);
                else
                    x = thermal_peak_newton(s.m, s.n, ctrl);
                return {x, evaluate(shape, x, ctrl)};
            } else if constexpr (std::is_same_v<T, RlcConductance>) {
                return {1.0, 1.0};
            } else if constexpr (std::is_same_v<T, BvdParams>) {
                return bvd_peak(s);
            } else {
                // Gaussian, Lorentzian, Voigt peak at the center, unit value
                return {0.0, 1.0};
            }
        },
        shape);
}

std::pair<double, double> level_points(const LineShape& shape,
                                       const LevelSpec& level,
                                       const ConvergenceControl& ctrl) {
    validate(shape);
    ctrl.validate();
    const double alpha = level.alpha();
    const PeakInfo pk = find_peak(shape, ctrl);
    const double target = alpha * pk.value;
    const auto excess = [&shape, &ctrl, target](double x) {
        return evaluate(shape, x, ctrl) - target;
    };

    // upper root
    double upper;
    const auto* bvd = std::get_if<BvdParams>(&shape);
    if (bvd != nullptr && bvd->r_ratio > 0.0) {
        // the curve rises again past the antiresonance; confine the search
        // to the valley between the two
        const double window_hi =
            std::fmax(2.0 * std::sqrt(1.0 + 1.0 / bvd->r_ratio), pk.x * 1.25);
        const auto mag = [bvd](double w) {
            return evaluate_bvd_admittance_magnitude(*bvd, w);
        };
        const double x_min = detail::golden_min(mag, pk.x, window_hi);
        const double f_min = excess(x_min);
        if (f_min >= 0.0)
            throw ConvergenceError(
                "level_points",
                "upper crossing absent: BVD shunt branch dominates the dip");
        upper = detail::brent_root(excess, pk.x, x_min, pk.value - target, f_min,
                                   ctrl.max_iter, "level_points");
    } else {
        double lo_b = pk.x;
        double f_lo = pk.value - target;
        double hi_b = pk.x > 0.0 ? 2.0 * pk.x : 1.0;
        double f_hi = excess(hi_b);
        int grow = 0;
        while (f_hi > 0.0) {
            lo_b = hi_b;
            f_lo = f_hi;
            hi_b *= 2.0;
            if (++grow > 200)
                throw ConvergenceError("level_points", "upper bracket growth failed");
            f_hi = excess(hi_b);
        }
        upper = detail::brent_root(excess, lo_b, hi_b, f_lo, f_hi, ctrl.max_iter,
                                   "level_points");
    }

    // lower root
    double lower;
    if (is_centered(shape)) {
        lower = -upper;  // even shapes
    } else {
        double hi_b = pk.x;
        double f_hi = pk.value - target;
        double lo_b = 0.5 * pk.x;
        double f_lo = excess(lo_b);
        int shrink = 0;
        while (f_lo > 0.0) {
            hi_b = lo_b;
            f_hi = f_lo;
            lo_b *= 0.5;
            if (++shrink > 2000)
                throw ConvergenceError("level_points", "lower bracket shrink failed");
            f_lo = excess(lo_b);
        }
        lower = detail::brent_root(excess, lo_b, hi_b, f_lo, f_hi, ctrl.max_iter,
                                   "level_points");
    }

    if (const auto* rlc = std::get_if<RlcConductance>(&shape);
        rlc != nullptr && alpha == 0.5) {
        // half-power closed form: w(-+) = sqrt(1 + 1/(2Q)^2) -+ 1/(2Q)
        const double h = 0.5 / rlc->q;
        const double s = std::sqrt(1.0 + h * h);
        const double cl = s - h, cu = s + h;
        if (std::fabs(lower - cl) > 1e-9 * cl || std::fabs(upper - cu) > 1e-9 * cu)
            throw ConvergenceError("level_points",
                                   "numeric RLC root disagrees with the closed form");
        return {cl, cu};
    }
    return {lower, upper};
}

QFactors q_factor(const LineShape& shape, const LevelSpec& level,
                  const ConvergenceControl& ctrl) {
    const PeakInfo pk = find_peak(shape, ctrl);
    const auto [lo, hi] = level_points(shape, level, ctrl);
    const double x_ref = is_thermal(shape) ? pk.x : 1.0;
    QFactors out{x_ref / (hi - lo), std::nullopt};
    if (is_thermal(shape)) {
        // same measurement on the reciprocal axis Y = 1/X
        const double y_peak = 1.0 / pk.x;
        const double dy = 1.0 / lo - 1.0 / hi;
        out.reciprocal = y_peak / dy;
    }
    return out;
}

double median_point(const LineShape& shape, const ConvergenceControl& ctrl) {
    validate(shape);
    ctrl.validate();
    if (!has_finite_area(shape))
        throw std::domain_error("median_point: shape has no finite total area");
    if (const auto center = domain(shape).symmetric_center; center.has_value())
        return *center;

    const double total = total_area(shape, ctrl);
    const auto cumulative = [&shape, &ctrl](double x) {
        return adaptive_integrate(
            [&shape, &ctrl](double t) { return evaluate(shape, t, ctrl); }, 0.0, x,
            ctrl);
    };

    double lo = 0.0;
    double hi = level_points(shape, LevelSpec::fraction(0.01), ctrl).second;
    int guard = 0;
    while (cumulative(hi) < 0.5 * total) {
        lo = hi;
        hi *= 2.0;
        if (++guard > 60)
            throw ConvergenceError("median_point", "bracket growth failed");
    }
    for (int i = 0; i < 200 && hi - lo > 1e-13 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (cumulative(mid) < 0.5 * total)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double area_fraction(const LineShape& shape, const LevelSpec& level,
                     const ConvergenceControl& ctrl) {
    validate(shape);
    ctrl.validate();
    if (!has_finite_area(shape))
        throw std::domain_error("area_fraction: shape has no finite total area");
    const auto [lo, hi] = level_points(shape, level, ctrl);
    const double between = adaptive_integrate(
        [&shape, &ctrl](double t) { return evaluate(shape, t, ctrl); }, lo, hi,
        ctrl);
    return between / total_area(shape, ctrl);
}

ShapeAnalysis full_report(const LineShape& shape, const LevelSpec& level,
                          const ConvergenceControl& ctrl) {
    const auto relabel = [](const char* stage, const ConvergenceError& e) {
        return ConvergenceError(stage, e.what());
    };

    PeakInfo pk{};
    std::pair<double, double> lohi;
    try {
        pk = find_peak(shape, ctrl);
    } catch (const ConvergenceError& e) {
        throw relabel("full_report/find_peak", e);
    }
    try {
        lohi = level_points(shape, level, ctrl);
    } catch (const ConvergenceError& e) {
        throw relabel("full_report/level_points", e);
    }

    ShapeAnalysis out{pk.x,
                      pk.value,
                      lohi.first,
                      lohi.second,
                      lohi.second - lohi.first,
                      (is_thermal(shape) ? pk.x : 1.0) / (lohi.second - lohi.first),
                      std::nullopt,
                      std::nullopt,
                      std::nullopt,
                      level};
    if (is_thermal(shape))
        out.q_reciprocal = (1.0 / pk.x) / (1.0 / lohi.first - 1.0 / lohi.second);

    if (has_finite_area(shape)) {
        try {
            out.x_median = median_point(shape, ctrl);
        } catch (const ConvergenceError& e) {
            throw relabel("full_report/median_point", e);
        }
        try {
            out.area_fraction = area_fraction(shape, level, ctrl);
        } catch (const ConvergenceError& e) {
            throw relabel("full_report/area_fraction", e);
        }
    }
    return out;
}

std::vector<CurvePoint> sample_curve(const LineShape& shape, double x_min,
                                     double x_max, int count, bool log_spacing,
                                     const ConvergenceControl& ctrl) {
    validate(shape);
    ctrl.validate();
    if (count < 2)
        throw std::domain_error("sample_curve: count must be >= 2");
    if (!(x_min < x_max))
        throw std::domain_error("sample_curve: requires x_min < x_max");
    if (log_spacing && !(x_min > 0.0))
        throw std::domain_error("sample_curve: log spacing requires x_min > 0");

    std::vector<CurvePoint> pts;
    pts.reserve(static_cast<std::size_t>(count));
    const double l0 = log_spacing ? std::log(x_min) : x_min;
    const double l1 = log_spacing ? std::log(x_max) : x_max;
    for (int i = 0; i < count; ++i) {
        double x;
        if (i == 0)
            x = x_min;
        else if (i == count - 1)
            x = x_max;
        else {
            const double t = l0 + (l1 - l0) * i / (count - 1);
            x = log_spacing ? std::exp(t) : t;
        }
        pts.push_back({x, evaluate(shape, x, ctrl)});
    }
    return pts;
}

}  // namespace specq
