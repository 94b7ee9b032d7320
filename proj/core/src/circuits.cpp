#include "specq/circuits.hpp"

#include <cmath>

#include "specq/detail/solvers.hpp"

namespace specq {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

RlcSummary q_from_elements(const SeriesRlc& rlc) {
    if (!(rlc.r_ohms > 0.0) || !(rlc.l_henry > 0.0) || !(rlc.c_farad > 0.0))
        throw std::domain_error("q_from_elements: R, L and C must all be positive");
    const double char_impedance = std::sqrt(rlc.l_henry / rlc.c_farad);
    const double omega1 = 1.0 / std::sqrt(rlc.l_henry * rlc.c_farad);
    return {char_impedance / rlc.r_ohms, omega1, omega1 / (2.0 * kPi)};
}

std::pair<double, double> half_power_frequencies(double q) {
    if (!(q > 0.0))
        throw std::domain_error("half_power_frequencies: requires q > 0");
    const double h = 0.5 / q;
    const double s = std::sqrt(1.0 + h * h);
    return {s - h, s + h};
}

double q_from_log_decrement(double delta) {
    if (!(delta > 0.0))
        throw std::domain_error("q_from_log_decrement: requires delta > 0");
    return kPi / delta;
}

double q_from_restitution(double c_r) {
    if (!(c_r > 0.0 && c_r < 1.0))
        throw std::domain_error("q_from_restitution: requires 0 < c_r < 1");
    return (-kPi / 2.0) / std::log(c_r);
}

BvdBandwidth bvd_magnitude_bandwidth(const BvdParams& params,
                                     const LevelSpec& level,
                                     const ConvergenceControl& ctrl) {
    if (!(params.q > 0.0))
        throw std::domain_error("bvd_magnitude_bandwidth: requires q > 0");
    if (!(params.r_ratio >= 0.0))
        throw std::domain_error("bvd_magnitude_bandwidth: requires r_ratio >= 0");
    ctrl.validate();

    const auto mag = [&params](double w) {
        return evaluate_bvd_admittance_magnitude(params, w);
    };

    // interior maximum near w = 1; argmax on the window edge = merged modes
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
    BvdBandwidth out;
    if (best == 0 || best == kScan) {
        out.status = BvdBandwidth::Status::no_resonant_peak;
        return out;
    }
    const double om_max =
        detail::golden_max(mag, 0.5 + (best - 1) / static_cast<double>(kScan),
                           0.5 + (best + 1) / static_cast<double>(kScan));
    const double vmax = mag(om_max);
    out.omega_max = om_max;
    out.peak_magnitude = vmax;

    // the level is a power fraction, so the magnitude crossing sits at
    // sqrt(alpha) of the peak; at r = 0 and alpha = 1/2 this is the classic
    // band of exactly 1/Q
    const double lvl = std::sqrt(level.alpha()) * vmax;
    const auto excess = [&mag, lvl](double w) { return mag(w) - lvl; };

    double lo_b = 0.5 * om_max;
    double hi_b = om_max;
    double f_hi = vmax - lvl;
    double f_lo = excess(lo_b);
    int shrink = 0;
    while (f_lo > 0.0) {
        hi_b = lo_b;
        f_hi = f_lo;
        lo_b *= 0.5;
        if (++shrink > 2000)
            throw ConvergenceError("bvd_magnitude_bandwidth",
                                   "lower bracket shrink failed");
        f_lo = excess(lo_b);
    }
    const double lower = detail::brent_root(excess, lo_b, hi_b, f_lo, f_hi,
                                            ctrl.max_iter, "bvd_magnitude_bandwidth");

    double upper;
    if (params.r_ratio > 0.0) {
        const double window_hi =
            std::fmax(2.0 * std::sqrt(1.0 + 1.0 / params.r_ratio), om_max * 1.25);
        const double x_min = detail::golden_min(mag, om_max, window_hi);
        if (excess(x_min) >= 0.0) {
            out.status = BvdBandwidth::Status::crossings_absent;
            return out;
        }
        upper = detail::brent_root(excess, om_max, x_min, vmax - lvl,
                                   excess(x_min), ctrl.max_iter,
                                   "bvd_magnitude_bandwidth");
    } else {
        double a = om_max, fa = vmax - lvl;
        double b = 2.0 * om_max, fb = excess(b);
        int grow = 0;
        while (fb > 0.0) {
            a = b;
            fa = fb;
            b *= 2.0;
            if (++grow > 200)
                throw ConvergenceError("bvd_magnitude_bandwidth",
                                       "upper bracket growth failed");
            fb = excess(b);
        }
        upper = detail::brent_root(excess, a, b, fa, fb, ctrl.max_iter,
                                   "bvd_magnitude_bandwidth");
    }

    out.band = upper - lower;
    out.centered_q_estimate = om_max / out.band;
    return out;
}

}  // namespace specq
