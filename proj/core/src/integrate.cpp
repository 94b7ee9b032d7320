#include "specq/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace specq {

namespace {

// 15-point Kronrod extension of 7-point Gauss-Legendre (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b;
    double integral;
    double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(center - half * kXgk[i]);
        fv[14 - i] = f(center + half * kXgk[i]);
    }
    fv[7] = f(center);

    double kron = kWgk[7] * fv[7];
    double gauss = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kron += kWgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1)  // odd Kronrod indices are the Gauss nodes
            gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }
    kron *= half;
    gauss *= half;
    double err = std::fabs(kron - gauss);
    if (!std::isfinite(kron)) err = std::numeric_limits<double>::infinity();
    return {a, b, kron, err};
}

}  // namespace

double adaptive_integrate(const std::function<double(double)>& f, double a,
                          double b, const ConvergenceControl& ctrl) {
    ctrl.validate();
    if (std::isnan(a) || std::isnan(b))
        throw std::domain_error("adaptive_integrate: NaN endpoint");
    if (a == b) return 0.0;
    if (!(a < b))
        throw std::domain_error("adaptive_integrate: requires a < b");

    const bool inf_lo = std::isinf(a);
    const bool inf_hi = std::isinf(b);
    if (inf_lo && inf_hi) {
        return adaptive_integrate(f, a, 0.0, ctrl) +
               adaptive_integrate(f, 0.0, b, ctrl);
    }
    if (inf_lo) {
        // reflect onto a semi-infinite upper range
        const double bb = b;
        return adaptive_integrate([&f, bb](double u) { return f(2.0 * bb - u); },
                                  bb, std::numeric_limits<double>::infinity(),
                                  ctrl);
    }

    std::function<double(double)> g;
    double lo = a, hi = b;
    if (inf_hi) {
        // x = a + t/(1-t) maps [0,1) onto [a, inf); nodes stay interior.
        const double aa = a;
        g = [&f, aa](double t) {
            const double om = 1.0 - t;
            const double x = aa + t / om;
            const double fx = f(x);
            return fx == 0.0 ? 0.0 : fx / (om * om);
        };
        lo = 0.0;
        hi = 1.0;
    } else {
        g = f;
    }

    constexpr std::size_t kMaxPanels = 5000;
    std::vector<Panel> panels;
    panels.reserve(256);
    panels.push_back(gk15(g, lo, hi));

    while (true) {
        double total = 0.0, err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            total += panels[i].integral;
            err += panels[i].error;
            if (panels[i].error > panels[worst].error) worst = i;
        }
        if (err <= std::fmax(ctrl.abs_tol, ctrl.rel_tol * std::fabs(total)))
            return total;
        if (panels.size() >= kMaxPanels)
            throw ConvergenceError("adaptive_integrate",
                                   "error goal not met within subdivision budget");
        const Panel p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        if (!(p.a < mid && mid < p.b))
            throw ConvergenceError("adaptive_integrate",
                                   "panel width exhausted before error goal");
        panels[worst] = gk15(g, p.a, mid);
        panels.push_back(gk15(g, mid, p.b));
    }
}

}  // namespace specq
