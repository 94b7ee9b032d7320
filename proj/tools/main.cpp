// specq: quality factors, level crossings, medians and area fractions of
// spectral line shapes and resonance curves.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "render.hpp"
#include "tables.hpp"
#include "specq/circuits.hpp"
#include "specq/physical.hpp"

namespace {

using namespace specq;

struct GlobalOpts {
    std::string format;  // empty = per-command default
    bool full_precision = false;

    int sig() const { return full_precision ? 17 : 6; }
    std::string format_or(const std::string& fallback) const {
        return format.empty() ? fallback : format;
    }
};

ConvergenceControl control_from_env() {
    ConvergenceControl ctrl;
    if (const char* tol = std::getenv("Q_ANALYZER_TOL"); tol != nullptr) {
        char* end = nullptr;
        const double v = std::strtod(tol, &end);
        if (end == tol || *end != '\0' || !std::isfinite(v) || !(v > 0.0))
            throw std::domain_error(
                "Q_ANALYZER_TOL must be a positive number, got '" +
                std::string(tol) + "'");
        ctrl.rel_tol = v;
    }
    return ctrl;
}

struct ShapeFlags {
    std::string shape;
    double m = 0.0;
    double n = -1.0;
    std::string stats;
    double q = 0.0;
    double r = 0.0;
    double ratio = 1.0;
    CLI::Option* opt_m = nullptr;
    CLI::Option* opt_n = nullptr;
    CLI::Option* opt_stats = nullptr;
    CLI::Option* opt_q = nullptr;
    CLI::Option* opt_r = nullptr;
    CLI::Option* opt_ratio = nullptr;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--shape", shape, "thermal|gaussian|lorentzian|rlc|bvd|voigt")
            ->required()
            ->check(CLI::IsMember(
                {"thermal", "gaussian", "lorentzian", "rlc", "bvd", "voigt"}));
        opt_m = cmd->add_option("--m", m, "thermal exponent M (> 1)");
        opt_n = cmd->add_option("--n", n,
                                "thermal statistics index n >= -1 (default -1)");
        opt_stats = cmd->add_option("--stats", stats,
                                    "statistics alias: be (n=-1), mb (0), fd (+1)")
                        ->check(CLI::IsMember({"be", "mb", "fd"}));
        opt_stats->excludes(opt_n);
        opt_q = cmd->add_option("--q", q, "quality factor for rlc/bvd");
        opt_r = cmd->add_option("--r", r, "BVD capacitance ratio r = C0/C");
        opt_ratio = cmd->add_option("--ratio", ratio, "Voigt gamma/sigma ratio");
    }

    void forbid(const CLI::Option* opt, const char* name) const {
        if (opt->count() > 0)
            throw std::domain_error(std::string(name) +
                                    " does not apply to shape '" + shape + "'");
    }

    LineShape build() const {
        if (shape == "thermal") {
            forbid(opt_q, "--q");
            forbid(opt_r, "--r");
            forbid(opt_ratio, "--ratio");
            if (opt_m->count() == 0)
                throw std::domain_error("--m is required for the thermal shape");
            double nn = n;
            if (opt_stats->count() > 0)
                nn = stats == "be" ? -1.0 : stats == "mb" ? 0.0 : 1.0;
            return GeneralizedThermal{m, nn};
        }
        forbid(opt_m, "--m");
        forbid(opt_n, "--n");
        forbid(opt_stats, "--stats");
        if (shape == "gaussian" || shape == "lorentzian" || shape == "voigt") {
            forbid(opt_q, "--q");
            forbid(opt_r, "--r");
            if (shape == "gaussian") {
                forbid(opt_ratio, "--ratio");
                return Gaussian{};
            }
            if (shape == "lorentzian") {
                forbid(opt_ratio, "--ratio");
                return Lorentzian{};
            }
            return Voigt{ratio};
        }
        forbid(opt_ratio, "--ratio");
        if (opt_q->count() == 0)
            throw std::domain_error("--q is required for shape '" + shape + "'");
        if (shape == "rlc") {
            forbid(opt_r, "--r");
            return RlcConductance{q};
        }
        return BvdParams{q, r};
    }

    std::optional<double> m_field() const {
        return shape == "thermal" ? std::optional<double>(m) : std::nullopt;
    }
    std::optional<double> n_field() const {
        if (shape != "thermal") return std::nullopt;
        double nn = n;
        if (opt_stats->count() > 0)
            nn = stats == "be" ? -1.0 : stats == "mb" ? 0.0 : 1.0;
        return nn;
    }
};

struct LevelFlags {
    double level = 0.5;
    double db = 0.0;
    CLI::Option* opt_level = nullptr;
    CLI::Option* opt_db = nullptr;

    void add_to(CLI::App* cmd) {
        opt_level = cmd->add_option("--level", level,
                                    "crossing level as a power fraction in (0,1)");
        opt_db = cmd->add_option("--db", db, "crossing level in dB (> 0)");
        opt_db->excludes(opt_level);
    }

    LevelSpec build() const {
        if (opt_db->count() > 0) return LevelSpec::decibels(db);
        return LevelSpec::fraction(level);
    }
};

void emit(const std::string& s) { std::fputs(s.c_str(), stdout); }

int run_analyze(const GlobalOpts& g, const ShapeFlags& sf, const LevelFlags& lf) {
    const ConvergenceControl ctrl = control_from_env();
    const LineShape shape = sf.build();
    const ShapeAnalysis rep = full_report(shape, lf.build(), ctrl);
    const auto doc = render::analysis_doc(sf.shape, sf.m_field(), sf.n_field(), rep);
    const std::string fmt = g.format_or("text");
    if (fmt == "json")
        emit(doc.dump(2) + "\n");
    else if (fmt == "csv")
        emit(render::analysis_csv(doc, g.sig()));
    else
        emit(render::analysis_text(doc, g.sig()));
    return 0;
}

int run_table(const GlobalOpts& g, const std::string& id_text) {
    const ConvergenceControl ctrl = control_from_env();
    const auto doc = render::table_doc(render::parse_table_id(id_text), ctrl);
    const std::string fmt = g.format_or("text");
    if (fmt == "json")
        emit(doc.dump(2) + "\n");
    else if (fmt == "csv")
        emit(render::table_csv(doc, g.sig()));
    else
        emit(render::table_text(doc, g.sig()));
    return 0;
}

int run_curve(const GlobalOpts& g, const ShapeFlags& sf, double from, double to,
              int points, bool log_spacing, bool rj_asymptote) {
    const ConvergenceControl ctrl = control_from_env();
    const std::string fmt = g.format_or("csv");
    if (fmt != "csv")
        throw std::domain_error("curve emits CSV only (--format csv)");
    const LineShape shape = sf.build();
    if (rj_asymptote && sf.shape != "thermal")
        throw std::domain_error("--rj-asymptote applies to the thermal shape only");

    auto pts = sample_curve(shape, from, to, points, log_spacing, ctrl);
    if (rj_asymptote) {
        // low-X equipartition reference of the same dispersion rule
        for (auto& p : pts) p.f = std::pow(p.x, sf.m - 1.0);
    }
    const bool circuit = sf.shape == "rlc" || sf.shape == "bvd";
    emit(render::curve_csv(pts, circuit ? "omega" : "x", circuit ? "g" : "f",
                           g.sig()));
    return 0;
}

int run_convert(const GlobalOpts& g, double temperature, double x_value,
                const std::string& peak_of, const CLI::Option* opt_x,
                const CLI::Option* opt_peak) {
    const ConvergenceControl ctrl = control_from_env();
    if ((opt_x->count() > 0) == (opt_peak->count() > 0))
        throw std::domain_error("convert needs exactly one of --x or --peak-of");

    const PhysicalContext ctx{temperature};
    double x = x_value;
    std::optional<double> nu_p_over_t, lambda_p_times_t;
    if (opt_peak->count() > 0) {
        const double m = peak_of == "m3" ? 3.0 : 5.0;
        x = find_peak(GeneralizedThermal{m, -1.0}, ctrl).x;
        if (peak_of == "m3")
            nu_p_over_t = x_to_frequency(ctx, x) / temperature;
        else
            lambda_p_times_t = x_to_wavelength(ctx, x) * temperature;
    }
    const auto doc =
        render::convert_doc(temperature, x, x_to_frequency(ctx, x),
                            x_to_wavelength(ctx, x), nu_p_over_t, lambda_p_times_t);
    const std::string fmt = g.format_or("text");
    if (fmt == "json")
        emit(doc.dump(2) + "\n");
    else if (fmt == "csv")
        emit(render::keyvalue_csv(doc, g.sig()));
    else
        emit(render::keyvalue_text(doc, g.sig()));
    return 0;
}

struct RlcFlags {
    double q = 0.0, r = 0.0, l = 0.0, c = 0.0, decrement = 0.0, restitution = 0.0;
    CLI::Option *opt_q = nullptr, *opt_r = nullptr, *opt_l = nullptr,
                *opt_c = nullptr, *opt_dec = nullptr, *opt_res = nullptr;
};

int run_rlc(const GlobalOpts& g, const RlcFlags& f) {
    const bool has_q = f.opt_q->count() > 0;
    const bool has_elements =
        f.opt_r->count() > 0 || f.opt_l->count() > 0 || f.opt_c->count() > 0;
    const bool has_dec = f.opt_dec->count() > 0;
    const bool has_res = f.opt_res->count() > 0;
    const int groups = static_cast<int>(has_q) + static_cast<int>(has_elements) +
                       static_cast<int>(has_dec) + static_cast<int>(has_res);
    if (groups != 1)
        throw std::domain_error(
            "rlc needs exactly one of --q, (--r --l --c), --decrement, --restitution");

    double q;
    std::optional<double> omega1, f1;
    if (has_elements) {
        if (f.opt_r->count() == 0 || f.opt_l->count() == 0 || f.opt_c->count() == 0)
            throw std::domain_error("element input needs all of --r, --l and --c");
        const auto summary = q_from_elements({f.r, f.l, f.c});
        q = summary.q;
        omega1 = summary.omega1;
        f1 = summary.f1;
    } else if (has_q) {
        q = f.q;
    } else if (has_dec) {
        q = q_from_log_decrement(f.decrement);
    } else {
        q = q_from_restitution(f.restitution);
    }

    const auto [lo, hi] = half_power_frequencies(q);
    const auto doc = render::rlc_doc(q, lo, hi, hi - lo, omega1, f1);
    const std::string fmt = g.format_or("text");
    if (fmt == "json")
        emit(doc.dump(2) + "\n");
    else if (fmt == "csv")
        emit(render::keyvalue_csv(doc, g.sig()));
    else
        emit(render::keyvalue_text(doc, g.sig()));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Line-shape and resonance Q analyzer"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_flag("--full-precision", g.full_precision,
                 "render 17 significant digits instead of 6");

    auto* analyze = app.add_subcommand("analyze", "full report for one shape");
    analyze->fallthrough();
    ShapeFlags an_shape;
    LevelFlags an_level;
    an_shape.add_to(analyze);
    an_level.add_to(analyze);

    auto* table = app.add_subcommand("table", "recompute a reference table");
    table->fallthrough();
    std::string table_id;
    table->add_option("id", table_id, "III, IV, V or VI")->required();

    auto* curve = app.add_subcommand("curve", "sample a curve as CSV");
    curve->fallthrough();
    ShapeFlags cu_shape;
    cu_shape.add_to(curve);
    double cu_from = 0.0, cu_to = 0.0;
    int cu_points = 200;
    bool cu_log = false, cu_rj = false;
    curve->add_option("--from", cu_from, "lower abscissa")->required();
    curve->add_option("--to", cu_to, "upper abscissa")->required();
    curve->add_option("--points", cu_points, "sample count (default 200)");
    curve->add_flag("--log", cu_log, "logarithmic spacing (needs --from > 0)");
    curve->add_flag("--rj-asymptote", cu_rj,
                    "emit the X^(M-1) equipartition reference instead");

    auto* convert = app.add_subcommand("convert", "map X to physical units");
    convert->fallthrough();
    double cv_temp = 0.0, cv_x = 0.0;
    std::string cv_peak;
    convert->add_option("--temperature", cv_temp, "absolute temperature in K")
        ->required();
    auto* cv_opt_x = convert->add_option("--x", cv_x, "dimensionless abscissa");
    auto* cv_opt_peak =
        convert->add_option("--peak-of", cv_peak, "m3 or m5 spectral peak")
            ->check(CLI::IsMember({"m3", "m5"}));

    auto* rlc = app.add_subcommand("rlc", "series-RLC quality factor utilities");
    rlc->fallthrough();
    RlcFlags rf;
    rf.opt_q = rlc->add_option("--q", rf.q, "quality factor");
    rf.opt_r = rlc->add_option("--r", rf.r, "resistance in ohm");
    rf.opt_l = rlc->add_option("--l", rf.l, "inductance in henry");
    rf.opt_c = rlc->add_option("--c", rf.c, "capacitance in farad");
    rf.opt_dec = rlc->add_option("--decrement", rf.decrement,
                                 "logarithmic decrement delta");
    rf.opt_res = rlc->add_option("--restitution", rf.restitution,
                                 "coefficient of restitution in (0,1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(g, an_shape, an_level);
        if (table->parsed()) return run_table(g, table_id);
        if (curve->parsed())
            return run_curve(g, cu_shape, cu_from, cu_to, cu_points, cu_log, cu_rj);
        if (convert->parsed())
            return run_convert(g, cv_temp, cv_x, cv_peak, cv_opt_x, cv_opt_peak);
        if (rlc->parsed()) return run_rlc(g, rf);
    } catch (const ConvergenceError& e) {
        std::fprintf(stderr, "error (numerical, stage %s): %s\n",
                     e.stage().c_str(), e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
