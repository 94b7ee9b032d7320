#include "render.hpp"

#include <cstdio>

namespace specq::render {

namespace {

const char* kAnalysisFields[] = {
    "shape",      "m",         "n",          "level_fraction", "x_peak",
    "f_peak",     "x_lower",   "x_upper",    "bandwidth",      "q_direct",
    "q_reciprocal", "x_median", "area_fraction"};

std::string value_text(const nlohmann::ordered_json& v, int sig) {
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    return format_sig(v.get<double>(), sig);
}

}  // namespace

std::string format_sig(double v, int sig) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", sig, v);
    return buf;
}

nlohmann::ordered_json analysis_doc(const std::string& shape_name,
                            std::optional<double> m, std::optional<double> n,
                            const ShapeAnalysis& report) {
    nlohmann::ordered_json doc;
    doc["shape"] = shape_name;
    doc["m"] = m.has_value() ? nlohmann::ordered_json(*m) : nlohmann::ordered_json();
    doc["n"] = n.has_value() ? nlohmann::ordered_json(*n) : nlohmann::ordered_json();
    doc["level_fraction"] = report.level.alpha();
    doc["x_peak"] = report.x_peak;
    doc["f_peak"] = report.f_peak;
    doc["x_lower"] = report.x_lower;
    doc["x_upper"] = report.x_upper;
    doc["bandwidth"] = report.bandwidth;
    doc["q_direct"] = report.q_direct;
    doc["q_reciprocal"] = report.q_reciprocal.has_value()
                              ? nlohmann::ordered_json(*report.q_reciprocal)
                              : nlohmann::ordered_json();
    doc["x_median"] = report.x_median.has_value()
                          ? nlohmann::ordered_json(*report.x_median)
                          : nlohmann::ordered_json();
    doc["area_fraction"] = report.area_fraction.has_value()
                               ? nlohmann::ordered_json(*report.area_fraction)
                               : nlohmann::ordered_json();
    return doc;
}

std::string analysis_text(const nlohmann::ordered_json& doc, int sig) {
    std::string out;
    for (const char* field : kAnalysisFields) {
        char line[128];
        std::snprintf(line, sizeof line, "%-15s %s\n", (std::string(field) + ":").c_str(),
                      value_text(doc.at(field), sig).c_str());
        out += line;
    }
    return out;
}

std::string analysis_csv(const nlohmann::ordered_json& doc, int sig) {
    std::string out = "field,value\n";
    for (const char* field : kAnalysisFields) {
        out += field;
        out += ',';
        const auto& v = doc.at(field);
        if (!v.is_null()) out += v.is_string() ? v.get<std::string>() : format_sig(v.get<double>(), sig);
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json convert_doc(double temperature_k, double x, double frequency_hz,
                           double wavelength_m,
                           std::optional<double> nu_p_over_t,
                           std::optional<double> lambda_p_times_t) {
    nlohmann::ordered_json doc;
    doc["temperature_k"] = temperature_k;
    doc["x"] = x;
    doc["frequency_hz"] = frequency_hz;
    doc["wavelength_m"] = wavelength_m;
    if (nu_p_over_t.has_value()) doc["nu_p_over_t_hz_per_k"] = *nu_p_over_t;
    if (lambda_p_times_t.has_value()) doc["lambda_p_times_t_m_k"] = *lambda_p_times_t;
    return doc;
}

std::string keyvalue_text(const nlohmann::ordered_json& doc, int sig) {
    std::string out;
    for (const auto& [key, v] : doc.items()) {
        char line[160];
        std::snprintf(line, sizeof line, "%-22s %s\n", (key + ":").c_str(),
                      value_text(v, sig).c_str());
        out += line;
    }
    return out;
}

std::string keyvalue_csv(const nlohmann::ordered_json& doc, int sig) {
    std::string out = "field,value\n";
    for (const auto& [key, v] : doc.items()) {
        out += key;
        out += ',';
        if (!v.is_null()) out += v.is_string() ? v.get<std::string>() : format_sig(v.get<double>(), sig);
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json rlc_doc(double q, double omega_lower, double omega_upper,
                       double bandwidth, std::optional<double> omega1,
                       std::optional<double> f1) {
    nlohmann::ordered_json doc;
    doc["q"] = q;
    doc["omega_lower"] = omega_lower;
    doc["omega_upper"] = omega_upper;
    doc["bandwidth"] = bandwidth;
    if (omega1.has_value()) doc["omega1_rad_s"] = *omega1;
    if (f1.has_value()) doc["f1_hz"] = *f1;
    return doc;
}

std::string curve_csv(const std::vector<CurvePoint>& points,
                      const std::string& x_name, const std::string& f_name,
                      int sig) {
    std::string out = x_name + "," + f_name + "\n";
    for (const auto& p : points) {
        out += format_sig(p.x, sig);
        out += ',';
        out += format_sig(p.f, sig);
        out += '\n';
    }
    return out;
}

}  // namespace specq::render
