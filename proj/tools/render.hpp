#pragma once

// Rendering layer for the CLI: every command first builds a JSON document,
// and the text/CSV views are pure functions of that document. That keeps the
// three formats value-identical and makes the JSON round-trip exact.

#include <optional>
#include <string>

#include "json.hpp"
#include "specq/analysis.hpp"
#include "specq/circuits.hpp"

namespace specq::render {

std::string format_sig(double v, int sig);

/// Report document with the fixed field schema: shape, m, n, level_fraction,
/// x_peak, f_peak, x_lower, x_upper, bandwidth, q_direct, q_reciprocal,
/// x_median, area_fraction. Inapplicable fields are null.
nlohmann::ordered_json analysis_doc(const std::string& shape_name,
                            std::optional<double> m, std::optional<double> n,
                            const ShapeAnalysis& report);

std::string analysis_text(const nlohmann::ordered_json& doc, int sig);
std::string analysis_csv(const nlohmann::ordered_json& doc, int sig);

nlohmann::ordered_json convert_doc(double temperature_k, double x, double frequency_hz,
                           double wavelength_m,
                           std::optional<double> nu_p_over_t,
                           std::optional<double> lambda_p_times_t);
std::string keyvalue_text(const nlohmann::ordered_json& doc, int sig);
std::string keyvalue_csv(const nlohmann::ordered_json& doc, int sig);

nlohmann::ordered_json rlc_doc(double q, double omega_lower, double omega_upper,
                       double bandwidth, std::optional<double> omega1,
                       std::optional<double> f1);

std::string curve_csv(const std::vector<CurvePoint>& points,
                      const std::string& x_name, const std::string& f_name,
                      int sig);

}  // namespace specq::render
