#include "tables.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

#include "render.hpp"
#include "specq/analysis.hpp"

namespace specq::render {

namespace {

nlohmann::ordered_json text_cell(const std::string& s) {
    return {{"text", s}};
}

nlohmann::ordered_json value_cell(double v) {
    return {{"value", v}, {"display", format_sig(v, 6)}};
}

std::string cell_string(const nlohmann::ordered_json& cell, int sig) {
    if (cell.contains("text")) return cell.at("text").get<std::string>();
    if (sig == 6) return cell.at("display").get<std::string>();
    return format_sig(cell.at("value").get<double>(), sig);
}

nlohmann::ordered_json table3(const ConvergenceControl& ctrl) {
    const LineShape s = GeneralizedThermal{3.0, -1.0};
    const LevelSpec half = LevelSpec::fraction(0.5);
    const auto pk = find_peak(s, ctrl);
    const auto [lo, hi] = level_points(s, half, ctrl);
    const double med = median_point(s, ctrl);
    const double q = q_factor(s, half, ctrl).direct;

    nlohmann::ordered_json doc;
    doc["table"] = "III";
    doc["title"] = "Planckian distribution Pl3 (M = 3, frequency rule)";
    doc["columns"] = {"Location", "X", "Pl3(X)"};
    doc["rows"] = nlohmann::ordered_json::array();
    const auto row = [&](const std::string& name, double x, double f) {
        doc["rows"].push_back({text_cell(name), value_cell(x), value_cell(f)});
    };
    row("Lower 1/2-power", lo, evaluate(s, lo, ctrl));
    row("Peak", pk.x, pk.value);
    row("50%-area divisor", med, evaluate(s, med, ctrl));
    row("Upper 1/2-power", hi, evaluate(s, hi, ctrl));
    doc["notes"] = {{text_cell("Delta3"), value_cell(hi - lo)},
                    {text_cell("Q3"), value_cell(q)}};
    return doc;
}

nlohmann::ordered_json table4(const ConvergenceControl& ctrl) {
    const LineShape s = GeneralizedThermal{5.0, -1.0};
    const LevelSpec half = LevelSpec::fraction(0.5);
    const auto pk = find_peak(s, ctrl);
    const auto [lo, hi] = level_points(s, half, ctrl);
    const double med = median_point(s, ctrl);
    const auto q = q_factor(s, half, ctrl);

    nlohmann::ordered_json doc;
    doc["table"] = "IV";
    doc["title"] = "Planckian distribution Pl5 (M = 5, wavelength rule)";
    doc["columns"] = {"Location", "Y", "Pl5(Y)", "X"};
    doc["rows"] = nlohmann::ordered_json::array();
    const auto row = [&](const std::string& name, double x) {
        doc["rows"].push_back({text_cell(name), value_cell(1.0 / x),
                               value_cell(evaluate(s, x, ctrl)), value_cell(x)});
    };
    row("Lower 1/2-power", hi);  // ascending in Y = 1/X
    row("50%-area divisor", med);
    row("Peak", pk.x);
    row("Upper 1/2-power", lo);
    doc["notes"] = {{text_cell("Delta5"), value_cell(1.0 / lo - 1.0 / hi)},
                    {text_cell("Q5(lambda)"), value_cell(*q.reciprocal)},
                    {text_cell("Q5(nu)"), value_cell(q.direct)}};
    return doc;
}

nlohmann::ordered_json table5(const ConvergenceControl& ctrl) {
    const LevelSpec half = LevelSpec::fraction(0.5);

    nlohmann::ordered_json doc;
    doc["table"] = "V";
    doc["title"] = "Area fractions between the half-power points";
    doc["columns"] = {"Spectral line shape", "Normalized form", "Ratio (%)", "Q"};
    doc["rows"] = nlohmann::ordered_json::array();
    const auto row = [&](const std::string& name, const std::string& formula,
                         const LineShape& shape, bool reciprocal_q) {
        const double frac = 100.0 * area_fraction(shape, half, ctrl);
        const auto q = q_factor(shape, half, ctrl);
        const double qv = reciprocal_q ? *q.reciprocal : q.direct;
        doc["rows"].push_back({text_cell(name), text_cell(formula),
                               value_cell(frac), value_cell(qv)});
    };
    row("Gaussian", "exp(-ln2 X^2)", Gaussian{}, false);
    row("Lorentzian", "1/(1 + X^2)", Lorentzian{}, false);
    // Q-independent: rendered at Q = 1, the Q column stays symbolic
    doc["rows"].push_back(
        {text_cell("RLC/BVD"), text_cell("1/[1 + Q^2 (X - 1/X)^2]"),
         value_cell(100.0 * area_fraction(RlcConductance{1.0}, half, ctrl)),
         text_cell("Q")});
    row("Bose-Einstein (Planck)", "X^3/(e^X - 1)", GeneralizedThermal{3.0, -1.0},
        false);
    row("Bose-Einstein (Planck)", "X^5/(e^X - 1)", GeneralizedThermal{5.0, -1.0},
        true);
    row("Maxwell-Boltzmann (Wien)", "X^3/e^X", GeneralizedThermal{3.0, 0.0},
        false);
    row("Fermi-Dirac", "X^3/(e^X + 1)", GeneralizedThermal{3.0, 1.0}, false);
    return doc;
}

nlohmann::ordered_json table6(const ConvergenceControl& ctrl) {
    const LevelSpec half = LevelSpec::fraction(0.5);

    nlohmann::ordered_json doc;
    doc["table"] = "VI";
    doc["title"] = "Half-power Q of X^3/(e^X + n) for three statistics";
    doc["columns"] = {"Statistics", "n", "X-", "Xp", "X+", "Q"};
    doc["rows"] = nlohmann::ordered_json::array();
    const auto row = [&](const std::string& name, double n) {
        const LineShape s = GeneralizedThermal{3.0, n};
        const auto pk = find_peak(s, ctrl);
        const auto [lo, hi] = level_points(s, half, ctrl);
        const double q = q_factor(s, half, ctrl).direct;
        doc["rows"].push_back({text_cell(name), value_cell(n), value_cell(lo),
                               value_cell(pk.x), value_cell(hi), value_cell(q)});
    };
    row("Bose-Einstein", -1.0);
    row("Maxwell-Boltzmann", 0.0);
    row("Fermi-Dirac", 1.0);
    return doc;
}

}  // namespace

TableId parse_table_id(const std::string& text) {
    std::string t;
    for (char c : text) t.push_back(static_cast<char>(std::toupper(c)));
    if (t == "III" || t == "3") return TableId::iii;
    if (t == "IV" || t == "4") return TableId::iv;
    if (t == "V" || t == "5") return TableId::v;
    if (t == "VI" || t == "6") return TableId::vi;
    throw std::domain_error("unknown table id '" + text + "' (use III, IV, V or VI)");
}

nlohmann::ordered_json table_doc(TableId id, const ConvergenceControl& ctrl) {
    switch (id) {
        case TableId::iii: return table3(ctrl);
        case TableId::iv: return table4(ctrl);
        case TableId::v: return table5(ctrl);
        case TableId::vi: return table6(ctrl);
    }
    throw std::logic_error("unreachable");
}

std::string table_text(const nlohmann::ordered_json& doc, int sig) {
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header;
    for (const auto& c : doc.at("columns")) header.push_back(c.get<std::string>());
    grid.push_back(header);
    for (const auto& row : doc.at("rows")) {
        std::vector<std::string> r;
        for (const auto& cell : row) r.push_back(cell_string(cell, sig));
        grid.push_back(r);
    }

    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& r : grid)
        for (std::size_t i = 0; i < r.size(); ++i)
            width[i] = std::max(width[i], r[i].size());

    std::string out = doc.at("title").get<std::string>() + "\n";
    for (std::size_t ri = 0; ri < grid.size(); ++ri) {
        std::string line;
        for (std::size_t i = 0; i < grid[ri].size(); ++i) {
            std::string cell = grid[ri][i];
            cell.resize(width[i], ' ');
            line += cell;
            if (i + 1 < grid[ri].size()) line += "  ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
        if (ri == 0) {
            std::size_t total = 0;
            for (std::size_t i = 0; i < width.size(); ++i)
                total += width[i] + (i + 1 < width.size() ? 2 : 0);
            out += std::string(total, '-') + "\n";
        }
    }
    if (doc.contains("notes")) {
        for (const auto& note : doc.at("notes")) {
            out += cell_string(note[0], sig) + " = " + cell_string(note[1], sig) +
                   "\n";
        }
    }
    return out;
}

std::string table_csv(const nlohmann::ordered_json& doc, int sig) {
    std::string out;
    bool first = true;
    for (const auto& c : doc.at("columns")) {
        if (!first) out += ',';
        out += c.get<std::string>();
        first = false;
    }
    out += '\n';
    for (const auto& row : doc.at("rows")) {
        first = true;
        for (const auto& cell : row) {
            if (!first) out += ',';
            out += cell_string(cell, sig);
            first = false;
        }
        out += '\n';
    }
    if (doc.contains("notes")) {
        for (const auto& note : doc.at("notes"))
            out += cell_string(note[0], sig) + "," + cell_string(note[1], sig) + "\n";
    }
    return out;
}

}  // namespace specq::render
