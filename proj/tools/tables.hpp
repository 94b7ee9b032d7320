#pragma once

// The four reference tables. Every numeric cell is recomputed through the
// analysis operations; the renderers only format what the engine returned.

#include <string>

#include "json.hpp"
#include "specq/convergence.hpp"

namespace specq::render {

enum class TableId { iii, iv, v, vi };

/// Accepts "III", "IV", "V", "VI" (any case) or "3", "4", "5", "6".
TableId parse_table_id(const std::string& text);

/// Document layout:
///   { "table": "VI", "title": ..., "columns": [...],
///     "rows": [[cell, ...], ...], "notes": [cell-pair, ...] }
/// A cell is either {"text": s} or {"value": v, "display": s} where display
/// is the 6-significant-digit rendering of value.
nlohmann::ordered_json table_doc(TableId id, const ConvergenceControl& ctrl = {});

std::string table_text(const nlohmann::ordered_json& doc, int sig);
std::string table_csv(const nlohmann::ordered_json& doc, int sig);

}  // namespace specq::render
