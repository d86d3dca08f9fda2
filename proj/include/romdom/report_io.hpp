#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "romdom/formulas.hpp"
#include "romdom/graph.hpp"
#include "romdom/harness.hpp"
#include "romdom/solver.hpp"

namespace romdom {

// JSON views of the core result types. Nothing here embeds timestamps or
// machine details, so serialized reports are reproducible byte for byte.
nlohmann::json to_json(const CheckRecord& record);
nlohmann::json to_json(const CheckReport& report);
nlohmann::json to_json(const std::vector<CheckReport>& reports);
nlohmann::json to_json(const SolveResult& result);
nlohmann::json to_json(const FormulaResult& result);
nlohmann::json graph_json(const Graph& g);

// Text rendering: one summary line per area, then every non-pass record.
std::string render_text(const CheckReport& report);
std::string render_text(const std::vector<CheckReport>& reports);

}  // namespace romdom
