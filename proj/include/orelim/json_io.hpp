#pragma once

// JSON views of results for the CLI and audit trails.

#include "json.hpp"
#include "orelim/modres.hpp"

namespace orelim {

nlohmann::json to_json(const RowOp& op, const std::string& var = "x1");
/// {"rep", "degree" ("-inf" for zero), "is_zero", "op_log"}.
nlohmann::json to_json(const DetResult& det, const std::string& var = "x1");
nlohmann::json to_json(const ModularPlan& plan);
nlohmann::json to_json(const ConjugacyReport& report, const FieldCtx& field);

}  // namespace orelim
