#pragma once

#include <string>

#include <json.hpp>

#include "lsg/game.hpp"
#include "lsg/linear_system.hpp"
#include "lsg/strategy.hpp"

namespace lsg {

/// Strategy files are JSON objects:
///
///     {"format": "lsgame-strategy", "p": 2, "system_hash": "<16 hex>",
///      "dimension": d, "state": [[re, im], ...],
///      "alice": [{"equation": 1, "operators": [{"variable": 1, "matrix": [[re, im], ...]}, ...]}, ...],
///      "bob": [{"variable": 1, "matrix": [...]}, ...]}
///
/// Matrices are row-major lists of d*d [re, im] pairs. Indices are 1-based.
/// Doubles are written with round-trip precision.
nlohmann::json strategy_to_json(const Strategy& st, const LinearSystem& sys);

/// Throws ShapeError when the file disagrees with `sys` (modulus, hash,
/// operator coverage, matrix sizes) and nlohmann::json exceptions on bad JSON.
Strategy strategy_from_json(const nlohmann::json& j, const LinearSystem& sys);

/// {"format": "lsgame-operator-solution", "p", "system_hash", "dimension",
///  "operators": [{"variable": 1, "matrix": [...]}, ...]}
nlohmann::json operator_solution_to_json(const OperatorSolution& sol, const LinearSystem& sys);
OperatorSolution operator_solution_from_json(const nlohmann::json& j, const LinearSystem& sys);

/// {"value": .., "value_exact": "17/18" | null, "worst": {..},
///  "pairs": [{"equation": 1, "variable": 1, "probability": ..}, ...]}
nlohmann::json game_report_to_json(const GameReport& report);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace lsg
