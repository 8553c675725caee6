#pragma once
/*
  JSON interchange for the command-line tool. Input documents:

    {
      "group":      {"p": 2, "v": 2},
      "base_genus": 0,
      "orbits":     [{"id": "P", "depth": 2, "jumps": [3, 1]}],
      "divisor":    {"base_degree": 0, "orbit_coeffs": {"P": 6}},
      "options":    {"strict_validation": false}
    }

  "orbits", "divisor" and "options" may be omitted. Reports echo the
  normalized input under "input" so they can be fed back unchanged.
*/

#include "galmod/cover_tower.hpp"
#include "galmod/decomposition.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace galmod {

struct InputDocument {
  CoverTower tower;
  InvariantDivisor divisor;
  bool strict_validation = false;
};

/// Schema errors throw Parse; referential or genus errors throw Validation.
InputDocument parse_input(const nlohmann::json& j);
InputDocument parse_input_text(const std::string& text);
InputDocument load_input(const std::string& path);

nlohmann::json to_json(const InputDocument& doc);
nlohmann::json to_json(const CoverTower& t);
nlohmann::json to_json(const InvariantDivisor& d);
nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const NoetherReport& r);

struct OutputReport {
  InputDocument input;
  std::vector<Int> genera{};  ///< g_{X_0}, ..., g_{X_v}
  Int divisor_degree = 0;
  std::vector<Int> degrees{}; ///< deg_j
  std::vector<Int> multiplicities{};
  Int dim_h0 = 0;
  std::vector<Int> euler{};  ///< simple-basis coordinates
  std::vector<Method> methods{};
  ValidationReport strict{}; ///< always computed, enforced only on request
  std::vector<std::string> diagnostics{};

  bool realizable() const;
};

/// Runs the given methods; all must agree coordinatewise, otherwise the
/// returned report carries a divergence diagnostic and `agreed` is false.
struct DecomposeOutcome {
  OutputReport report;
  bool agreed = true;
};
DecomposeOutcome run_decompose(const InputDocument& doc, const std::vector<Method>& methods);

nlohmann::json to_json(const OutputReport& r);
/// Human-readable rendering of the same numbers as to_json.
std::string render_table(const OutputReport& r);

} // namespace galmod
