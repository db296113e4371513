#include <json.hpp>

#include "prcalc/decis.hpp"

namespace prcalc {

// Schema per row: system, outcome, witness, steps, millis, soundness_flag.
// Unbounded indices are emitted as decimal strings.
std::string report_to_json(const std::vector<ReportRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json witness;
    switch (row.outcome.kind) {
      case DecisOutcome::Kind::Counterexample: {
        nlohmann::json tuple = nlohmann::json::array();
        for (const auto& x : row.witness_tuple) tuple.push_back(x.get_str());
        witness = {{"index", row.outcome.index.get_str()}, {"tuple", tuple}};
        break;
      }
      case DecisOutcome::Kind::Theorem:
        witness = {{"k", row.outcome.index.get_str()}};
        break;
      case DecisOutcome::Kind::FuelExhausted:
        witness = nullptr;
        break;
    }
    out.push_back({{"system", row.system},
                   {"outcome", outcome_name(row.outcome.kind)},
                   {"witness", witness},
                   {"steps", row.steps},
                   {"millis", row.millis},
                   {"soundness_flag", row.soundness_flag}});
  }
  return out.dump(2);
}

}  // namespace prcalc
