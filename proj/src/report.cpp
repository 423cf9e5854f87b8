#include "recon/report.hpp"

#include "recon/graph6.hpp"

namespace recon {

using json = nlohmann::ordered_json;

json witness_json(const ClassWitness& w) { return json{{"v1", w.v1}, {"others", w.others.to_vector()}}; }

json condition_report_json(const ConditionReport& report) {
  json out;
  for (int i = 1; i <= 5; ++i) out["c" + std::to_string(i)] = report.condition(i);
  if (report.first_violation) {
    out["violation"] = json{{"condition", report.first_violation->condition},
                            {"vertices", report.first_violation->vertices}};
  } else {
    out["violation"] = nullptr;
  }
  return out;
}

json reconstruction_json(const ReconstructionResult& result) {
  return json{{"graph6", emit_graph6(result.graph)},
              {"profile", json{{"d1", result.profile.d1}, {"d2", result.profile.others}}},
              {"witness", witness_json(result.witness)},
              {"verified", result.verified},
              {"card_index", result.card_index}};
}

json survey_row_json(const SurveyRow& row) {
  return json{{"n", row.n},
              {"graphs", row.graphs},
              {"members", row.members},
              {"verified", row.verified},
              {"counterexamples", row.counterexamples},
              {"seconds", row.seconds}};
}

json battery_row_json(const BatteryRow& row) {
  return json{{"battery", format_star_sizes(row.sizes)},
              {"n", row.n},
              {"verified", row.verified},
              {"reconstructed", row.reconstructed}};
}

}  // namespace recon
