#pragma once

#include "json.hpp"

#include "recon/enumeration.hpp"
#include "recon/membership.hpp"
#include "recon/reconstruct.hpp"

namespace recon {

/// {"v1":..., "others":[...]}
nlohmann::ordered_json witness_json(const ClassWitness& w);

/// {"c1":..,"c2":..,"c3":..,"c4":..,"c5":.., "violation":{"condition":i,"vertices":[...]} | null}
nlohmann::ordered_json condition_report_json(const ConditionReport& report);

/// {"graph6":..., "profile":{"d1":..., "d2":[...]}, "witness":{...}, "verified":..., "card_index":...}
nlohmann::ordered_json reconstruction_json(const ReconstructionResult& result);

/// {"n":..., "graphs":..., "members":..., "verified":..., "counterexamples":..., "seconds":...}
nlohmann::ordered_json survey_row_json(const SurveyRow& row);

nlohmann::ordered_json battery_row_json(const BatteryRow& row);

}  // namespace recon
