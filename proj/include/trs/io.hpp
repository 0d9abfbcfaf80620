#pragma once

#include <string>

#include "json.hpp"
#include "trs/decode.hpp"
#include "trs/equiv.hpp"
#include "trs/sim.hpp"
#include "trs/twisted.hpp"

namespace trs {

using nlohmann::json;

// Field: {"p": int, "m": int, "modulus": [int, ...] (optional)}
json field_to_json(const FieldSpec& f);
FieldPtr field_from_json(const json& j);

// Code parameters: {"field": {...}, "n": int, "k": int, "alpha": [ints],
//                   "t": [ints], "h": [ints], "eta": [ints], "at_infinity": bool}
json code_to_json(const TwistedCode& code);
TwistedCode code_from_json(const json& j);

json matrix_to_json(const Matrix& m);

json outcome_to_json(const DecodeOutcome& out);

// Elements travel as their integer encodings.
std::vector<FieldElement> elements_from_json(const FieldPtr& spec, const json& j);
json elements_to_json(const std::vector<FieldElement>& v);

json census_to_json(const EtaCensus& census);

json sim_config_to_json(const SimConfig& cfg);
SimConfig sim_config_from_json(const json& j);

json sim_report_to_json(const SimReport& report);
SimReport sim_report_from_json(const json& j);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

} // namespace trs
