#pragma once

#include <json.hpp>

#include "nmr/selfcheck.hpp"
#include "nmr/simulator.hpp"
#include "nmr/spectral.hpp"
#include "nmr/types.hpp"

// JSON wire formats. Field names are part of the stable interface; tests
// assert on them.

namespace nmr {

using json = nlohmann::json;

VoterInputSet input_set_from_json(const json& j);
json to_json(const VoterInputSet& inputs);

json to_json(const InputStateDescriptor& isd);
InputStateDescriptor isd_from_json(const json& j);

json to_json(const EqualityMatrix& matrix);
json to_json(const ReducedMatrix& reduced);
json to_json(const FrequencyProfile& profile);

json to_json(const IntPolynomial& poly);

json to_json(const Spectrum& spectrum);
json to_json(const std::vector<Eigenpair>& pairs);

json to_json(const Violation& violation);
json to_json(const DetectionReport& report);
json to_json(const CampaignCase& item);
json to_json(const CampaignReport& report);
CampaignConfig campaign_config_from_json(const json& j);

SimConfig sim_config_from_json(const json& j);
json to_json(const SimConfig& config);
json to_json(const TraceRecord& record);
TraceRecord trace_record_from_json(const json& j);

}  // namespace nmr
