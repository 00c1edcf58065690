#include "nmr/json_io.hpp"

namespace nmr {

namespace {

bool flag_from_json(const json& j, const char* what) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>() != 0;
  throw std::invalid_argument(std::string(what) + " must be a boolean or 0/1");
}

std::vector<bool> flags_from_json(const json& j, const char* what) {
  if (!j.is_array()) {
    throw std::invalid_argument(std::string(what) + " must be an array");
  }
  std::vector<bool> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    out.push_back(flag_from_json(item, what));
  }
  return out;
}

}  // namespace

VoterInputSet input_set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("values") || !j.contains("active")) {
    throw std::invalid_argument("input record needs \"values\" and \"active\" arrays");
  }
  VoterInputSet inputs;
  for (const auto& v : j.at("values")) {
    if (!v.is_number_unsigned() && !v.is_number_integer()) {
      throw std::invalid_argument("values must be unsigned integers");
    }
    inputs.values.push_back(v.get<Word>());
  }
  inputs.active = flags_from_json(j.at("active"), "active");
  inputs.validate();
  return inputs;
}

json to_json(const VoterInputSet& inputs) {
  return json{{"values", inputs.values}, {"active", inputs.active}};
}

json to_json(const InputStateDescriptor& isd) {
  return json{{"y", isd.y},   {"index", isd.index}, {"d", isd.d},    {"eq", isd.eq},
              {"e", isd.e},   {"a", isd.a},         {"err", isd.err}};
}

InputStateDescriptor isd_from_json(const json& j) {
  InputStateDescriptor isd;
  isd.y = j.at("y").get<Word>();
  isd.index = j.at("index").get<std::size_t>();
  isd.d = j.at("d").get<std::size_t>();
  isd.eq = j.at("eq").get<std::size_t>();
  isd.e = j.at("e").get<std::vector<int>>();
  isd.a = j.at("a").get<int>();
  isd.err = j.at("err").get<int>();
  return isd;
}

json to_json(const EqualityMatrix& matrix) {
  json rows = json::array();
  for (std::size_t i = 0; i < matrix.order(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < matrix.order(); ++j) {
      row.push_back(matrix.at(i, j));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const ReducedMatrix& reduced) {
  json rows = json::array();
  for (std::size_t i = 0; i < reduced.order(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < reduced.order(); ++j) {
      row.push_back(reduced.cell(i, j));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const FrequencyProfile& profile) {
  json classes = json::array();
  for (const auto& cls : profile.classes) {
    classes.push_back(json{{"value", cls.value},
                           {"frequency", cls.frequency},
                           {"members", cls.members}});
  }
  return json{{"classes", std::move(classes)},
              {"m", profile.m()},
              {"frequencies", profile.frequencies()}};
}

json to_json(const IntPolynomial& poly) { return json(poly.coefficients()); }

json to_json(const Spectrum& spectrum) {
  json exact = json::array();
  for (const auto& entry : spectrum.exact) {
    json value;
    if (entry.value.is_integer()) {
      value = entry.value.int_value;
    } else {
      value = entry.value.str();
    }
    exact.push_back(json{{"value", std::move(value)}, {"mult", entry.multiplicity}});
  }
  return json{{"exact", std::move(exact)},
              {"numeric", spectrum.numeric},
              {"integral", spectrum.integral}};
}

json to_json(const std::vector<Eigenpair>& pairs) {
  json out = json::array();
  for (const auto& pair : pairs) {
    out.push_back(json{{"eigenvalue", pair.eigenvalue}, {"vector", pair.vector}});
  }
  return out;
}

json to_json(const Violation& violation) {
  return json{{"triple", {violation.i, violation.j, violation.k}},
              {"zeroed", {violation.zero_lo, violation.zero_hi}}};
}

json to_json(const DetectionReport& report) {
  return json{{"transitivity_err", report.transitivity_err},
              {"spectral_err", report.spectral_err},
              {"violations", report.violations},
              {"non_integer_eigenvalues", report.non_integer_eigenvalues}};
}

json to_json(const CampaignCase& item) {
  json j{{"seed", item.seed}, {"eligible", item.eligible}, {"detected", item.detected}};
  if (item.eligible) {
    j["violation"] = to_json(item.violation);
    j["report"] = to_json(item.report);
  }
  return j;
}

json to_json(const CampaignReport& report) {
  json cases = json::array();
  for (const auto& item : report.cases) {
    cases.push_back(to_json(item));
  }
  return json{{"total", report.total},         {"injected", report.injected},
              {"detected", report.detected},   {"skipped", report.skipped},
              {"detection_rate", report.detection_rate}, {"cases", std::move(cases)}};
}

CampaignConfig campaign_config_from_json(const json& j) {
  CampaignConfig config;
  config.n = j.at("n").get<std::size_t>();
  config.classes = j.at("classes").get<std::vector<std::size_t>>();
  config.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  return config;
}

SimConfig sim_config_from_json(const json& j) {
  SimConfig config;
  if (!j.is_object() || !j.contains("pairs")) {
    throw std::invalid_argument("simulation config needs a \"pairs\" array");
  }
  std::size_t id = 0;
  for (const auto& p : j.at("pairs")) {
    ModuleModel pair;
    pair.id = id++;
    pair.transient_rate = p.value("transient_rate", 0.0);
    if (p.contains("permanent_at") && !p.at("permanent_at").is_null()) {
      pair.permanent_at = p.at("permanent_at").get<std::uint64_t>();
    }
    config.pairs.push_back(pair);
  }
  if (j.contains("policy")) {
    const json& p = j.at("policy");
    config.policy.base_redundancy = p.value("base_redundancy", config.policy.base_redundancy);
    config.policy.critical_window = p.value("critical_window", config.policy.critical_window);
    config.policy.critical_threshold =
        p.value("critical_threshold", config.policy.critical_threshold);
    config.policy.suspicion_k = p.value("suspicion_k", config.policy.suspicion_k);
    config.policy.downgrade_streak = p.value("downgrade_streak", config.policy.downgrade_streak);
  }
  config.word_width = j.value("word_width", 64u);
  config.validate();
  return config;
}

json to_json(const SimConfig& config) {
  json pairs = json::array();
  for (const auto& pair : config.pairs) {
    json p{{"transient_rate", pair.transient_rate}};
    if (pair.permanent_at.has_value()) {
      p["permanent_at"] = *pair.permanent_at;
    }
    pairs.push_back(std::move(p));
  }
  return json{{"pairs", std::move(pairs)},
              {"policy",
               {{"base_redundancy", config.policy.base_redundancy},
                {"critical_window", config.policy.critical_window},
                {"critical_threshold", config.policy.critical_threshold},
                {"suspicion_k", config.policy.suspicion_k},
                {"downgrade_streak", config.policy.downgrade_streak}}},
              {"word_width", config.word_width}};
}

json to_json(const TraceRecord& record) {
  return json{{"step", record.step},       {"golden", record.golden},
              {"outputs", record.outputs}, {"powered", record.powered},
              {"active", record.active},   {"isd", to_json(record.isd)},
              {"actions", record.actions}, {"restart", record.restart}};
}

TraceRecord trace_record_from_json(const json& j) {
  TraceRecord record;
  record.step = j.at("step").get<std::uint64_t>();
  record.golden = j.at("golden").get<Word>();
  record.outputs = j.at("outputs").get<std::vector<Word>>();
  record.powered = flags_from_json(j.at("powered"), "powered");
  record.active = flags_from_json(j.at("active"), "active");
  record.isd = isd_from_json(j.at("isd"));
  record.actions = j.at("actions").get<std::vector<std::string>>();
  record.restart = j.at("restart").get<bool>();
  return record;
}

}  // namespace nmr
