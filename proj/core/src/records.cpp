#include "reveal/records.hpp"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

using json = nlohmann::json;

namespace reveal {

std::string EvalRecord::identity() const {
  return sample_id + "\x1f" + dataset + "\x1f" + model_name + "\x1f" +
         std::string(to_string(strategy)) + "\x1f" + template_version;
}

std::string to_json_line(const EvalRecord& r) {
  json obj = {
      {"sample_id", r.sample_id},
      {"dataset", r.dataset},
      {"domain", std::string(to_string(r.domain))},
      {"model", r.model_name},
      {"strategy", std::string(to_string(r.strategy))},
      {"template_version", r.template_version},
      {"raw_response", r.raw_response},
      {"parsed", r.parsed},
      {"repairs", r.repairs},
      {"ground_truth", std::string(to_string(r.ground_truth))},
      {"latency_ms", r.latency_ms},
      {"cached", r.cached},
  };
  if (r.parse_error) {
    obj["parse_error"] = std::string(to_string(*r.parse_error));
    obj["parse_error_detail"] = r.parse_error_detail;
  }
  if (r.predicted_label) {
    obj["predicted_label"] = std::string(to_string(*r.predicted_label));
  }
  if (r.tampering_score) obj["tampering_score"] = *r.tampering_score;
  if (r.factor_scores) {
    obj["factor_scores"] = std::vector<int>(r.factor_scores->begin(),
                                            r.factor_scores->end());
  }
  return obj.dump();
}

EvalRecord record_from_json_line(const std::string& line) {
  const json obj = json::parse(line);
  EvalRecord r;
  r.sample_id = obj.at("sample_id").get<std::string>();
  r.dataset = obj.at("dataset").get<std::string>();
  r.domain = parse_forgery_domain(obj.at("domain").get<std::string>())
                 .value_or(ForgeryDomain::photoshop);
  r.model_name = obj.at("model").get<std::string>();
  r.strategy = parse_prompt_strategy(obj.at("strategy").get<std::string>())
                   .value_or(PromptStrategy::baseline);
  r.template_version = obj.at("template_version").get<std::string>();
  r.raw_response = obj.at("raw_response").get<std::string>();
  r.parsed = obj.at("parsed").get<bool>();
  if (obj.contains("parse_error")) {
    r.parse_error = parse_error_kind(obj["parse_error"].get<std::string>());
    r.parse_error_detail = obj.value("parse_error_detail", "");
  }
  r.repairs = obj.value("repairs", std::vector<std::string>{});
  if (obj.contains("predicted_label")) {
    r.predicted_label =
        parse_ground_truth(obj["predicted_label"].get<std::string>());
  }
  if (obj.contains("tampering_score")) {
    r.tampering_score = obj["tampering_score"].get<double>();
  }
  if (obj.contains("factor_scores")) {
    const auto scores = obj["factor_scores"].get<std::vector<int>>();
    if (scores.size() == kFactorCount) {
      std::array<int, kFactorCount> arr{};
      std::copy(scores.begin(), scores.end(), arr.begin());
      r.factor_scores = arr;
    }
  }
  r.ground_truth = parse_ground_truth(obj.at("ground_truth").get<std::string>())
                       .value_or(GroundTruth::authentic);
  r.latency_ms = obj.value("latency_ms", std::int64_t{0});
  r.cached = obj.value("cached", false);
  return r;
}

std::vector<EvalRecord> read_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open records file: " + path);
  std::vector<EvalRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    records.push_back(record_from_json_line(line));
  }
  return records;
}

void write_records(const std::string& path,
                   const std::vector<EvalRecord>& records) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write records file: " + path);
  for (const auto& r : records) out << to_json_line(r) << "\n";
}

}  // namespace reveal
