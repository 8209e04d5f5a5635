#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reveal/forensics.hpp"
#include "reveal/prompt_builder.hpp"
#include "reveal/verdict_parser.hpp"

namespace reveal {

/// One (sample, model, strategy) evaluation result as persisted to the
/// JSON-lines results log.
struct EvalRecord {
  std::string sample_id;
  std::string dataset;
  ForgeryDomain domain = ForgeryDomain::photoshop;
  std::string model_name;
  PromptStrategy strategy = PromptStrategy::baseline;
  std::string template_version;
  std::string raw_response;
  bool parsed = false;
  std::optional<ParseErrorKind> parse_error;
  std::string parse_error_detail;
  std::vector<std::string> repairs;
  std::optional<GroundTruth> predicted_label;   // present iff parsed
  std::optional<double> tampering_score;        // holistic + parsed only
  std::optional<std::array<int, kFactorCount>> factor_scores;  // canonical order
  GroundTruth ground_truth = GroundTruth::authentic;
  std::int64_t latency_ms = 0;
  bool cached = false;

  /// Identity key for resume matching: everything that determines the
  /// response except the response itself.
  std::string identity() const;
};

std::string to_json_line(const EvalRecord& record);
EvalRecord record_from_json_line(const std::string& line);

std::vector<EvalRecord> read_records(const std::string& path);
void write_records(const std::string& path,
                   const std::vector<EvalRecord>& records);

}  // namespace reveal
