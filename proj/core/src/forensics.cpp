#include "reveal/forensics.hpp"

#include <algorithm>

namespace reveal {

const std::array<FactorKind, kFactorCount>& canonical_factors() {
  static const std::array<FactorKind, kFactorCount> order = {
      FactorKind::lighting_shadow,      FactorKind::reflections_transparency,
      FactorKind::perspective_geometry, FactorKind::repetition_patterns,
      FactorKind::edge_boundary,        FactorKind::contextual_semantic,
      FactorKind::anomaly_artifact,     FactorKind::human_object_realism,
  };
  return order;
}

std::string_view to_string(ForgeryDomain d) {
  switch (d) {
    case ForgeryDomain::photoshop: return "photoshop";
    case ForgeryDomain::deepfake: return "deepfake";
    case ForgeryDomain::aigc_editing: return "aigc_editing";
  }
  return "?";
}

std::string_view to_string(GroundTruth g) {
  switch (g) {
    case GroundTruth::authentic: return "authentic";
    case GroundTruth::tampered: return "tampered";
  }
  return "?";
}

std::string_view to_string(FactorKind f) {
  switch (f) {
    case FactorKind::lighting_shadow: return "lighting_shadow";
    case FactorKind::reflections_transparency: return "reflections_transparency";
    case FactorKind::perspective_geometry: return "perspective_geometry";
    case FactorKind::repetition_patterns: return "repetition_patterns";
    case FactorKind::edge_boundary: return "edge_boundary";
    case FactorKind::contextual_semantic: return "contextual_semantic";
    case FactorKind::anomaly_artifact: return "anomaly_artifact";
    case FactorKind::human_object_realism: return "human_object_realism";
  }
  return "?";
}

std::optional<ForgeryDomain> parse_forgery_domain(std::string_view s) {
  for (auto d : {ForgeryDomain::photoshop, ForgeryDomain::deepfake,
                 ForgeryDomain::aigc_editing}) {
    if (s == to_string(d)) return d;
  }
  return std::nullopt;
}

std::optional<GroundTruth> parse_ground_truth(std::string_view s) {
  if (s == "authentic") return GroundTruth::authentic;
  if (s == "tampered") return GroundTruth::tampered;
  return std::nullopt;
}

std::optional<FactorKind> parse_factor_kind(std::string_view s) {
  for (auto f : canonical_factors()) {
    if (s == to_string(f)) return f;
  }
  return std::nullopt;
}

std::string trim(std::string_view s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

HolisticVerdict HolisticVerdict::create(
    std::vector<FactorAssessment> assessments, GroundTruth global_label,
    std::string major_reasoning) {
  if (assessments.size() != kFactorCount) {
    throw Error("holistic verdict needs exactly 8 factor assessments, got " +
                std::to_string(assessments.size()));
  }
  std::vector<FactorAssessment> ordered;
  ordered.reserve(kFactorCount);
  for (auto factor : canonical_factors()) {
    auto it = std::find_if(
        assessments.begin(), assessments.end(),
        [factor](const FactorAssessment& a) { return a.factor == factor; });
    if (it == assessments.end()) {
      throw Error(std::string("holistic verdict missing factor: ") +
                  std::string(to_string(factor)));
    }
    auto dup = std::find_if(
        std::next(it), assessments.end(),
        [factor](const FactorAssessment& a) { return a.factor == factor; });
    if (dup != assessments.end()) {
      throw Error(std::string("holistic verdict has duplicate factor: ") +
                  std::string(to_string(factor)));
    }
    if (trim(it->justification).empty()) {
      throw Error(std::string("empty justification for factor: ") +
                  std::string(to_string(factor)));
    }
    ordered.push_back(*it);
  }
  HolisticVerdict v;
  v.assessments_ = std::move(ordered);
  v.global_label_ = global_label;
  v.major_reasoning_ = std::move(major_reasoning);
  return v;
}

RegionVerdict RegionVerdict::create(bool holistic_cue_found,
                                    std::vector<CellFinding> cell_findings,
                                    GroundTruth global_label,
                                    std::string explanation) {
  bool any_anomalous = false;
  std::array<bool, 9> seen{};
  for (const auto& f : cell_findings) {
    if (f.cell_index < 1 || f.cell_index > 9) {
      throw Error("cell index out of range [1,9]: " +
                  std::to_string(f.cell_index));
    }
    if (seen[f.cell_index - 1]) {
      throw Error("duplicate finding for cell " + std::to_string(f.cell_index));
    }
    seen[f.cell_index - 1] = true;
    any_anomalous = any_anomalous || f.anomalous;
  }
  if (!holistic_cue_found && global_label == GroundTruth::tampered &&
      !any_anomalous) {
    throw Error(
        "tampered label without holistic cue requires at least one anomalous "
        "cell");
  }
  RegionVerdict v;
  v.holistic_cue_found_ = holistic_cue_found;
  v.cell_findings_ = std::move(cell_findings);
  v.global_label_ = global_label;
  v.explanation_ = std::move(explanation);
  return v;
}

}  // namespace reveal
