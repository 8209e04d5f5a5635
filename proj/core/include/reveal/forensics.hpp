#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reveal/errors.hpp"

namespace reveal {

// ---------------------------------------------------------------------------
// Enumerations. Serialized names are lowercase snake case everywhere:
// manifests, result records, reports, prompt text.
// ---------------------------------------------------------------------------

enum class ForgeryDomain { photoshop, deepfake, aigc_editing };

enum class GroundTruth { authentic, tampered };

/// The eight forensic dimensions, in canonical order.
enum class FactorKind {
  lighting_shadow,
  reflections_transparency,
  perspective_geometry,
  repetition_patterns,
  edge_boundary,
  contextual_semantic,
  anomaly_artifact,
  human_object_realism,
};

inline constexpr std::size_t kFactorCount = 8;

/// The 8 factors in canonical order; stable across calls.
const std::array<FactorKind, kFactorCount>& canonical_factors();

std::string_view to_string(ForgeryDomain d);
std::string_view to_string(GroundTruth g);
std::string_view to_string(FactorKind f);

std::optional<ForgeryDomain> parse_forgery_domain(std::string_view s);
std::optional<GroundTruth> parse_ground_truth(std::string_view s);
std::optional<FactorKind> parse_factor_kind(std::string_view s);

// ---------------------------------------------------------------------------
// Scores and verdicts
// ---------------------------------------------------------------------------

/// Ordinal 1-5 score; 1 = authentic, 5 = tampered.
class LikertScore {
 public:
  explicit LikertScore(int value) : value_(value) {
    if (value < 1 || value > 5) {
      throw Error("Likert score out of range [1,5]: " + std::to_string(value));
    }
  }

  int value() const { return value_; }

  static std::optional<LikertScore> make(int value) {
    if (value < 1 || value > 5) return std::nullopt;
    return LikertScore(value);
  }

  friend bool operator==(LikertScore a, LikertScore b) {
    return a.value_ == b.value_;
  }

 private:
  int value_;
};

struct FactorAssessment {
  FactorKind factor;
  LikertScore score;
  std::string justification;  // non-empty after trimming

  bool operator==(const FactorAssessment&) const = default;
};

/// Whole-image assessment: one entry per factor, in canonical order.
class HolisticVerdict {
 public:
  /// Validates that assessments contain each factor exactly once and that
  /// every justification is non-empty after trimming. Entries are stored
  /// in canonical factor order regardless of input order.
  static HolisticVerdict create(std::vector<FactorAssessment> assessments,
                                GroundTruth global_label,
                                std::string major_reasoning);

  const std::vector<FactorAssessment>& assessments() const {
    return assessments_;
  }
  GroundTruth global_label() const { return global_label_; }
  const std::string& major_reasoning() const { return major_reasoning_; }

  bool operator==(const HolisticVerdict&) const = default;

 private:
  HolisticVerdict() = default;
  std::vector<FactorAssessment> assessments_;
  GroundTruth global_label_ = GroundTruth::authentic;
  std::string major_reasoning_;
};

struct CellFinding {
  int cell_index = 1;  // 1..9, row-major from top-left
  bool anomalous = false;
  std::string note;

  bool operator==(const CellFinding&) const = default;
};

/// Region-wise assessment over the 3x3 labeled grid.
class RegionVerdict {
 public:
  /// Validates cell indices, uniqueness per cell, and the consistency rule:
  /// a tampered label with no holistic cue needs at least one anomalous cell.
  static RegionVerdict create(bool holistic_cue_found,
                              std::vector<CellFinding> cell_findings,
                              GroundTruth global_label,
                              std::string explanation);

  bool holistic_cue_found() const { return holistic_cue_found_; }
  const std::vector<CellFinding>& cell_findings() const {
    return cell_findings_;
  }
  GroundTruth global_label() const { return global_label_; }
  const std::string& explanation() const { return explanation_; }

  bool operator==(const RegionVerdict&) const = default;

 private:
  RegionVerdict() = default;
  bool holistic_cue_found_ = false;
  std::vector<CellFinding> cell_findings_;
  GroundTruth global_label_ = GroundTruth::authentic;
  std::string explanation_;
};

struct BinaryVerdict {
  GroundTruth global_label = GroundTruth::authentic;
  std::string raw_answer;

  bool operator==(const BinaryVerdict&) const = default;
};

/// One labeled image from a dataset manifest.
struct Sample {
  std::string id;
  std::string image_path;
  GroundTruth ground_truth = GroundTruth::authentic;
  ForgeryDomain domain = ForgeryDomain::photoshop;
  std::string dataset;

  bool operator==(const Sample&) const = default;
};

std::string trim(std::string_view s);

}  // namespace reveal
