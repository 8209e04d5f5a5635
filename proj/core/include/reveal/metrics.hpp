#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "reveal/forensics.hpp"

namespace reveal {

/// Mean of the 8 factor Likert scores mapped affinely to [0,1]:
/// value = (mean - 1) / 4.
struct TamperingScore {
  double value = 0.0;
  bool operator==(const TamperingScore&) const = default;
};

TamperingScore tampering_score(const HolisticVerdict& verdict);

/// Positive class is tampered. unparsed counts records that produced no
/// prediction; they are excluded from the four confusion cells.
struct ConfusionCounts {
  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
  std::size_t unparsed = 0;

  std::size_t total() const { return tp + fp + tn + fn + unparsed; }

  ConfusionCounts& operator+=(const ConfusionCounts& o) {
    tp += o.tp;
    fp += o.fp;
    tn += o.tn;
    fn += o.fn;
    unparsed += o.unparsed;
    return *this;
  }
  bool operator==(const ConfusionCounts&) const = default;
};

struct ClassificationMetrics {
  ConfusionCounts counts;
  double accuracy = 0.0;  // (tp+tn) / total, unparsed in the denominator
  double f1 = 0.0;        // 2tp / (2tp+fp+fn); 0 when that denominator is 0
};

/// One record: ground truth and the prediction, or nullopt when the
/// response was unparsable.
using LabeledPrediction = std::pair<GroundTruth, std::optional<GroundTruth>>;

ClassificationMetrics classification_metrics(
    const std::vector<LabeledPrediction>& records);

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
  bool operator==(const RocPoint&) const = default;
};

/// Threshold-sweep ROC; points sorted by FPR ascending from (0,0) to
/// (1,1), AUC by the trapezoid rule. Equals tie-corrected pairwise
/// concordance P(s_tampered > s_authentic) + P(equal)/2.
struct RocCurve {
  std::vector<RocPoint> points;
  double auc = 0.0;
};

using ScoredRecord = std::pair<GroundTruth, TamperingScore>;

/// Throws DegenerateRocError unless both classes are present.
RocCurve roc_curve(const std::vector<ScoredRecord>& scored);

}  // namespace reveal
