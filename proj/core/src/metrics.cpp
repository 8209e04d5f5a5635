#include "reveal/metrics.hpp"

#include <algorithm>
#include <map>

namespace reveal {

TamperingScore tampering_score(const HolisticVerdict& verdict) {
  double sum = 0.0;
  for (const auto& a : verdict.assessments()) sum += a.score.value();
  const double mean = sum / static_cast<double>(kFactorCount);
  return {(mean - 1.0) / 4.0};
}

ClassificationMetrics classification_metrics(
    const std::vector<LabeledPrediction>& records) {
  if (records.empty()) {
    throw Error("classification_metrics requires a non-empty record list");
  }
  ClassificationMetrics m;
  for (const auto& [truth, prediction] : records) {
    if (!prediction) {
      ++m.counts.unparsed;
      continue;
    }
    const bool actual_positive = truth == GroundTruth::tampered;
    const bool predicted_positive = *prediction == GroundTruth::tampered;
    if (actual_positive && predicted_positive) ++m.counts.tp;
    else if (!actual_positive && predicted_positive) ++m.counts.fp;
    else if (actual_positive && !predicted_positive) ++m.counts.fn;
    else ++m.counts.tn;
  }
  m.accuracy = static_cast<double>(m.counts.tp + m.counts.tn) /
               static_cast<double>(m.counts.total());
  const std::size_t f1_denom = 2 * m.counts.tp + m.counts.fp + m.counts.fn;
  m.f1 = f1_denom == 0
             ? 0.0
             : 2.0 * static_cast<double>(m.counts.tp) /
                   static_cast<double>(f1_denom);
  return m;
}

RocCurve roc_curve(const std::vector<ScoredRecord>& scored) {
  std::size_t positives = 0, negatives = 0;
  for (const auto& [truth, score] : scored) {
    (truth == GroundTruth::tampered ? positives : negatives) += 1;
  }
  if (positives == 0 || negatives == 0) {
    throw DegenerateRocError(
        "ROC needs at least one tampered and one authentic record");
  }

  // Group by score descending; each distinct score is one threshold step.
  std::map<double, std::pair<std::size_t, std::size_t>, std::greater<>>
      by_score;  // score -> (positives, negatives)
  for (const auto& [truth, score] : scored) {
    auto& cell = by_score[score.value];
    (truth == GroundTruth::tampered ? cell.first : cell.second) += 1;
  }

  RocCurve curve;
  curve.points.push_back({0.0, 0.0});
  std::size_t tp = 0, fp = 0;
  double area = 0.0;
  for (const auto& [score, cell] : by_score) {
    const double prev_fpr = static_cast<double>(fp) / negatives;
    const double prev_tpr = static_cast<double>(tp) / positives;
    tp += cell.first;
    fp += cell.second;
    const double fpr = static_cast<double>(fp) / negatives;
    const double tpr = static_cast<double>(tp) / positives;
    area += (fpr - prev_fpr) * (tpr + prev_tpr) / 2.0;
    curve.points.push_back({fpr, tpr});
  }
  curve.auc = area;
  return curve;
}

}  // namespace reveal
