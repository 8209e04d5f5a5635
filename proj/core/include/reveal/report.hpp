#pragma once

#include <string>
#include <vector>

#include "reveal/records.hpp"

namespace reveal {

struct ReportPaths {
  std::string table_txt;
  std::string table_csv;
  std::vector<std::string> roc_csvs;        // holistic strategy only
  std::string factor_means_csv;
};

/// Renders report artifacts from a results log:
///  - a text table, one row per (model, strategy), "ACC / F1" per dataset,
///    plus an unparsed-count column
///  - the same data as CSV
///  - one fpr,tpr CSV per (model, dataset) for the holistic strategy
///  - per-factor mean scores broken down by dataset and ground truth
/// Throws ReportError when the record list is empty.
ReportPaths render_report(const std::vector<EvalRecord>& records,
                          const std::string& out_dir);

ReportPaths render_report(const std::string& records_path,
                          const std::string& out_dir);

/// The text table alone, for golden-file tests.
std::string render_table(const std::vector<EvalRecord>& records);

}  // namespace reveal
