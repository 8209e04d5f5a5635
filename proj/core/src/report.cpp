#include "reveal/report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <tuple>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "reveal/metrics.hpp"

namespace fs = std::filesystem;

namespace reveal {

namespace {

std::string two_decimals(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << v;
  return out.str();
}

std::string sanitize_filename(std::string s) {
  for (char& c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') {
      c = '-';
    }
  }
  return s;
}

using RowKey = std::pair<std::string, PromptStrategy>;  // model, strategy

struct Cell {
  std::vector<LabeledPrediction> predictions;
};

}  // namespace

std::string render_table(const std::vector<EvalRecord>& records) {
  if (records.empty()) throw ReportError("no records to report");

  std::set<std::string> datasets;
  std::map<RowKey, std::map<std::string, Cell>> rows;
  for (const auto& r : records) {
    datasets.insert(r.dataset);
    rows[{r.model_name, r.strategy}][r.dataset].predictions.push_back(
        {r.ground_truth, r.parsed ? r.predicted_label : std::nullopt});
  }

  // Column widths: model, strategy, one per dataset, unparsed.
  std::size_t model_w = 5, strategy_w = 8;
  for (const auto& [key, cells] : rows) {
    model_w = std::max(model_w, key.first.size());
    strategy_w = std::max(strategy_w, std::string(to_string(key.second)).size());
  }

  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header = {"model", "strategy"};
  for (const auto& d : datasets) header.push_back(d);
  header.push_back("unparsed");
  table.push_back(header);

  for (const auto& [key, cells] : rows) {
    std::vector<std::string> row = {key.first,
                                    std::string(to_string(key.second))};
    std::size_t unparsed_total = 0;
    for (const auto& d : datasets) {
      auto it = cells.find(d);
      if (it == cells.end() || it->second.predictions.empty()) {
        row.push_back("-");
        continue;
      }
      const auto m = classification_metrics(it->second.predictions);
      unparsed_total += m.counts.unparsed;
      row.push_back(two_decimals(m.accuracy) + " / " + two_decimals(m.f1) +
                    " [n=" + std::to_string(m.counts.total()) + "]");
    }
    row.push_back(std::to_string(unparsed_total));
    table.push_back(std::move(row));
  }

  std::vector<std::size_t> widths(table.front().size(), 0);
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << std::left << std::setw(static_cast<int>(widths[c]) + 2) << row[c];
    }
    out << "\n";
  }
  return out.str();
}

ReportPaths render_report(const std::vector<EvalRecord>& records,
                          const std::string& out_dir) {
  if (records.empty()) throw ReportError("no records to report");
  fs::create_directories(out_dir);
  ReportPaths paths;

  paths.table_txt = (fs::path(out_dir) / "report.txt").string();
  {
    std::ofstream out(paths.table_txt, std::ios::trunc);
    out << render_table(records);
  }

  paths.table_csv = (fs::path(out_dir) / "report.csv").string();
  {
    std::map<RowKey, std::map<std::string, Cell>> rows;
    for (const auto& r : records) {
      rows[{r.model_name, r.strategy}][r.dataset].predictions.push_back(
          {r.ground_truth, r.parsed ? r.predicted_label : std::nullopt});
    }
    std::ofstream out(paths.table_csv, std::ios::trunc);
    out << "model,strategy,dataset,n,accuracy,f1,unparsed\n";
    out << std::fixed << std::setprecision(4);
    for (const auto& [key, cells] : rows) {
      for (const auto& [dataset, cell] : cells) {
        const auto m = classification_metrics(cell.predictions);
        out << key.first << "," << to_string(key.second) << "," << dataset
            << "," << m.counts.total() << "," << m.accuracy << "," << m.f1
            << "," << m.counts.unparsed << "\n";
      }
    }
  }

  // ROC per (model, dataset) for the holistic strategy.
  {
    std::map<std::pair<std::string, std::string>, std::vector<ScoredRecord>>
        scored;
    for (const auto& r : records) {
      if (r.strategy != PromptStrategy::holistic || !r.tampering_score) {
        continue;
      }
      scored[{r.model_name, r.dataset}].push_back(
          {r.ground_truth, TamperingScore{*r.tampering_score}});
    }
    for (const auto& [key, values] : scored) {
      RocCurve curve;
      try {
        curve = roc_curve(values);
      } catch (const DegenerateRocError&) {
        continue;  // single-class cell; nothing to plot
      }
      const std::string name = "roc_" + sanitize_filename(key.first) + "_" +
                               sanitize_filename(key.second) + ".csv";
      const std::string path = (fs::path(out_dir) / name).string();
      std::ofstream out(path, std::ios::trunc);
      out << "fpr,tpr\n" << std::fixed << std::setprecision(6);
      for (const auto& p : curve.points) {
        out << p.fpr << "," << p.tpr << "\n";
      }
      paths.roc_csvs.push_back(path);
    }
  }

  // Per-factor mean scores by (model, dataset, ground truth).
  paths.factor_means_csv = (fs::path(out_dir) / "factor_means.csv").string();
  {
    struct Accum {
      std::array<double, kFactorCount> sums{};
      std::size_t n = 0;
    };
    std::map<std::tuple<std::string, std::string, GroundTruth>, Accum> accums;
    for (const auto& r : records) {
      if (!r.factor_scores) continue;
      auto& acc = accums[{r.model_name, r.dataset, r.ground_truth}];
      for (std::size_t f = 0; f < kFactorCount; ++f) {
        acc.sums[f] += (*r.factor_scores)[f];
      }
      ++acc.n;
    }
    std::ofstream out(paths.factor_means_csv, std::ios::trunc);
    out << "model,dataset,ground_truth,factor,mean_score,n\n";
    out << std::fixed << std::setprecision(4);
    for (const auto& [key, acc] : accums) {
      const auto& factors = canonical_factors();
      for (std::size_t f = 0; f < kFactorCount; ++f) {
        out << std::get<0>(key) << "," << std::get<1>(key) << ","
            << to_string(std::get<2>(key)) << "," << to_string(factors[f])
            << "," << acc.sums[f] / static_cast<double>(acc.n) << "," << acc.n
            << "\n";
      }
    }
  }

  return paths;
}

ReportPaths render_report(const std::string& records_path,
                          const std::string& out_dir) {
  return render_report(read_records(records_path), out_dir);
}

}  // namespace reveal
