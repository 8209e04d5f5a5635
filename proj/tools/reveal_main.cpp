#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "reveal/grid_overlay.hpp"
#include "reveal/image.hpp"
#include "reveal/report.hpp"
#include "reveal/runner.hpp"
#include "reveal/verdict_parser.hpp"

namespace {

int cmd_run(const std::string& config_path, bool dry_run) {
  const reveal::RunConfig config = reveal::load_run_config(config_path);
  if (dry_run) {
    const auto calls = reveal::plan(config);
    std::map<std::string, std::size_t> per_backend;
    for (const auto& c : calls) {
      std::cout << c.sample_id << "  " << c.dataset << "  "
                << reveal::to_string(c.strategy) << "  " << c.model_name
                << "\n";
      ++per_backend[c.model_name];
    }
    std::cout << "\nTotal calls: " << calls.size() << "\n";
    for (const auto& [model, n] : per_backend) {
      std::cout << "  " << model << ": " << n
                << " requests (before cache hits)\n";
    }
    return 0;
  }
  const reveal::RunResult result = reveal::run(config);
  std::cout << "records: " << result.records_path << "\n"
            << "record count: " << result.record_count << "\n"
            << "backend calls: " << result.executed_calls << "\n"
            << "resumed: " << result.resumed_records << "\n";
  const auto report = reveal::render_report(
      result.records_path,
      result.records_path.substr(0, result.records_path.rfind('/')));
  std::ifstream table(report.table_txt);
  std::cout << "\n" << table.rdbuf();
  return 0;
}

int cmd_report(const std::string& records_path, const std::string& out_dir) {
  const auto report = reveal::render_report(records_path, out_dir);
  std::ifstream table(report.table_txt);
  std::cout << table.rdbuf();
  std::cout << "\nwrote " << report.table_txt << ", " << report.table_csv
            << ", " << report.factor_means_csv << " and "
            << report.roc_csvs.size() << " ROC file(s)\n";
  return 0;
}

int cmd_overlay(const std::string& in_path, const std::string& out_path) {
  const reveal::RasterImage image = reveal::load_image(in_path);
  reveal::save_png(reveal::overlay_grid(image, reveal::OverlayStyle{}),
                   out_path);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_parse(const std::string& schema, const std::string& in_path) {
  std::ifstream in(in_path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open " << in_path << "\n";
    return 1;
  }
  std::ostringstream text;
  text << in.rdbuf();
  const reveal::ParseOutcome outcome = reveal::parse(text.str(), schema);
  if (outcome.ok()) {
    std::cout << "PARSED";
    for (const auto& tag : outcome.repairs_applied()) std::cout << " " << tag;
    std::cout << "\n" << reveal::render_canonical(outcome.verdict());
    return 0;
  }
  std::cout << "FAILED " << reveal::to_string(outcome.error().kind) << "\n";
  if (!outcome.error().detail.empty()) {
    std::cout << outcome.error().detail << "\n";
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"REVEAL prompt-driven image forgery evaluation harness"};
  app.require_subcommand(1);

  std::string config_path;
  bool dry_run = false;
  auto* run_cmd = app.add_subcommand("run", "Execute an evaluation matrix");
  run_cmd->add_option("--config", config_path, "Run config JSON")->required();
  run_cmd->add_flag("--dry-run", dry_run,
                    "Print the call matrix without calling backends");

  std::string records_path, report_out = "report";
  auto* report_cmd =
      app.add_subcommand("report", "Render reports from a results log");
  report_cmd->add_option("--records", records_path, "records.jsonl path")
      ->required();
  report_cmd->add_option("--out", report_out, "Output directory");

  std::string overlay_in, overlay_out;
  auto* overlay_cmd =
      app.add_subcommand("overlay", "Render the labeled 3x3 grid (debug)");
  overlay_cmd->add_option("--in", overlay_in, "Input PNG/JPEG")->required();
  overlay_cmd->add_option("--out", overlay_out, "Output PNG")->required();

  std::string parse_schema, parse_in;
  auto* parse_cmd =
      app.add_subcommand("parse", "Parse a raw response text (debug)");
  parse_cmd->add_option("--schema", parse_schema,
                        "binary_v1 | holistic_v1 | region_v1")
      ->required();
  parse_cmd->add_option("--in", parse_in, "Response text file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) return cmd_run(config_path, dry_run);
    if (report_cmd->parsed()) return cmd_report(records_path, report_out);
    if (overlay_cmd->parsed()) return cmd_overlay(overlay_in, overlay_out);
    if (parse_cmd->parsed()) return cmd_parse(parse_schema, parse_in);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
