#include "reveal/manifest.hpp"

#include <filesystem>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace reveal {

namespace {

std::string require_string(const json& obj, const char* field,
                           std::size_t line) {
  if (!obj.contains(field) || !obj[field].is_string() ||
      obj[field].get<std::string>().empty()) {
    throw ManifestError("missing or empty field '" + std::string(field) +
                            "' at line " + std::to_string(line),
                        line);
  }
  return obj[field].get<std::string>();
}

}  // namespace

std::vector<Sample> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ManifestError("cannot open manifest: " + path);
  const fs::path base = fs::path(path).parent_path();

  std::vector<Sample> samples;
  std::vector<std::size_t> sample_lines;
  std::set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception& e) {
      throw ManifestError("invalid JSON at line " + std::to_string(line_no) +
                              ": " + e.what(),
                          line_no);
    }
    Sample s;
    s.id = require_string(obj, "id", line_no);
    if (!seen_ids.insert(s.id).second) {
      throw ManifestError("duplicate sample id '" + s.id + "' at line " +
                              std::to_string(line_no),
                          line_no);
    }
    s.image_path = require_string(obj, "image_path", line_no);
    if (fs::path(s.image_path).is_relative()) {
      s.image_path = (base / s.image_path).string();
    }
    const std::string label = require_string(obj, "label", line_no);
    const auto truth = parse_ground_truth(label);
    if (!truth) {
      throw ManifestError("unknown label '" + label + "' at line " +
                              std::to_string(line_no),
                          line_no);
    }
    s.ground_truth = *truth;
    const std::string domain = require_string(obj, "domain", line_no);
    const auto parsed_domain = parse_forgery_domain(domain);
    if (!parsed_domain) {
      throw ManifestError("unknown domain '" + domain + "' at line " +
                              std::to_string(line_no),
                          line_no);
    }
    s.domain = *parsed_domain;
    s.dataset = require_string(obj, "dataset", line_no);
    samples.push_back(std::move(s));
    sample_lines.push_back(line_no);
  }

  // Image existence is checked up front so a bad manifest fails before
  // any backend spend.
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!fs::exists(samples[i].image_path)) {
      throw ManifestError("image file not found for sample '" + samples[i].id +
                              "' (line " + std::to_string(sample_lines[i]) +
                              "): " + samples[i].image_path,
                          sample_lines[i]);
    }
  }
  return samples;
}

}  // namespace reveal
