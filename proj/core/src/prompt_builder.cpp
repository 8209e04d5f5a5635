#include "reveal/prompt_builder.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "reveal/digest.hpp"

#ifndef REVEAL_TEMPLATE_DIR_DEFAULT
#define REVEAL_TEMPLATE_DIR_DEFAULT "templates"
#endif

namespace reveal {

std::string_view to_string(PromptStrategy s) {
  switch (s) {
    case PromptStrategy::baseline: return "baseline";
    case PromptStrategy::holistic: return "holistic";
    case PromptStrategy::region_wise: return "region_wise";
  }
  return "?";
}

std::optional<PromptStrategy> parse_prompt_strategy(std::string_view s) {
  if (s == "baseline") return PromptStrategy::baseline;
  if (s == "holistic") return PromptStrategy::holistic;
  if (s == "region_wise") return PromptStrategy::region_wise;
  return std::nullopt;
}

std::string_view schema_for(PromptStrategy s) {
  switch (s) {
    case PromptStrategy::baseline: return "binary_v1";
    case PromptStrategy::holistic: return "holistic_v1";
    case PromptStrategy::region_wise: return "region_v1";
  }
  return "?";
}

namespace {

std::string read_template(const std::string& dir, const std::string& name) {
  const std::string path = dir + "/" + name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read prompt template: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void substitute(std::string& text, std::string_view placeholder,
                std::string_view value) {
  const std::string marker = "{{" + std::string(placeholder) + "}}";
  for (std::size_t pos = text.find(marker); pos != std::string::npos;
       pos = text.find(marker, pos + value.size())) {
    text.replace(pos, marker.size(), value);
  }
}

std::string factor_list() {
  std::string out;
  int i = 1;
  for (auto f : canonical_factors()) {
    out += std::to_string(i++) + ". " + std::string(to_string(f)) + "\n";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

std::string factor_line_examples() {
  std::string out;
  for (auto f : canonical_factors()) {
    out += "FACTOR: " + std::string(to_string(f)) +
           " | SCORE: <1-5> | WHY: <one sentence>\n";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

}  // namespace

PromptBuilder::PromptBuilder(const std::string& template_dir) {
  std::string dir = template_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("REVEAL_TEMPLATE_DIR")) dir = env;
  }
  if (dir.empty()) dir = REVEAL_TEMPLATE_DIR_DEFAULT;

  system_text_ = read_template(dir, "system_v1.txt");
  baseline_text_ = read_template(dir, "baseline_v1.txt");
  holistic_text_ = read_template(dir, "holistic_v1.txt");
  region_text_ = read_template(dir, "region_v1.txt");

  substitute(holistic_text_, "factor_list", factor_list());
  substitute(holistic_text_, "factor_line_examples", factor_line_examples());

  // Content-derived tag: any template edit yields a new version.
  template_version_ =
      "v1-" + sha256_hex(system_text_ + baseline_text_ + holistic_text_ +
                         region_text_)
                  .substr(0, 12);
}

PromptSpec PromptBuilder::build(PromptStrategy strategy,
                                std::vector<std::uint8_t> image) const {
  if (image.empty()) throw Error("empty image payload");
  PromptSpec spec;
  spec.strategy = strategy;
  spec.system_text = system_text_;
  switch (strategy) {
    case PromptStrategy::baseline: spec.user_text = baseline_text_; break;
    case PromptStrategy::holistic: spec.user_text = holistic_text_; break;
    case PromptStrategy::region_wise: spec.user_text = region_text_; break;
  }
  spec.image_payload = std::move(image);
  spec.schema_id = std::string(schema_for(strategy));
  spec.template_version = template_version_;
  return spec;
}

PromptSpec PromptBuilder::build_baseline(std::vector<std::uint8_t> image) const {
  return build(PromptStrategy::baseline, std::move(image));
}

PromptSpec PromptBuilder::build_holistic(std::vector<std::uint8_t> image) const {
  return build(PromptStrategy::holistic, std::move(image));
}

PromptSpec PromptBuilder::build_region_wise(
    std::vector<std::uint8_t> overlaid_image) const {
  return build(PromptStrategy::region_wise, std::move(overlaid_image));
}

}  // namespace reveal
