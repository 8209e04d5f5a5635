#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reveal/forensics.hpp"

namespace reveal {

enum class PromptStrategy { baseline, holistic, region_wise };

std::string_view to_string(PromptStrategy s);
std::optional<PromptStrategy> parse_prompt_strategy(std::string_view s);

/// Response schema implied by a strategy.
std::string_view schema_for(PromptStrategy s);  // binary_v1 | holistic_v1 | region_v1

/// A fully rendered prompt ready for dispatch. Text depends only on
/// (strategy, template_version), never on image content.
struct PromptSpec {
  PromptStrategy strategy = PromptStrategy::baseline;
  std::string system_text;
  std::string user_text;
  std::vector<std::uint8_t> image_payload;  // PNG or JPEG bytes
  std::string schema_id;
  std::string template_version;

  bool operator==(const PromptSpec&) const = default;
};

/// Loads template assets from a directory and renders PromptSpecs.
/// Template files: system_v1.txt, baseline_v1.txt, holistic_v1.txt,
/// region_v1.txt, UTF-8 with {{placeholder}} markers.
class PromptBuilder {
 public:
  /// Resolution order for the directory: explicit argument, then the
  /// REVEAL_TEMPLATE_DIR env var, then the compiled-in default.
  explicit PromptBuilder(const std::string& template_dir = "");

  PromptSpec build_baseline(std::vector<std::uint8_t> image) const;
  PromptSpec build_holistic(std::vector<std::uint8_t> image) const;
  /// `overlaid_image` is expected to be the output of overlay_grid.
  PromptSpec build_region_wise(std::vector<std::uint8_t> overlaid_image) const;

  PromptSpec build(PromptStrategy strategy,
                   std::vector<std::uint8_t> image) const;

  /// Version tag derived from the template texts; changes whenever any
  /// template text changes.
  const std::string& template_version() const { return template_version_; }

 private:
  std::string system_text_;
  std::string baseline_text_;
  std::string holistic_text_;
  std::string region_text_;
  std::string template_version_;
};

}  // namespace reveal
