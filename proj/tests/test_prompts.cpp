#include <doctest.h>

#include <algorithm>

#include "reveal/prompt_builder.hpp"
#include "reveal/verdict_parser.hpp"
#include "support.hpp"

using namespace reveal;

namespace {

PromptBuilder builder() { return PromptBuilder(REVEAL_TEMPLATE_DIR); }

std::vector<std::uint8_t> fake_png() { return {0x89, 'P', 'N', 'G', 1, 2, 3}; }

}  // namespace

TEST_CASE("baseline prompt carries the verbatim question") {
  const PromptSpec spec = builder().build_baseline(fake_png());
  CHECK(spec.user_text.find("Is this image real or fake?") !=
        std::string::npos);
  CHECK(spec.user_text.find("REAL") != std::string::npos);
  CHECK(spec.user_text.find("FAKE") != std::string::npos);
  CHECK(spec.schema_id == "binary_v1");
  CHECK(spec.image_payload == fake_png());
}

TEST_CASE("holistic prompt enumerates all 8 factors and the 1-5 scale") {
  const PromptSpec spec = builder().build_holistic(fake_png());
  for (auto f : canonical_factors()) {
    CHECK(spec.user_text.find(std::string(to_string(f))) != std::string::npos);
  }
  CHECK(spec.user_text.find("1") != std::string::npos);
  CHECK(spec.user_text.find("5") != std::string::npos);
  CHECK(spec.user_text.find("from 1 to 5") != std::string::npos);
  CHECK(spec.schema_id == "holistic_v1");
}

TEST_CASE("region prompt explains cell numbering and holistic-first rule") {
  const PromptSpec spec = builder().build_region_wise(fake_png());
  CHECK(spec.user_text.find("1 through 9") != std::string::npos);
  CHECK(spec.user_text.find("9 labeled blocks") != std::string::npos);
  CHECK(spec.user_text.find("Only if no holistic cues") != std::string::npos);
  CHECK(spec.schema_id == "region_v1");
}

TEST_CASE("prompts are deterministic") {
  const auto b = builder();
  for (auto strategy : {PromptStrategy::baseline, PromptStrategy::holistic,
                        PromptStrategy::region_wise}) {
    CHECK(b.build(strategy, fake_png()) == b.build(strategy, fake_png()));
  }
}

TEST_CASE("prompt text is independent of image content") {
  const auto b = builder();
  const PromptSpec a = b.build_holistic(fake_png());
  const PromptSpec c = b.build_holistic({0xFF, 0xD8, 9, 9, 9});
  CHECK(a.system_text == c.system_text);
  CHECK(a.user_text == c.user_text);
  CHECK(a.template_version == c.template_version);
  CHECK(a.image_payload != c.image_payload);
}

TEST_CASE("empty image is rejected") {
  CHECK_THROWS_AS(builder().build_baseline({}), Error);
  CHECK_THROWS_AS(builder().build_holistic({}), Error);
  CHECK_THROWS_AS(builder().build_region_wise({}), Error);
}

TEST_CASE("every emitted schema has a registered parser") {
  const auto& schemas = registered_schemas();
  for (auto strategy : {PromptStrategy::baseline, PromptStrategy::holistic,
                        PromptStrategy::region_wise}) {
    const std::string id(schema_for(strategy));
    CHECK(std::find(schemas.begin(), schemas.end(), id) != schemas.end());
  }
}

TEST_CASE("template version tracks template content") {
  test::TempDir dir("tpl");
  namespace fs = std::filesystem;
  for (const auto& entry : fs::directory_iterator(REVEAL_TEMPLATE_DIR)) {
    fs::copy(entry.path(), dir.path() / entry.path().filename());
  }
  const std::string v1 = PromptBuilder(dir.str()).template_version();
  CHECK(v1 == builder().template_version());

  test::write_text(dir.path() / "baseline_v1.txt",
                   "Is this image real or fake? Reply REAL or FAKE.\n");
  const std::string v2 = PromptBuilder(dir.str()).template_version();
  CHECK(v1 != v2);
}
