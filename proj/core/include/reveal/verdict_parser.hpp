#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "reveal/forensics.hpp"

namespace reveal {

enum class ParseErrorKind {
  missing_factor,
  duplicate_factor,
  score_out_of_range,
  no_global_label,
  bad_cell_index,
  empty_response,
  refusal_detected,
  unrecognized_layout,
};

std::string_view to_string(ParseErrorKind k);
std::optional<ParseErrorKind> parse_error_kind(std::string_view s);

struct ParseError {
  ParseErrorKind kind = ParseErrorKind::unrecognized_layout;
  std::string detail;
};

using Verdict = std::variant<BinaryVerdict, HolisticVerdict, RegionVerdict>;

/// Result of parsing one model response. Either a typed verdict plus the
/// list of repair tags that were needed, or a classified failure. Strictly
/// conforming input parses with an empty repair list.
class ParseOutcome {
 public:
  static ParseOutcome parsed(Verdict v, std::vector<std::string> repairs) {
    ParseOutcome o;
    o.verdict_ = std::move(v);
    o.repairs_ = std::move(repairs);
    return o;
  }
  static ParseOutcome failed(ParseErrorKind kind, std::string detail) {
    ParseOutcome o;
    o.error_ = ParseError{kind, std::move(detail)};
    return o;
  }

  bool ok() const { return verdict_.has_value(); }
  const Verdict& verdict() const { return *verdict_; }
  const std::vector<std::string>& repairs_applied() const { return repairs_; }
  const ParseError& error() const { return *error_; }

 private:
  std::optional<Verdict> verdict_;
  std::vector<std::string> repairs_;
  std::optional<ParseError> error_;
};

/// Parses `text` under one of the registered schemas: binary_v1,
/// holistic_v1, region_v1. Strict pass first, then bounded deterministic
/// repair passes in fixed order (whitespace/case normalization, label
/// synonym folding, lenient factor/score extraction, refusal detection).
/// Never throws on arbitrary input.
ParseOutcome parse(const std::string& text, const std::string& schema_id);

/// True iff the text matches the refusal phrase list and carries no
/// recognizable label or score.
bool detect_refusal(const std::string& text);

/// All schema ids parse() accepts.
const std::vector<std::string>& registered_schemas();

// Canonical layout rendering, the inverse of the strict parse path.
std::string render_canonical(const BinaryVerdict& v);
std::string render_canonical(const HolisticVerdict& v);
std::string render_canonical(const RegionVerdict& v);
std::string render_canonical(const Verdict& v);

}  // namespace reveal
