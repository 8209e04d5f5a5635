#include "reveal/verdict_parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>

namespace reveal {

std::string_view to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::missing_factor: return "missing_factor";
    case ParseErrorKind::duplicate_factor: return "duplicate_factor";
    case ParseErrorKind::score_out_of_range: return "score_out_of_range";
    case ParseErrorKind::no_global_label: return "no_global_label";
    case ParseErrorKind::bad_cell_index: return "bad_cell_index";
    case ParseErrorKind::empty_response: return "empty_response";
    case ParseErrorKind::refusal_detected: return "refusal_detected";
    case ParseErrorKind::unrecognized_layout: return "unrecognized_layout";
  }
  return "?";
}

std::optional<ParseErrorKind> parse_error_kind(std::string_view s) {
  for (auto k : {ParseErrorKind::missing_factor, ParseErrorKind::duplicate_factor,
                 ParseErrorKind::score_out_of_range, ParseErrorKind::no_global_label,
                 ParseErrorKind::bad_cell_index, ParseErrorKind::empty_response,
                 ParseErrorKind::refusal_detected,
                 ParseErrorKind::unrecognized_layout}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

const std::vector<std::string>& registered_schemas() {
  static const std::vector<std::string> schemas = {"binary_v1", "holistic_v1",
                                                   "region_v1"};
  return schemas;
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

bool consume_prefix(std::string_view& s, std::string_view prefix) {
  if (s.substr(0, prefix.size()) == prefix) {
    s.remove_prefix(prefix.size());
    return true;
  }
  return false;
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

/// Finds `token` in `haystack` (both expected lowercase) at word boundaries.
/// Returns position or npos.
std::size_t find_token(std::string_view haystack, std::string_view token,
                       std::size_t from = 0) {
  for (std::size_t pos = haystack.find(token, from);
       pos != std::string_view::npos; pos = haystack.find(token, pos + 1)) {
    const bool left_ok = pos == 0 || !is_word_char(haystack[pos - 1]);
    const std::size_t end = pos + token.size();
    const bool right_ok = end >= haystack.size() || !is_word_char(haystack[end]);
    if (left_ok && right_ok) return pos;
  }
  return std::string_view::npos;
}

struct LabelHit {
  GroundTruth label;
  bool canonical;  // AUTHENTIC / TAMPERED / REAL / FAKE spelled canonically
  std::size_t pos;
  std::string token;
};

/// Last standalone label synonym in the (lowercased) text.
std::optional<LabelHit> find_last_label(std::string_view lowered) {
  static const std::array<std::pair<std::string_view, GroundTruth>, 7> synonyms =
      {{{"authentic", GroundTruth::authentic},
        {"real", GroundTruth::authentic},
        {"genuine", GroundTruth::authentic},
        {"tampered", GroundTruth::tampered},
        {"fake", GroundTruth::tampered},
        {"manipulated", GroundTruth::tampered},
        {"forged", GroundTruth::tampered}}};
  std::optional<LabelHit> best;
  for (const auto& [token, label] : synonyms) {
    for (std::size_t pos = find_token(lowered, token);
         pos != std::string_view::npos;
         pos = find_token(lowered, token, pos + 1)) {
      if (!best || pos > best->pos) {
        const bool canonical = token == "authentic" || token == "tampered" ||
                               token == "real" || token == "fake";
        best = LabelHit{label, canonical, pos, std::string(token)};
      }
    }
  }
  return best;
}

std::optional<int> word_to_number(std::string_view w) {
  static const std::array<std::string_view, 5> words = {"one", "two", "three",
                                                        "four", "five"};
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (w == words[i]) return static_cast<int>(i + 1);
  }
  return std::nullopt;
}

/// Scans a lowercased line for a standalone integer, or a spelled-out
/// number word when `allow_words`. Returns the first hit after `from`.
struct ScoreHit {
  int value;
  bool from_word;
};
std::optional<ScoreHit> find_score(std::string_view lowered, std::size_t from,
                                   bool allow_words) {
  for (std::size_t i = from; i < lowered.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(lowered[i]))) {
      if (i > 0 && is_word_char(lowered[i - 1])) continue;
      std::size_t end = i;
      while (end < lowered.size() &&
             std::isdigit(static_cast<unsigned char>(lowered[end]))) {
        ++end;
      }
      if (end < lowered.size() && is_word_char(lowered[end])) continue;
      return ScoreHit{std::stoi(std::string(lowered.substr(i, end - i))), false};
    }
  }
  if (allow_words) {
    for (auto w : {"one", "two", "three", "four", "five"}) {
      const std::size_t pos = find_token(lowered, w, from);
      if (pos != std::string_view::npos) {
        return ScoreHit{*word_to_number(w), true};
      }
    }
  }
  return std::nullopt;
}

/// Lenient aliases per factor: canonical snake case plus the slash and
/// space spellings models tend to echo back.
const std::vector<std::pair<FactorKind, std::vector<std::string>>>&
factor_aliases() {
  static const auto aliases = [] {
    std::vector<std::pair<FactorKind, std::vector<std::string>>> out;
    static const std::map<FactorKind, std::vector<std::string>> extra = {
        {FactorKind::lighting_shadow, {"lighting/shadow", "lighting and shadow"}},
        {FactorKind::reflections_transparency,
         {"reflections/transparency", "reflections and transparency",
          "reflection/transparency"}},
        {FactorKind::perspective_geometry,
         {"perspective/geometry", "perspective and geometry"}},
        {FactorKind::repetition_patterns,
         {"repetition/patterns", "repetition and patterns",
          "repetition/pattern"}},
        {FactorKind::edge_boundary,
         {"edge/boundary", "edges/boundaries", "edge and boundary"}},
        {FactorKind::contextual_semantic,
         {"contextual/semantic", "contextual and semantic",
          "contextual semantic consistency"}},
        {FactorKind::anomaly_artifact,
         {"anomaly/artifact", "anomaly/artifacts", "anomaly and artifact"}},
        {FactorKind::human_object_realism,
         {"human/object realism", "human object realism",
          "human-object realism"}},
    };
    for (auto f : canonical_factors()) {
      std::vector<std::string> names;
      const std::string snake(to_string(f));
      names.push_back(snake);
      std::string spaced = snake;
      std::replace(spaced.begin(), spaced.end(), '_', ' ');
      names.push_back(spaced);
      if (auto it = extra.find(f); it != extra.end()) {
        names.insert(names.end(), it->second.begin(), it->second.end());
      }
      out.emplace_back(f, std::move(names));
    }
    return out;
  }();
  return aliases;
}

std::optional<std::pair<FactorKind, std::size_t>> match_factor_alias(
    std::string_view lowered_line) {
  for (const auto& [factor, names] : factor_aliases()) {
    for (const auto& name : names) {
      // Alias spellings contain '/', ' ' and '-'; token-boundary check on
      // the first and last characters is enough here.
      const std::size_t pos = lowered_line.find(name);
      if (pos == std::string_view::npos) continue;
      const bool left_ok = pos == 0 || !is_word_char(lowered_line[pos - 1]);
      const std::size_t end = pos + name.size();
      const bool right_ok =
          end >= lowered_line.size() || !is_word_char(lowered_line[end]);
      if (left_ok && right_ok) return std::make_pair(factor, end);
    }
  }
  return std::nullopt;
}

bool contains_refusal_phrase(std::string_view lowered) {
  static const std::array<std::string_view, 8> phrases = {
      "i cannot",     "i can't",        "i'm unable to", "i am unable to",
      "as an ai",     "i'm sorry, but", "i am sorry, but",
      "unable to assist"};
  return std::any_of(phrases.begin(), phrases.end(), [&](std::string_view p) {
    return lowered.find(p) != std::string_view::npos;
  });
}

void add_repair(std::vector<std::string>& repairs, const std::string& tag) {
  if (std::find(repairs.begin(), repairs.end(), tag) == repairs.end()) {
    repairs.push_back(tag);
  }
}

// ---------------------------------------------------------------------------
// binary_v1
// ---------------------------------------------------------------------------

std::optional<BinaryVerdict> strict_binary(const std::string& text) {
  std::string_view body = text;
  // Tolerate surrounding blank lines only.
  const std::string trimmed = trim(body);
  std::string_view rest = trimmed;
  if (!consume_prefix(rest, "ANSWER: ")) return std::nullopt;
  if (rest == "REAL") return BinaryVerdict{GroundTruth::authentic, "REAL"};
  if (rest == "FAKE") return BinaryVerdict{GroundTruth::tampered, "FAKE"};
  return std::nullopt;
}

ParseOutcome lenient_binary(const std::string& text) {
  std::vector<std::string> repairs;
  add_repair(repairs, "whitespace_case_normalization");
  const std::string lowered = lower(text);
  const auto hit = find_last_label(lowered);
  if (!hit) {
    if (contains_refusal_phrase(lowered)) {
      return ParseOutcome::failed(ParseErrorKind::refusal_detected,
                                  "refusal phrase and no label");
    }
    return ParseOutcome::failed(ParseErrorKind::no_global_label,
                                "no recognizable REAL/FAKE answer");
  }
  if (hit->token != "real" && hit->token != "fake") {
    add_repair(repairs, "label_synonym_folding");
  }
  std::string raw = trim(text);
  if (raw.size() > 200) raw.resize(200);
  return ParseOutcome::parsed(BinaryVerdict{hit->label, std::move(raw)},
                              std::move(repairs));
}

// ---------------------------------------------------------------------------
// holistic_v1
// ---------------------------------------------------------------------------

struct HolisticDraft {
  std::map<FactorKind, std::pair<int, std::string>> factors;  // score, why
  std::optional<GroundTruth> label;
  std::string reasoning;
  std::optional<ParseError> semantic_error;

  // Records a factor hit; flags duplicates and range errors.
  void add_factor(FactorKind f, int score, std::string why) {
    if (semantic_error) return;
    if (factors.count(f)) {
      semantic_error = ParseError{ParseErrorKind::duplicate_factor,
                                  std::string(to_string(f))};
      return;
    }
    if (score < 1 || score > 5) {
      semantic_error = ParseError{
          ParseErrorKind::score_out_of_range,
          std::string(to_string(f)) + " score " + std::to_string(score)};
      return;
    }
    factors.emplace(f, std::make_pair(score, std::move(why)));
  }

  ParseOutcome finish(std::vector<std::string> repairs) {
    if (semantic_error) {
      return ParseOutcome::failed(semantic_error->kind, semantic_error->detail);
    }
    for (auto f : canonical_factors()) {
      if (!factors.count(f)) {
        return ParseOutcome::failed(ParseErrorKind::missing_factor,
                                    std::string(to_string(f)));
      }
    }
    if (!label) {
      return ParseOutcome::failed(ParseErrorKind::no_global_label,
                                  "no AUTHENTIC/TAMPERED label");
    }
    std::vector<FactorAssessment> assessments;
    for (auto f : canonical_factors()) {
      auto& [score, why] = factors.at(f);
      if (trim(why).empty()) {
        why = "(not stated)";
        add_repair(repairs, "default_justification");
      }
      assessments.push_back({f, LikertScore(score), why});
    }
    if (reasoning.empty()) reasoning = "(not stated)";
    return ParseOutcome::parsed(
        HolisticVerdict::create(std::move(assessments), *label,
                                std::move(reasoning)),
        std::move(repairs));
  }
};

std::optional<ParseOutcome> strict_holistic(const std::string& text) {
  HolisticDraft draft;
  for (const auto& line : split_lines(text)) {
    if (trim(line).empty()) continue;
    std::string_view rest = line;
    if (consume_prefix(rest, "FACTOR: ")) {
      const std::size_t name_end = rest.find(" | SCORE: ");
      if (name_end == std::string_view::npos) return std::nullopt;
      const auto factor = parse_factor_kind(rest.substr(0, name_end));
      if (!factor) return std::nullopt;
      rest.remove_prefix(name_end + 10);
      const std::size_t score_end = rest.find(" | WHY: ");
      if (score_end == std::string_view::npos) return std::nullopt;
      int score = 0;
      try {
        std::size_t consumed = 0;
        score = std::stoi(std::string(rest.substr(0, score_end)), &consumed);
        if (consumed != score_end) return std::nullopt;
      } catch (...) {
        return std::nullopt;
      }
      std::string why(rest.substr(score_end + 8));
      if (trim(why).empty()) return std::nullopt;
      draft.add_factor(*factor, score, std::move(why));
    } else if (consume_prefix(rest, "LABEL: ")) {
      if (rest == "AUTHENTIC") {
        draft.label = GroundTruth::authentic;
      } else if (rest == "TAMPERED") {
        draft.label = GroundTruth::tampered;
      } else {
        return std::nullopt;
      }
    } else if (consume_prefix(rest, "REASONING: ")) {
      draft.reasoning = std::string(rest);
    } else {
      return std::nullopt;
    }
  }
  // Semantic errors inside a recognized layout are final.
  if (draft.semantic_error) return draft.finish({});
  if (draft.factors.size() != kFactorCount || !draft.label) {
    return std::nullopt;  // incomplete; let the lenient pass try prose
  }
  return draft.finish({});
}

ParseOutcome lenient_holistic(const std::string& text) {
  std::vector<std::string> repairs;
  add_repair(repairs, "whitespace_case_normalization");
  HolisticDraft draft;
  for (const auto& line : split_lines(text)) {
    const std::string lowered = lower(line);
    if (const auto m = match_factor_alias(lowered)) {
      const auto hit = find_score(lowered, m->second, true);
      if (!hit) continue;  // factor mentioned without a score; prose noise
      add_repair(repairs, "lenient_score_extraction");
      if (hit->from_word) add_repair(repairs, "word_number_folding");
      std::string why;
      const std::size_t why_pos = lowered.find("why:");
      if (why_pos != std::string::npos) {
        why = trim(line.substr(why_pos + 4));
      } else if (const std::size_t j = lowered.find("justification:");
                 j != std::string::npos) {
        why = trim(line.substr(j + 14));
      } else {
        const std::size_t dash = lowered.find(" - ", m->second);
        if (dash != std::string::npos) why = trim(line.substr(dash + 3));
      }
      draft.add_factor(m->first, hit->value, std::move(why));
      continue;
    }
    const std::size_t label_kw = lowered.find("label");
    if (label_kw != std::string::npos && !draft.label) {
      if (const auto hit = find_last_label(lowered)) {
        draft.label = hit->label;
        if (!hit->canonical) add_repair(repairs, "label_synonym_folding");
        continue;
      }
    }
    if (const std::size_t r = lowered.find("reasoning"); r != std::string::npos &&
                                                         draft.reasoning.empty()) {
      const std::size_t colon = lowered.find(':', r);
      if (colon != std::string::npos) {
        draft.reasoning = trim(line.substr(colon + 1));
      }
    }
  }
  if (!draft.label) {
    // Fall back to the last standalone synonym anywhere in the text.
    if (const auto hit = find_last_label(lower(text))) {
      draft.label = hit->label;
      add_repair(repairs, "label_synonym_folding");
    }
  }
  if (!draft.label && draft.factors.empty() &&
      contains_refusal_phrase(lower(text))) {
    return ParseOutcome::failed(ParseErrorKind::refusal_detected,
                                "refusal phrase, no factors, no label");
  }
  return draft.finish(std::move(repairs));
}

// ---------------------------------------------------------------------------
// region_v1
// ---------------------------------------------------------------------------

struct RegionDraft {
  std::optional<bool> holistic_cue;
  std::vector<CellFinding> findings;
  std::optional<GroundTruth> label;
  std::string explanation;
  std::optional<ParseError> semantic_error;

  void add_cell(int index, bool anomalous, std::string note, bool merge_dups,
                std::vector<std::string>* repairs) {
    if (semantic_error) return;
    if (index < 1 || index > 9) {
      semantic_error = ParseError{ParseErrorKind::bad_cell_index,
                                  "cell " + std::to_string(index)};
      return;
    }
    auto it = std::find_if(findings.begin(), findings.end(),
                           [index](const CellFinding& f) {
                             return f.cell_index == index;
                           });
    if (it != findings.end()) {
      if (!merge_dups) {
        semantic_error = ParseError{ParseErrorKind::bad_cell_index,
                                    "duplicate cell " + std::to_string(index)};
        return;
      }
      it->anomalous = it->anomalous || anomalous;
      if (repairs) add_repair(*repairs, "merged_duplicate_cells");
      return;
    }
    findings.push_back({index, anomalous, std::move(note)});
  }

  ParseOutcome finish(std::vector<std::string> repairs, bool allow_inference) {
    if (semantic_error) {
      return ParseOutcome::failed(semantic_error->kind, semantic_error->detail);
    }
    if (!label) {
      return ParseOutcome::failed(ParseErrorKind::no_global_label,
                                  "no AUTHENTIC/TAMPERED label");
    }
    bool cue = holistic_cue.value_or(false);
    const bool any_anomalous =
        std::any_of(findings.begin(), findings.end(),
                    [](const CellFinding& f) { return f.anomalous; });
    if (!cue && *label == GroundTruth::tampered && !any_anomalous) {
      if (!allow_inference) {
        return ParseOutcome::failed(
            ParseErrorKind::unrecognized_layout,
            "tampered label without holistic cue or anomalous cells");
      }
      // A tampered call with no cell evidence implies a holistic cue.
      cue = true;
      add_repair(repairs, "inferred_holistic_cue");
    }
    if (explanation.empty()) explanation = "(not stated)";
    return ParseOutcome::parsed(
        RegionVerdict::create(cue, std::move(findings), *label,
                              std::move(explanation)),
        std::move(repairs));
  }
};

std::optional<ParseOutcome> strict_region(const std::string& text) {
  RegionDraft draft;
  for (const auto& line : split_lines(text)) {
    if (trim(line).empty()) continue;
    std::string_view rest = line;
    if (consume_prefix(rest, "HOLISTIC_CUE: ")) {
      if (rest == "YES") {
        draft.holistic_cue = true;
      } else if (rest == "NO") {
        draft.holistic_cue = false;
      } else {
        return std::nullopt;
      }
    } else if (consume_prefix(rest, "CELL: ")) {
      const std::size_t idx_end = rest.find(" | ANOMALOUS: ");
      if (idx_end == std::string_view::npos) return std::nullopt;
      int index = 0;
      try {
        std::size_t consumed = 0;
        index = std::stoi(std::string(rest.substr(0, idx_end)), &consumed);
        if (consumed != idx_end) return std::nullopt;
      } catch (...) {
        return std::nullopt;
      }
      rest.remove_prefix(idx_end + 14);
      const std::size_t flag_end = rest.find(" | NOTE: ");
      if (flag_end == std::string_view::npos) return std::nullopt;
      const std::string_view flag = rest.substr(0, flag_end);
      bool anomalous = false;
      if (flag == "YES") {
        anomalous = true;
      } else if (flag != "NO") {
        return std::nullopt;
      }
      draft.add_cell(index, anomalous, std::string(rest.substr(flag_end + 9)),
                     false, nullptr);
    } else if (consume_prefix(rest, "LABEL: ")) {
      if (rest == "AUTHENTIC") {
        draft.label = GroundTruth::authentic;
      } else if (rest == "TAMPERED") {
        draft.label = GroundTruth::tampered;
      } else {
        return std::nullopt;
      }
    } else if (consume_prefix(rest, "EXPLANATION: ")) {
      draft.explanation = std::string(rest);
    } else {
      return std::nullopt;
    }
  }
  if (draft.semantic_error) return draft.finish({}, false);
  if (!draft.holistic_cue || !draft.label) return std::nullopt;
  return draft.finish({}, false);
}

ParseOutcome lenient_region(const std::string& text) {
  std::vector<std::string> repairs;
  add_repair(repairs, "whitespace_case_normalization");
  RegionDraft draft;
  for (const auto& line : split_lines(text)) {
    const std::string lowered = lower(trim(line));
    if (lowered.empty()) continue;
    if (lowered.find("holistic") != std::string::npos &&
        !draft.holistic_cue) {
      if (find_token(lowered, "no") != std::string::npos &&
          find_token(lowered, "yes") == std::string::npos) {
        draft.holistic_cue = false;
      } else if (find_token(lowered, "yes") != std::string::npos) {
        draft.holistic_cue = true;
      }
      continue;
    }
    if (lowered.rfind("explanation", 0) == 0) {
      const std::size_t colon = lowered.find(':');
      if (colon != std::string::npos) {
        draft.explanation = trim(line.substr(colon + 1));
      }
      continue;
    }
    if (lowered.find("label") != std::string::npos && !draft.label) {
      if (const auto hit = find_last_label(lowered)) {
        draft.label = hit->label;
        if (!hit->canonical) add_repair(repairs, "label_synonym_folding");
        continue;
      }
    }
    // Cell findings from "cell <n>" mentions.
    for (std::size_t pos = find_token(lowered, "cell");
         pos != std::string::npos;
         pos = find_token(lowered, "cell", pos + 4)) {
      const auto hit = find_score(lowered, pos + 4, false);
      if (!hit) break;
      const bool negated = lowered.find("anomalous: no") != std::string::npos ||
                           lowered.find("no anomal") != std::string::npos ||
                           lowered.find("looks fine") != std::string::npos;
      std::string note = trim(line);
      if (note.size() > 200) note.resize(200);
      add_repair(repairs, "lenient_cell_extraction");
      draft.add_cell(hit->value, !negated, std::move(note), true, &repairs);
      break;  // one finding per line
    }
  }
  if (!draft.label) {
    if (const auto hit = find_last_label(lower(text))) {
      draft.label = hit->label;
      add_repair(repairs, "label_synonym_folding");
    }
  }
  if (!draft.label && draft.findings.empty() &&
      contains_refusal_phrase(lower(text))) {
    return ParseOutcome::failed(ParseErrorKind::refusal_detected,
                                "refusal phrase, no findings, no label");
  }
  return draft.finish(std::move(repairs), true);
}

std::string sanitize_inline(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '\r', ' ');
  return s;
}

}  // namespace

ParseOutcome parse(const std::string& text, const std::string& schema_id) {
  try {
    if (trim(text).empty()) {
      return ParseOutcome::failed(ParseErrorKind::empty_response, "");
    }
    if (schema_id == "binary_v1") {
      if (auto v = strict_binary(text)) {
        return ParseOutcome::parsed(std::move(*v), {});
      }
      return lenient_binary(text);
    }
    if (schema_id == "holistic_v1") {
      if (auto outcome = strict_holistic(text)) return std::move(*outcome);
      return lenient_holistic(text);
    }
    if (schema_id == "region_v1") {
      if (auto outcome = strict_region(text)) return std::move(*outcome);
      return lenient_region(text);
    }
    return ParseOutcome::failed(ParseErrorKind::unrecognized_layout,
                                "unknown schema: " + schema_id);
  } catch (const std::exception& e) {
    return ParseOutcome::failed(ParseErrorKind::unrecognized_layout,
                                std::string("internal: ") + e.what());
  } catch (...) {
    return ParseOutcome::failed(ParseErrorKind::unrecognized_layout,
                                "internal: unknown exception");
  }
}

bool detect_refusal(const std::string& text) {
  const std::string lowered = lower(text);
  if (!contains_refusal_phrase(lowered)) return false;
  if (find_last_label(lowered)) return false;
  // A factor score also counts as recognizable content.
  for (const auto& line : split_lines(lowered)) {
    if (const auto m = match_factor_alias(line)) {
      if (find_score(line, m->second, true)) return false;
    }
    const std::size_t s = line.find("score");
    if (s != std::string::npos && find_score(line, s, true)) return false;
  }
  return true;
}

std::string render_canonical(const BinaryVerdict& v) {
  return std::string("ANSWER: ") +
         (v.global_label == GroundTruth::authentic ? "REAL" : "FAKE") + "\n";
}

std::string render_canonical(const HolisticVerdict& v) {
  std::ostringstream out;
  for (const auto& a : v.assessments()) {
    out << "FACTOR: " << to_string(a.factor) << " | SCORE: " << a.score.value()
        << " | WHY: " << sanitize_inline(a.justification) << "\n";
  }
  out << "LABEL: "
      << (v.global_label() == GroundTruth::authentic ? "AUTHENTIC" : "TAMPERED")
      << "\n";
  out << "REASONING: " << sanitize_inline(v.major_reasoning()) << "\n";
  return out.str();
}

std::string render_canonical(const RegionVerdict& v) {
  std::ostringstream out;
  out << "HOLISTIC_CUE: " << (v.holistic_cue_found() ? "YES" : "NO") << "\n";
  for (const auto& f : v.cell_findings()) {
    out << "CELL: " << f.cell_index
        << " | ANOMALOUS: " << (f.anomalous ? "YES" : "NO")
        << " | NOTE: " << sanitize_inline(f.note) << "\n";
  }
  out << "LABEL: "
      << (v.global_label() == GroundTruth::authentic ? "AUTHENTIC" : "TAMPERED")
      << "\n";
  out << "EXPLANATION: " << sanitize_inline(v.explanation()) << "\n";
  return out.str();
}

std::string render_canonical(const Verdict& v) {
  return std::visit([](const auto& inner) { return render_canonical(inner); },
                    v);
}

}  // namespace reveal
