/*
 * Copyright (C) 2026 The newsstyle Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <array>
#include <charconv>

#include "newsstyle/error.hpp"
#include "newsstyle/textproc.hpp"
#include "newsstyle/utf8.hpp"

namespace newsstyle {
namespace {

constexpr std::array<std::string_view, kPosTagCount> kTagNames = {
    "NOUN", "VERB", "ADJ", "ADV", "PRON", "DET", "ADP", "NUM", "CONJ", "PRT", "PUNCT", "X"};

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', pos);
    fields.push_back(line.substr(pos, tab == std::string_view::npos ? tab : tab - pos));
    if (tab == std::string_view::npos) break;
    pos = tab + 1;
  }
  return fields;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    if (!line.empty() && line.front() != '#') fn(line, line_no);
    pos = eol + 1;
  }
}

PosTag require_tag(std::string_view name, std::size_t line_no) {
  const auto tag = parse_pos_tag(name);
  if (!tag) {
    throw DataError("unknown POS tag '" + std::string(name) + "' on line " +
                    std::to_string(line_no));
  }
  return *tag;
}

bool is_numeric(std::string_view surface) {
  const auto first = utf8::decode(surface, 0);
  return utf8::classify(first.code_point) == utf8::CharClass::digit;
}

bool is_capitalized(std::string_view surface) {
  const auto first = utf8::decode(surface, 0);
  return utf8::classify(first.code_point) == utf8::CharClass::letter &&
         utf8::to_lower(first.code_point) != first.code_point;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::string_view to_string(PosTag tag) { return kTagNames[static_cast<std::size_t>(tag)]; }

std::optional<PosTag> parse_pos_tag(std::string_view name) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i) {
    if (kTagNames[i] == name) return static_cast<PosTag>(i);
  }
  return std::nullopt;
}

LexiconTagger::LexiconTagger(std::unordered_map<std::string, PosTag> lexicon,
                             std::vector<SuffixRule> suffix_rules)
    : lexicon_(std::move(lexicon)), suffix_rules_(std::move(suffix_rules)) {
  std::stable_sort(suffix_rules_.begin(), suffix_rules_.end(),
                   [](const SuffixRule& a, const SuffixRule& b) {
                     return a.suffix.size() > b.suffix.size();
                   });
}

LexiconTagger LexiconTagger::parse(std::string_view lexicon_tsv, std::string_view suffix_tsv) {
  std::unordered_map<std::string, PosTag> lexicon;
  for_each_line(lexicon_tsv, [&](std::string_view line, std::size_t line_no) {
    const auto fields = split_fields(line);
    if (fields.size() != 2 || fields[0].empty()) {
      throw DataError("malformed lexicon line " + std::to_string(line_no));
    }
    lexicon.emplace(normalize_word(fields[0]), require_tag(fields[1], line_no));
  });
  std::vector<SuffixRule> rules;
  for_each_line(suffix_tsv, [&](std::string_view line, std::size_t line_no) {
    const auto fields = split_fields(line);
    std::size_t min_length = 0;
    if (fields.size() != 3 || fields[0].empty() ||
        std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), min_length).ec !=
            std::errc{}) {
      throw DataError("malformed suffix rule line " + std::to_string(line_no));
    }
    rules.push_back({std::string(fields[0]), require_tag(fields[1], line_no), min_length});
  });
  return LexiconTagger(std::move(lexicon), std::move(rules));
}

const LexiconTagger& LexiconTagger::standard() {
  static const LexiconTagger tagger = parse(data::pos_lexicon(), data::pos_suffixes());
  return tagger;
}

PosTag LexiconTagger::tag_word(std::string_view surface, bool sentence_initial) const {
  if (surface.empty()) return PosTag::X;
  bool has_alnum = false;
  for (std::size_t pos = 0; pos < surface.size();) {
    const auto d = utf8::decode(surface, pos);
    const auto cls = utf8::classify(d.code_point);
    if (cls == utf8::CharClass::letter || cls == utf8::CharClass::digit) {
      has_alnum = true;
      break;
    }
    pos += d.length;
  }
  if (!has_alnum) return PosTag::PUNCT;
  if (is_numeric(surface)) return PosTag::NUM;
  const std::string lower = normalize_word(surface);
  if (const auto it = lexicon_.find(lower); it != lexicon_.end()) return it->second;
  if (!sentence_initial && is_capitalized(surface)) return PosTag::NOUN;
  const std::size_t length = utf8::length(lower);
  for (const SuffixRule& rule : suffix_rules_) {
    if (length >= rule.min_length && ends_with(lower, rule.suffix)) return rule.tag;
  }
  return PosTag::NOUN;
}

void LexiconTagger::tag(TokenizedDocument& doc) const {
  doc.pos_tags.assign(doc.tokens.size(), PosTag::X);
  for (const TokenRange& sentence : doc.sentences) {
    bool initial = true;
    for (std::size_t i = sentence.begin; i < sentence.end; ++i) {
      const Token& token = doc.tokens[i];
      doc.pos_tags[i] = tag_word(token.surface, initial && token.is_word());
      if (token.is_word()) initial = false;
    }
  }
}

}  // namespace newsstyle
