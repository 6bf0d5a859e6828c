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

#include <array>

#include "newsstyle/error.hpp"
#include "newsstyle/features.hpp"
#include "newsstyle/utf8.hpp"

namespace newsstyle {
namespace {

constexpr std::array<std::string_view, kFeatureFamilyCount> kFamilyNames = {
    "char_ngram", "stop_ngram", "pos_ngram", "readability", "dictionary", "domain", "bow"};

void check_order(int n) {
  if (n < 1 || n > 3) throw UsageError("n-gram order must be in [1, 3], got " + std::to_string(n));
}

std::string join(std::span<const std::string_view> parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.push_back('_');
    out.append(parts[i]);
  }
  return out;
}

}  // namespace

std::string_view to_string(FeatureFamily family) {
  return kFamilyNames[static_cast<std::size_t>(family)];
}

std::optional<FeatureFamily> parse_feature_family(std::string_view name) {
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i) {
    if (kFamilyNames[i] == name) return static_cast<FeatureFamily>(i);
  }
  return std::nullopt;
}

std::optional<FeatureFamily> family_of(std::string_view feature_id) {
  const std::size_t colon = feature_id.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  std::string_view prefix = feature_id.substr(0, colon);
  if (prefix == "read") return FeatureFamily::readability;
  if (prefix == "dict") return FeatureFamily::dictionary;
  if (prefix == "dom") return FeatureFamily::domain;
  if (prefix == "bow") return FeatureFamily::bow;
  if (prefix.size() == 5 && prefix[4] >= '1' && prefix[4] <= '3') {
    prefix.remove_suffix(1);
    if (prefix == "char") return FeatureFamily::char_ngram;
    if (prefix == "stop") return FeatureFamily::stop_ngram;
  }
  if (prefix.size() == 4 && prefix.substr(0, 3) == "pos" && prefix[3] >= '1' && prefix[3] <= '3') {
    return FeatureFamily::pos_ngram;
  }
  return std::nullopt;
}

GramCounts char_ngrams(std::span<const std::string> paragraphs, int n) {
  check_order(n);
  GramCounts grams;
  std::vector<std::size_t> starts;
  for (const std::string& paragraph : paragraphs) {
    // Collapse whitespace and lowercase; remember code point boundaries.
    std::string text;
    starts.clear();
    bool pending_space = false;
    for (std::size_t pos = 0; pos < paragraph.size();) {
      const auto d = utf8::decode(paragraph, pos);
      pos += d.length;
      if (utf8::classify(d.code_point) == utf8::CharClass::space) {
        pending_space = !text.empty();
        continue;
      }
      if (pending_space) {
        starts.push_back(text.size());
        text.push_back(' ');
        pending_space = false;
      }
      starts.push_back(text.size());
      utf8::append(text, utf8::to_lower(d.code_point));
    }
    starts.push_back(text.size());
    const std::size_t length = starts.size() - 1;
    const auto order = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i + order <= length; ++i) {
      ++grams[text.substr(starts[i], starts[i + order] - starts[i])];
    }
  }
  return grams;
}

GramCounts stopword_ngrams(const TokenizedDocument& doc, int n, const WordSet& stopwords) {
  check_order(n);
  std::vector<std::string> projected;
  for (const Token& token : doc.tokens) {
    std::string word = normalize_word(token.surface);
    if (stopwords.contains(word)) projected.push_back(std::move(word));
  }
  GramCounts grams;
  const auto order = static_cast<std::size_t>(n);
  std::array<std::string_view, 3> window;
  for (std::size_t i = 0; i + order <= projected.size(); ++i) {
    for (std::size_t k = 0; k < order; ++k) window[k] = projected[i + k];
    ++grams[join(std::span<const std::string_view>(window.data(), order))];
  }
  return grams;
}

GramCounts pos_ngrams(const TokenizedDocument& doc, int n) {
  check_order(n);
  if (!doc.tagged()) throw DataError("POS n-grams need a tagged document");
  GramCounts grams;
  const auto order = static_cast<std::size_t>(n);
  std::array<std::string_view, 3> window;
  for (const TokenRange& sentence : doc.sentences) {
    for (std::size_t i = sentence.begin; i + order <= sentence.end; ++i) {
      for (std::size_t k = 0; k < order; ++k) window[k] = to_string(doc.pos_tags[i + k]);
      ++grams[join(std::span<const std::string_view>(window.data(), order))];
    }
  }
  return grams;
}

GramCounts word_unigrams(const TokenizedDocument& doc) {
  GramCounts grams;
  for (const Token& token : doc.tokens) {
    if (token.is_word()) ++grams[normalize_word(token.surface)];
  }
  return grams;
}

}  // namespace newsstyle
