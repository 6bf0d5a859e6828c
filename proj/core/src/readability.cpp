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

#include <cmath>
#include <stdexcept>

#include "newsstyle/error.hpp"
#include "newsstyle/features.hpp"

namespace newsstyle {
namespace {

bool has_letter(std::string_view surface) {
  for (const char c : surface) {
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || static_cast<unsigned char>(c) >= 0x80) {
      return true;
    }
  }
  return false;
}

}  // namespace

ReadabilityCounts readability_counts(const TokenizedDocument& doc) {
  ReadabilityCounts c;
  for (const TokenRange& sentence : doc.sentences) {
    bool has_word = false;
    for (std::size_t i = sentence.begin; i < sentence.end; ++i) {
      const Token& token = doc.tokens[i];
      if (!token.is_word()) continue;
      has_word = true;
      ++c.words;
      c.characters += token.alnum_chars;
      // Numbers without letters read as one syllable.
      const auto syllables =
          static_cast<std::size_t>(has_letter(token.surface) ? count_syllables(token.surface) : 1);
      c.syllables += syllables;
      if (token.alnum_chars > 6) ++c.long_words;
      if (token.alnum_chars <= 3) ++c.mini_words;
      if (syllables >= 3) ++c.complex_words;
    }
    if (has_word) ++c.sentences;
  }
  return c;
}

ReadabilityScores readability_scores(const ReadabilityCounts& c) {
  if (c.sentences == 0 || c.words == 0) {
    throw DataError("readability needs at least one sentence and one word");
  }
  const double words = static_cast<double>(c.words);
  const double sentences = static_cast<double>(c.sentences);
  const double chars = static_cast<double>(c.characters);
  const double syllables = static_cast<double>(c.syllables);
  const double long_words = static_cast<double>(c.long_words);
  const double complex_words = static_cast<double>(c.complex_words);
  const double mini_words = static_cast<double>(c.mini_words);
  const double wps = words / sentences;
  const double spw = syllables / words;

  ReadabilityScores s{};
  s[0] = 4.71 * chars / words + 0.5 * wps - 21.43;
  s[1] = 0.0588 * (100.0 * chars / words) - 0.296 * (100.0 * sentences / words) - 15.8;
  s[2] = 0.39 * wps + 11.8 * spw - 15.59;
  s[3] = 206.835 - 1.015 * wps - 84.6 * spw;
  s[4] = 0.4 * (wps + 100.0 * complex_words / words);
  s[5] = wps + 100.0 * long_words / words;
  s[6] = (words + mini_words) / sentences;
  s[7] = long_words / sentences;
  s[8] = 1.0430 * std::sqrt(complex_words * 30.0 / sentences) + 3.1291;
  s[9] = 0.3 * syllables / sentences;
  return s;
}

ReadabilityScores readability_scores(const TokenizedDocument& doc) {
  return readability_scores(readability_counts(doc));
}

}  // namespace newsstyle
