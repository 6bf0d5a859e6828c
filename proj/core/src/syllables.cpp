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

#include <stdexcept>
#include <string>

#include "newsstyle/textproc.hpp"

namespace newsstyle {
namespace {

bool is_vowel_at(const std::string& w, std::size_t i) {
  switch (w[i]) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
      return true;
    case 'y':
      return i > 0;
    default:
      return false;
  }
}

bool is_consonant_at(const std::string& w, std::size_t i) {
  return w[i] >= 'a' && w[i] <= 'z' && !is_vowel_at(w, i);
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int vowel_groups(const std::string& w) {
  int groups = 0;
  bool in_group = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool v = is_vowel_at(w, i);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  return groups;
}

// Vowel pairs usually pronounced as two syllables.
int hiatus_count(const std::string& w) {
  int extra = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const char a = w[i];
    const char b = w[i + 1];
    const std::string_view rest(w.c_str() + i, w.size() - i);
    const char before = i > 0 ? w[i - 1] : '\0';
    if (a == 'i' && b == 'a') {
      if (before != 'c' && before != 't' && !(before == 'g' && i + 2 < w.size())) ++extra;
    } else if (a == 'i' && b == 'o') {
      const bool silent = before == 't' || before == 's' || before == 'c' ||
                          (before == 'g' && rest.substr(0, 3) == "ion") || rest.substr(0, 3) == "iou";
      if (!silent) ++extra;
    } else if (a == 'e' && b == 'o') {
      if (before != 'p' && !(before == 'g' && i + 2 < w.size() && w[i + 2] == 'n')) ++extra;
    } else if (a == 'u' && b == 'a') {
      if (before != 'q' && before != 'g') ++extra;
    } else if (a == 'i' && b == 'u') {
      ++extra;
    } else if (a == 'i' && b == 'e' && (rest.substr(0, 3) == "iet" || rest.substr(0, 5) == "ience")) {
      ++extra;  // quiet, society, science
    } else if ((a == 'a' || a == 'o') && b == 'y' && rest.substr(1, 3) == "yer") {
      ++extra;  // player, employer
    }
  }
  if (w.size() >= 2 && ends_with(w, "ea") ) ++extra;
  if (w.size() >= 4 && ends_with(w, "ing") && is_vowel_at(w, w.size() - 4)) ++extra;
  if (ends_with(w, "ism")) ++extra;
  return extra;
}

}  // namespace

int count_syllables(std::string_view word) {
  std::string w;
  for (const char c : normalize_word(word)) {
    if (c >= 'a' && c <= 'z') w.push_back(c);
  }
  if (w.empty()) {
    bool has_letter = false;
    for (const char c : word) {
      if (static_cast<unsigned char>(c) >= 0x80 || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z')) {
        has_letter = true;
      }
    }
    if (!has_letter) throw std::invalid_argument("count_syllables: no letters in word");
    return 1;
  }

  int count = vowel_groups(w);
  const std::size_t n = w.size();

  // Silent final e: "make", but not "table" or "be".
  if (n >= 3 && w[n - 1] == 'e' && is_consonant_at(w, n - 2) &&
      !(w[n - 2] == 'l' && is_consonant_at(w, n - 3))) {
    --count;
  }
  // Silent e inside common suffixed forms: "statement", "lately".
  for (const std::string_view suffix : {"ment", "ly", "ness", "ful"}) {
    if (n >= suffix.size() + 3 && ends_with(w, suffix)) {
      const std::size_t e = n - suffix.size() - 1;
      if (w[e] == 'e' && is_consonant_at(w, e - 1) && is_vowel_at(w, e - 2)) --count;
      break;
    }
  }
  // -es and -ed usually add no syllable.
  if (n >= 4 && ends_with(w, "es") && is_consonant_at(w, n - 3)) {
    const char c = w[n - 3];
    const bool sibilant = c == 's' || c == 'x' || c == 'z' ||
                          ends_with(w, "ches") || ends_with(w, "shes") || ends_with(w, "ces") ||
                          ends_with(w, "ges");
    const bool consonant_les = c == 'l' && is_consonant_at(w, n - 4);
    if (!sibilant && !consonant_les) --count;
  }
  if (n >= 4 && ends_with(w, "ed") && is_consonant_at(w, n - 3) && w[n - 3] != 't' &&
      w[n - 3] != 'd') {
    --count;
  }
  count += hiatus_count(w);
  return count < 1 ? 1 : count;
}

}  // namespace newsstyle
