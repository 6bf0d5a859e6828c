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

#include "newsstyle/error.hpp"
#include "newsstyle/textproc.hpp"
#include "newsstyle/utf8.hpp"

namespace newsstyle {
namespace {

using utf8::CharClass;

constexpr char32_t kRightSingleQuote = 0x2019;
constexpr char32_t kLeftSingleQuote = 0x2018;

bool is_alnum(char32_t c) {
  const CharClass cls = utf8::classify(c);
  return cls == CharClass::letter || cls == CharClass::digit;
}

bool is_apostrophe(char32_t c) { return c == '\'' || c == kRightSingleQuote; }

bool groups_with_itself(char32_t c) {
  switch (c) {
    case '.': case '!': case '?': case '-': case '*': case '=': case '_': case '~': case '#':
      return true;
    default:
      return false;
  }
}

bool is_terminal(const Token& token) {
  if (token.is_word() || token.surface.empty()) return false;
  for (std::size_t pos = 0; pos < token.surface.size();) {
    const auto d = utf8::decode(token.surface, pos);
    if (d.code_point != '.' && d.code_point != '!' && d.code_point != '?' &&
        d.code_point != 0x2026) {
      return false;
    }
    pos += d.length;
  }
  return true;
}

bool is_closer(const Token& token) {
  if (token.is_word()) return false;
  const auto d = utf8::decode(token.surface, 0);
  if (d.length != token.surface.size()) return false;
  switch (d.code_point) {
    case '"': case '\'': case ')': case ']': case '}': case 0x201D: case kRightSingleQuote:
      return true;
    default:
      return false;
  }
}

std::size_t count_alnum(std::string_view text) {
  std::size_t n = 0;
  for (std::size_t pos = 0; pos < text.size();) {
    const auto d = utf8::decode(text, pos);
    if (is_alnum(d.code_point)) ++n;
    pos += d.length;
  }
  return n;
}

class ParagraphScanner {
 public:
  ParagraphScanner(std::string_view text, std::size_t paragraph, const WordSet& abbreviations,
                   std::vector<Token>& out)
      : text_(text), paragraph_(paragraph), abbreviations_(abbreviations), out_(out) {}

  void run() {
    std::size_t pos = 0;
    while (pos < text_.size()) {
      const auto d = utf8::decode(text_, pos);
      const CharClass cls = utf8::classify(d.code_point);
      if (cls == CharClass::space) {
        pos += d.length;
      } else if (cls == CharClass::punct) {
        pos = scan_punct(pos, d);
      } else {
        pos = scan_word(pos);
      }
    }
  }

 private:
  char32_t at(std::size_t pos) const {
    return pos < text_.size() ? utf8::decode(text_, pos).code_point : 0;
  }
  std::size_t width(std::size_t pos) const { return utf8::decode(text_, pos).length; }

  std::size_t scan_punct(std::size_t pos, utf8::Decoded first) {
    std::size_t end = pos + first.length;
    if (groups_with_itself(first.code_point)) {
      while (end < text_.size() && at(end) == first.code_point) end += width(end);
    }
    emit(pos, end);
    return end;
  }

  std::size_t scan_word(std::size_t begin) {
    std::size_t end = begin;
    std::size_t run_letters = 0;  // alnum chars since the last connector
    bool has_acronym_dot = false;
    for (;;) {
      while (end < text_.size() && is_alnum(at(end))) {
        end += width(end);
        ++run_letters;
      }
      if (end >= text_.size()) break;
      const char32_t connector = at(end);
      const std::size_t after = end + width(end);
      if (after >= text_.size()) break;
      const char32_t next = at(after);
      const char32_t prev = utf8::decode(text_, previous(end)).code_point;
      const CharClass prev_cls = utf8::classify(prev);
      const CharClass next_cls = utf8::classify(next);
      bool join = false;
      if (is_apostrophe(connector)) {
        join = next_cls == CharClass::letter;
      } else if (connector == '-' || connector == 0x2010) {
        join = is_alnum(next);
      } else if (connector == ',' ) {
        join = prev_cls == CharClass::digit && next_cls == CharClass::digit;
      } else if (connector == '.') {
        if (prev_cls == CharClass::digit && next_cls == CharClass::digit) {
          join = true;
        } else if (run_letters == 1 && prev_cls == CharClass::letter &&
                   next_cls == CharClass::letter) {
          // Dotted acronym such as U.S or e.g
          join = true;
          has_acronym_dot = true;
        }
      }
      if (!join) break;
      end = after;
      run_letters = 0;
    }

    // Abbreviation periods stay on the word.
    if (end < text_.size() && text_[end] == '.' &&
        !(end + 1 < text_.size() && text_[end + 1] == '.')) {
      const std::string_view word = text_.substr(begin, end - begin);
      const bool initial = word.size() == 1 && word[0] >= 'A' && word[0] <= 'Z';
      if (initial || has_acronym_dot || abbreviations_.contains(normalize_word(word))) {
        emit(begin, end + 1);
        return end + 1;
      }
    }

    emit_with_clitics(begin, end);
    return end;
  }

  std::size_t previous(std::size_t pos) const {
    std::size_t p = pos - 1;
    while (p > 0 && (static_cast<unsigned char>(text_[p]) & 0xC0) == 0x80) --p;
    return p;
  }

  void emit_with_clitics(std::size_t begin, std::size_t end) {
    const std::string_view word = text_.substr(begin, end - begin);
    // Last apostrophe inside the word.
    std::size_t apostrophe = std::string_view::npos;
    std::size_t apostrophe_width = 0;
    for (std::size_t pos = 0; pos < word.size();) {
      const auto d = utf8::decode(word, pos);
      if (is_apostrophe(d.code_point)) {
        apostrophe = pos;
        apostrophe_width = d.length;
      }
      pos += d.length;
    }
    if (apostrophe != std::string_view::npos && apostrophe > 0) {
      const std::string tail = normalize_word(word.substr(apostrophe + apostrophe_width));
      const char before = word[apostrophe - 1];
      if (tail == "t" && (before == 'n' || before == 'N') && apostrophe > 1) {
        emit(begin, begin + apostrophe - 1);
        emit(begin + apostrophe - 1, end);
        return;
      }
      if (tail == "s" || tail == "re" || tail == "ve" || tail == "ll" || tail == "d" ||
          tail == "m") {
        emit(begin, begin + apostrophe);
        emit(begin + apostrophe, end);
        return;
      }
    }
    emit(begin, end);
  }

  void emit(std::size_t begin, std::size_t end) {
    Token token;
    token.surface = std::string(text_.substr(begin, end - begin));
    token.paragraph = paragraph_;
    token.begin = begin;
    token.end = end;
    token.alnum_chars = count_alnum(token.surface);
    out_.push_back(std::move(token));
  }

  std::string_view text_;
  std::size_t paragraph_;
  const WordSet& abbreviations_;
  std::vector<Token>& out_;
};

}  // namespace

std::size_t TokenizedDocument::word_count() const {
  return static_cast<std::size_t>(
      std::count_if(tokens.begin(), tokens.end(), [](const Token& t) { return t.is_word(); }));
}

std::string normalize_word(std::string_view surface) {
  std::string lower = utf8::to_lower(surface);
  std::string out;
  out.reserve(lower.size());
  for (std::size_t pos = 0; pos < lower.size();) {
    const auto d = utf8::decode(lower, pos);
    if (d.code_point == kRightSingleQuote || d.code_point == kLeftSingleQuote) {
      out.push_back('\'');
    } else {
      out.append(lower, pos, d.length);
    }
    pos += d.length;
  }
  return out;
}

WordSet parse_word_list(std::string_view text) {
  WordSet words;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty() && line.front() != '#') words.insert(normalize_word(line));
    pos = eol + 1;
  }
  return words;
}

Tokenizer::Tokenizer(WordSet abbreviations) : abbreviations_(std::move(abbreviations)) {}

const Tokenizer& Tokenizer::standard() {
  static const Tokenizer tokenizer(standard_abbreviations());
  return tokenizer;
}

TokenizedDocument Tokenizer::tokenize(std::span<const std::string> paragraphs) const {
  TokenizedDocument doc;
  doc.paragraph_count = paragraphs.size();
  for (std::size_t p = 0; p < paragraphs.size(); ++p) {
    const std::size_t first = doc.tokens.size();
    ParagraphScanner(paragraphs[p], p, abbreviations_, doc.tokens).run();

    std::size_t start = first;
    std::size_t i = first;
    while (i < doc.tokens.size()) {
      if (!is_terminal(doc.tokens[i])) {
        ++i;
        continue;
      }
      std::size_t j = i + 1;
      while (j < doc.tokens.size() && doc.tokens[j].begin == doc.tokens[j - 1].end &&
             (is_terminal(doc.tokens[j]) || is_closer(doc.tokens[j]))) {
        ++j;
      }
      doc.sentences.push_back({start, j});
      start = j;
      i = j;
    }
    if (start < doc.tokens.size()) doc.sentences.push_back({start, doc.tokens.size()});
  }
  return doc;
}

std::size_t count_quoted_words(const TokenizedDocument& doc, std::span<const QuotedSpan> spans) {
  std::size_t n = 0;
  for (const Token& token : doc.tokens) {
    if (!token.is_word()) continue;
    for (const QuotedSpan& span : spans) {
      if (span.paragraph == token.paragraph && span.begin <= token.begin &&
          token.end <= span.end) {
        ++n;
        break;
      }
    }
  }
  return n;
}

const WordSet& standard_stopwords() {
  static const WordSet words = parse_word_list(data::stopwords());
  return words;
}

const WordSet& standard_abbreviations() {
  static const WordSet words = parse_word_list(data::abbreviations());
  return words;
}

}  // namespace newsstyle
