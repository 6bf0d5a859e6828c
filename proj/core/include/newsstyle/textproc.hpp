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

#ifndef NEWSSTYLE_TEXTPROC_HPP_
#define NEWSSTYLE_TEXTPROC_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "newsstyle/corpus.hpp"

namespace newsstyle {

// Coarse part-of-speech tagset.
enum class PosTag : std::uint8_t {
  NOUN, VERB, ADJ, ADV, PRON, DET, ADP, NUM, CONJ, PRT, PUNCT, X
};
inline constexpr std::size_t kPosTagCount = 12;

std::string_view to_string(PosTag tag);
std::optional<PosTag> parse_pos_tag(std::string_view name);

struct Token {
  // Exact source bytes: paragraphs[paragraph].substr(begin, end - begin).
  std::string surface;
  std::size_t paragraph = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
  // Letters and digits in the token, counted in code points.
  std::size_t alnum_chars = 0;

  bool is_word() const { return alnum_chars > 0; }
};

// Half-open token index range.
struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool operator==(const TokenRange&) const = default;
};

struct TokenizedDocument {
  std::vector<Token> tokens;
  // Contiguous, non-overlapping, covering all tokens; never spans paragraphs.
  std::vector<TokenRange> sentences;
  // Empty until tagged; then aligned 1:1 with tokens.
  std::vector<PosTag> pos_tags;
  std::size_t paragraph_count = 0;

  bool tagged() const { return pos_tags.size() == tokens.size(); }
  std::size_t word_count() const;
};

// Lowercase form used for every lexical lookup. ASCII and Latin-1 letters are
// folded; typographic apostrophes become ASCII.
std::string normalize_word(std::string_view surface);

using WordSet = std::unordered_set<std::string>;

// Parses a one-entry-per-line list; '#' starts a comment line.
WordSet parse_word_list(std::string_view text);

// Word tokenizer and sentence splitter.
//
// Words are maximal runs of letters and digits, joined across internal
// apostrophes, hyphens, and digit-group separators ("1,000", "3.5"). Other
// characters form single-character punctuation tokens, except that runs of
// one repeated character ("...", "--") stay together. Clitics are split off:
// "don't" -> "do" "n't", "he's" -> "he" "'s". A period is kept on the word
// for listed abbreviations, single capital initials, and dotted acronyms.
// Sentences end after . ! ? or an ellipsis plus any closing quotes and
// brackets, and at every paragraph end.
class Tokenizer {
 public:
  explicit Tokenizer(WordSet abbreviations);

  // Built from the bundled abbreviation list.
  static const Tokenizer& standard();

  TokenizedDocument tokenize(std::span<const std::string> paragraphs) const;
  TokenizedDocument tokenize(const Article& article) const {
    return tokenize(article.paragraphs);
  }

 private:
  WordSet abbreviations_;
};

class PosTagger {
 public:
  virtual ~PosTagger() = default;
  // Fills doc.pos_tags with one tag per token.
  virtual void tag(TokenizedDocument& doc) const = 0;
};

// Reference tagger. Resolution order per token: punctuation -> PUNCT; numeric
// shape -> NUM; lexicon entry; capitalized word not opening a sentence ->
// NOUN; longest matching suffix rule; NOUN.
class LexiconTagger final : public PosTagger {
 public:
  struct SuffixRule {
    std::string suffix;
    PosTag tag;
    std::size_t min_length;
  };

  LexiconTagger(std::unordered_map<std::string, PosTag> lexicon,
                std::vector<SuffixRule> suffix_rules);

  // Parses "word<TAB>TAG" and "suffix<TAB>TAG<TAB>minlen" files.
  static LexiconTagger parse(std::string_view lexicon_tsv, std::string_view suffix_tsv);
  static const LexiconTagger& standard();

  void tag(TokenizedDocument& doc) const override;
  PosTag tag_word(std::string_view surface, bool sentence_initial) const;

 private:
  std::unordered_map<std::string, PosTag> lexicon_;
  std::vector<SuffixRule> suffix_rules_;  // longest suffix first
};

// Vowel-group syllable estimate with silent-e, -ed/-es and vowel-hiatus
// adjustments; never below 1. Throws std::invalid_argument when `word` has
// no letter.
int count_syllables(std::string_view word);

// Spans between matched double quotes (straight " or typographic “ ”),
// excluding the quote characters. An unmatched opener runs to the paragraph
// end. Spans never nest and come out ordered.
std::vector<QuotedSpan> detect_quotes(std::span<const std::string> paragraphs);

// Word tokens lying entirely inside one of `spans`.
std::size_t count_quoted_words(const TokenizedDocument& doc, std::span<const QuotedSpan> spans);

// Bundled resources.
const WordSet& standard_stopwords();
const WordSet& standard_abbreviations();

namespace data {
// Raw contents of the bundled data files.
std::string_view abbreviations();
std::string_view stopwords();
std::string_view pos_lexicon();
std::string_view pos_suffixes();
std::string_view inquirer_sample();
}  // namespace data

}  // namespace newsstyle

#endif  // NEWSSTYLE_TEXTPROC_HPP_
