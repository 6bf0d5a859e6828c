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

#ifndef NEWSSTYLE_FEATURES_HPP_
#define NEWSSTYLE_FEATURES_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "newsstyle/corpus.hpp"
#include "newsstyle/textproc.hpp"

namespace newsstyle {

enum class FeatureFamily : std::uint8_t {
  char_ngram, stop_ngram, pos_ngram, readability, dictionary, domain, bow
};
inline constexpr std::size_t kFeatureFamilyCount = 7;

std::string_view to_string(FeatureFamily family);
std::optional<FeatureFamily> parse_feature_family(std::string_view name);

// Readability and domain features are per-document scalars: exempt from
// selection and z-standardized.
constexpr bool is_scalar_family(FeatureFamily family) {
  return family == FeatureFamily::readability || family == FeatureFamily::domain;
}

// Family of a namespaced feature id such as "char3:the" or "read:lix".
std::optional<FeatureFamily> family_of(std::string_view feature_id);

// -- raw extractors -----------------------------------------------------------

using GramCounts = std::unordered_map<std::string, std::size_t>;

// Character n-grams of the lowercased body, one paragraph at a time, with
// whitespace runs collapsed to one space and trimmed at paragraph ends.
// Counted in code points. Throws UsageError unless 1 <= n <= 3.
GramCounts char_ngrams(std::span<const std::string> paragraphs, int n);

// n-grams over the document's stop-word subsequence (all other tokens
// deleted, order kept), joined with '_'.
GramCounts stopword_ngrams(const TokenizedDocument& doc, int n, const WordSet& stopwords);

// Tag n-grams inside sentences, joined with '_'. Throws DataError for an
// untagged document.
GramCounts pos_ngrams(const TokenizedDocument& doc, int n);

// Lowercased word-token unigrams.
GramCounts word_unigrams(const TokenizedDocument& doc);

// -- readability ----------------------------------------------------------------

struct ReadabilityCounts {
  std::size_t characters = 0;     // letters and digits in words
  std::size_t words = 0;          // word tokens
  std::size_t sentences = 0;      // sentences with at least one word
  std::size_t syllables = 0;
  std::size_t long_words = 0;     // more than 6 characters
  std::size_t complex_words = 0;  // 3 or more syllables
  std::size_t mini_words = 0;     // at most 3 characters
};

inline constexpr std::size_t kReadabilityCount = 10;
inline constexpr std::array<std::string_view, kReadabilityCount> kReadabilityNames = {
    "ari", "coleman_liau", "flesch_kincaid_grade", "flesch_reading_ease",
    "gunning_fog", "lix", "mcalpine_eflaw", "rix", "smog", "strain"};
using ReadabilityScores = std::array<double, kReadabilityCount>;

ReadabilityCounts readability_counts(const TokenizedDocument& doc);
// Formulas are listed in docs/readability.md. Throws DataError when there
// are no sentences or no words.
ReadabilityScores readability_scores(const ReadabilityCounts& counts);
ReadabilityScores readability_scores(const TokenizedDocument& doc);

// -- dictionaries -------------------------------------------------------------

// Word -> category flags, read from the General Inquirer spreadsheet layout
// (Entry, Source, one column per category, Othtags, Defined). Sense markers
// ("ABOUT#2") are merged into one word.
class Dictionaries {
 public:
  Dictionaries() = default;
  Dictionaries(std::vector<std::string> categories,
               std::unordered_map<std::string, std::vector<std::uint16_t>> flags);

  static Dictionaries parse_inquirer_csv(std::string_view text);
  // Throws DataError when the file is missing or malformed.
  static Dictionaries load(const std::filesystem::path& path);
  // The bundled sample in inquirer_sample.csv.
  static const Dictionaries& standard();

  const std::vector<std::string>& categories() const { return categories_; }
  // Category indices for a normalized word; empty when unknown.
  std::span<const std::uint16_t> lookup(std::string_view word) const;
  std::size_t word_count() const { return flags_.size(); }

 private:
  std::vector<std::string> categories_;
  std::unordered_map<std::string, std::vector<std::uint16_t>> flags_;
};

// Per category: fraction of word tokens flagged with it.
std::vector<double> dictionary_features(const TokenizedDocument& doc, const Dictionaries& dict);

// -- domain -------------------------------------------------------------------

struct DomainFeatures {
  double quoted_ratio = 0.0;           // quoted words / words
  double external_link_ratio = 0.0;    // external / max(1, links)
  double paragraph_count = 0.0;
  double mean_paragraph_length = 0.0;  // words per paragraph
};

DomainFeatures domain_features(const Article& article, const TokenizedDocument& doc);

// -- profiles -----------------------------------------------------------------

enum class FeatureModel { style, topic };
std::string_view to_string(FeatureModel model);
std::optional<FeatureModel> parse_feature_model(std::string_view name);

struct ExtractionConfig {
  std::array<bool, kFeatureFamilyCount> families{};
  int min_n = 1;
  int max_n = 3;

  bool has(FeatureFamily family) const { return families[static_cast<std::size_t>(family)]; }
  static ExtractionConfig for_model(FeatureModel model);
};

struct FeatureResources {
  const Tokenizer* tokenizer = nullptr;
  const PosTagger* tagger = nullptr;
  const WordSet* stopwords = nullptr;
  const Dictionaries* dictionaries = nullptr;

  // Bundled tokenizer, tagger, stop words and sample dictionary.
  static FeatureResources standard();
};

// Every candidate feature of one document. Multiset families hold relative
// frequencies within their family and order ("char2" grams sum to 1);
// dictionary values are per-category token fractions; scalars are raw.
struct RawProfile {
  std::string doc_id;
  std::uint32_t family_mask = 0;
  std::vector<std::pair<std::string, double>> values;  // sorted by id

  bool has_family(FeatureFamily family) const {
    return (family_mask >> static_cast<unsigned>(family)) & 1U;
  }
};

RawProfile extract_profile(const Article& article, const ExtractionConfig& config,
                           const FeatureResources& resources);

using FeatureId = std::uint32_t;

// Interns feature id strings. Not synchronized: intern from one thread.
class FeatureSpace {
 public:
  FeatureId intern(std::string_view name);
  std::optional<FeatureId> find(std::string_view name) const;
  const std::string& name(FeatureId id) const { return names_[id]; }
  FeatureFamily family(FeatureId id) const { return families_[id]; }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::vector<FeatureFamily> families_;
  std::unordered_map<std::string, FeatureId> ids_;
};

struct DocumentProfile {
  std::string doc_id;
  std::uint32_t family_mask = 0;
  std::vector<std::pair<FeatureId, double>> values;  // sorted by id

  bool has_family(FeatureFamily family) const {
    return (family_mask >> static_cast<unsigned>(family)) & 1U;
  }
};

DocumentProfile intern_profile(const RawProfile& raw, FeatureSpace& space);

// Extracts in parallel, interns in article order.
std::vector<DocumentProfile> extract_profiles(std::span<const Article> articles,
                                              const ExtractionConfig& config,
                                              const FeatureResources& resources,
                                              FeatureSpace& space, std::size_t threads = 0);

// -- vocabulary ---------------------------------------------------------------

struct SelectionConfig {
  // Features in fewer than this fraction of training documents are dropped.
  double min_document_fraction = 0.10;
  // Features must occur in documents of at least this many categories.
  std::size_t min_categories = 2;
};

struct VocabularyEntry {
  std::string id;
  FeatureFamily family = FeatureFamily::char_ngram;
  std::size_t document_frequency = 0;
  // Documents containing the feature, per vocabulary category.
  std::vector<std::size_t> category_presence;
  // Standardization for scalar families; identity otherwise.
  double mean = 0.0;
  double scale = 1.0;

  bool operator==(const VocabularyEntry&) const = default;
};

class FeatureVocabulary {
 public:
  static constexpr int kFormatVersion = 1;

  FeatureVocabulary() = default;
  FeatureVocabulary(std::vector<VocabularyEntry> entries, std::vector<std::string> categories,
                    std::vector<std::string> training_ids, SelectionConfig selection);

  const std::vector<VocabularyEntry>& entries() const { return entries_; }
  const std::vector<std::string>& categories() const { return categories_; }
  // Ids of the documents the vocabulary and its standardization statistics
  // were computed from, sorted.
  const std::vector<std::string>& training_ids() const { return training_ids_; }
  const SelectionConfig& selection() const { return selection_; }
  std::size_t size() const { return entries_.size(); }
  std::optional<std::size_t> index_of(std::string_view id) const;
  bool uses_family(FeatureFamily family) const;

  // SHA-256 of the canonical JSON serialization.
  std::string checksum() const;
  nlohmann::json to_json() const;
  static FeatureVocabulary from_json(const nlohmann::json& j);
  void save(const std::filesystem::path& path) const;
  static FeatureVocabulary load(const std::filesystem::path& path);

  bool operator==(const FeatureVocabulary& other) const {
    return entries_ == other.entries_ && categories_ == other.categories_ &&
           training_ids_ == other.training_ids_;
  }

 private:
  void index();

  std::vector<VocabularyEntry> entries_;
  std::vector<std::string> categories_;
  std::vector<std::string> training_ids_;
  SelectionConfig selection_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

// Selects features from training documents only. A non-scalar feature is
// kept when docfreq >= fraction * N (with 1e-9 slack, so 10% of 30 keeps 3)
// and it occurs in at least min_categories categories. Scalar features are
// always kept. Entries are ordered by family, then id. Throws DataError with
// fewer than two categories or mismatched inputs.
FeatureVocabulary build_vocabulary(std::span<const DocumentProfile* const> docs,
                                   std::span<const std::string> categories,
                                   const FeatureSpace& space,
                                   const SelectionConfig& selection = {});

// -- vectors ------------------------------------------------------------------

struct FeatureVector {
  std::vector<std::uint32_t> indices;  // strictly increasing
  std::vector<double> values;          // never zero
  std::size_t dimension = 0;

  double value_at(std::size_t index) const;
  std::size_t nnz() const { return indices.size(); }
  bool operator==(const FeatureVector&) const = default;
};

// Maps interned profiles onto one vocabulary.
class Vectorizer {
 public:
  Vectorizer(const FeatureVocabulary& vocabulary, const FeatureSpace& space);

  // Throws DataError when the vocabulary needs a family the profile lacks.
  FeatureVector operator()(const DocumentProfile& profile) const;

 private:
  const FeatureVocabulary& vocabulary_;
  std::vector<std::int32_t> space_to_index_;
  std::uint32_t required_mask_ = 0;
};

FeatureVector vectorize(const DocumentProfile& profile, const FeatureVocabulary& vocabulary,
                        const FeatureSpace& space);
FeatureVector vectorize(const RawProfile& profile, const FeatureVocabulary& vocabulary);

}  // namespace newsstyle

#endif  // NEWSSTYLE_FEATURES_HPP_
