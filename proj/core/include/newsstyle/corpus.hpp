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

#ifndef NEWSSTYLE_CORPUS_HPP_
#define NEWSSTYLE_CORPUS_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "newsstyle/random.hpp"

namespace newsstyle {

enum class Orientation { left, right, mainstream, satire };
enum class Rating { mostly_true, mixture, mostly_false, no_factual, unrated };

inline constexpr std::array<Orientation, 4> kAllOrientations = {
    Orientation::left, Orientation::right, Orientation::mainstream,
    Orientation::satire};
inline constexpr std::array<Rating, 5> kAllRatings = {
    Rating::mostly_true, Rating::mixture, Rating::mostly_false,
    Rating::no_factual, Rating::unrated};

std::string_view to_string(Orientation orientation);
std::string_view to_string(Rating rating);
std::optional<Orientation> parse_orientation(std::string_view token);
std::optional<Rating> parse_rating(std::string_view token);

struct Link {
  std::string url;
  bool external = false;

  bool operator==(const Link&) const = default;
};

// Byte range [begin, end) inside paragraphs[paragraph].
struct QuotedSpan {
  std::size_t paragraph = 0;
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const QuotedSpan&) const = default;
};

struct Article {
  std::string id;
  std::string publisher;
  Orientation orientation = Orientation::mainstream;
  Rating rating = Rating::unrated;
  std::string title;
  std::vector<std::string> paragraphs;
  std::vector<Link> links;
  std::vector<QuotedSpan> quoted_spans;
  std::optional<std::string> source_url;

  bool operator==(const Article&) const = default;
};

using Corpus = std::vector<Article>;

// Throws DataError describing the first violated invariant: empty id or
// publisher, no paragraphs, a quoted span outside its paragraph, or a rated
// satire article.
void validate_article(const Article& article);

nlohmann::json to_json(const Article& article);
// Parses one JSONL record. Throws DataError naming the offending field.
Article article_from_json(const nlohmann::json& record);

enum class CorpusFormat { jsonl, buzzfeed_csv };

struct LoadOptions {
  // Directory of archived article pages for buzzfeed_csv input. Defaults to
  // an `articles` directory next to the CSV file.
  std::optional<std::filesystem::path> archive_dir;
};

// Reads a corpus. Input order is preserved. Throws DataError for unreadable
// files and for the first invalid record, with its 1-based line number.
Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format,
                   const LoadOptions& options = {});
Corpus read_jsonl(std::istream& in);
void write_jsonl(const Corpus& corpus, std::ostream& out);

// -- statistics -------------------------------------------------------------

struct StatsRow {
  std::string name;
  Orientation orientation = Orientation::mainstream;
  // Indexed by Rating.
  std::array<std::size_t, 5> rating_counts{};
  std::size_t articles = 0;
  double mean_paragraphs = 0.0;
  double mean_external_links = 0.0;
  double mean_links = 0.0;
  double mean_quoted_words = 0.0;
  double mean_words = 0.0;
};

struct CorpusStats {
  // Orientation rows in mainstream, left, right, satire order; orientations
  // without articles are absent.
  std::vector<StatsRow> orientations;
  // Publisher rows grouped by orientation, then ordered by name.
  std::vector<StatsRow> publishers;
  StatsRow total;

  const StatsRow* orientation_row(Orientation orientation) const;
  const StatsRow* publisher_row(std::string_view publisher) const;
};

// Aggregates per publisher, per orientation and overall. Word counts are
// body-paragraph word tokens; quoted words are word tokens inside quoted
// spans. Throws DataError on an empty corpus.
CorpusStats corpus_statistics(const Corpus& corpus);

// Table with one decimal for means, as CSV.
void write_stats_csv(const CorpusStats& stats, std::ostream& out);
nlohmann::json to_json(const CorpusStats& stats);

// -- labels and folds -------------------------------------------------------

enum class VeracityLabel { fake, real, excluded };
std::string_view to_string(VeracityLabel label);

// mostly_true -> real; mixture, mostly_false -> fake; no_factual ->
// excluded. Throws DataError for unrated articles.
VeracityLabel operationalize_veracity(const Article& article);

struct Fold {
  // Indices into the corpus, ascending.
  std::vector<std::size_t> articles;
  // One publisher per orientation, in left, right, mainstream order.
  std::vector<std::string> publishers;
};

// Publisher-disjoint folds: fold i receives the i-th publisher of every
// orientation after a seeded shuffle of each orientation's sorted publisher
// list. k == 1 yields the whole corpus as one fold. Throws DataError when an
// orientation has a publisher count other than k, or for satire articles.
std::vector<Fold> partition_publisher_folds(const Corpus& corpus, std::size_t k,
                                            std::uint64_t seed);

// Pads every group to the size of the largest by appending items drawn
// uniformly with replacement from the group's originals. Throws DataError
// when a group is empty.
template <typename T>
std::vector<std::vector<T>> balance_by_oversampling(std::vector<std::vector<T>> groups,
                                                    std::uint64_t seed);

}  // namespace newsstyle

#include "newsstyle/error.hpp"

namespace newsstyle {

template <typename T>
std::vector<std::vector<T>> balance_by_oversampling(std::vector<std::vector<T>> groups,
                                                    std::uint64_t seed) {
  std::size_t target = 0;
  for (const auto& group : groups) {
    if (group.empty()) throw DataError("cannot oversample an empty group");
    target = std::max(target, group.size());
  }
  for (std::size_t g = 0; g < groups.size(); ++g) {
    auto& group = groups[g];
    const std::size_t originals = group.size();
    Rng rng(derive_seed(seed, g));
    group.reserve(target);
    while (group.size() < target) {
      group.push_back(group[rng.uniform_index(originals)]);
    }
  }
  return groups;
}

}  // namespace newsstyle

#endif  // NEWSSTYLE_CORPUS_HPP_
