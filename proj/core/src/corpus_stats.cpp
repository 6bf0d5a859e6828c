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

#include <cstdio>
#include <map>
#include <ostream>

#include <nlohmann/json.hpp>

#include "newsstyle/corpus.hpp"
#include "newsstyle/csv.hpp"
#include "newsstyle/error.hpp"
#include "newsstyle/textproc.hpp"

namespace newsstyle {
namespace {

constexpr std::array<Orientation, 4> kTableOrder = {Orientation::mainstream, Orientation::left,
                                                    Orientation::right, Orientation::satire};

struct Sums {
  std::array<std::size_t, 5> ratings{};
  std::size_t articles = 0;
  double paragraphs = 0;
  double external_links = 0;
  double links = 0;
  double quoted_words = 0;
  double words = 0;

  void add(const Sums& o) {
    for (std::size_t i = 0; i < ratings.size(); ++i) ratings[i] += o.ratings[i];
    articles += o.articles;
    paragraphs += o.paragraphs;
    external_links += o.external_links;
    links += o.links;
    quoted_words += o.quoted_words;
    words += o.words;
  }

  StatsRow row(std::string name, Orientation orientation) const {
    StatsRow r;
    r.name = std::move(name);
    r.orientation = orientation;
    r.rating_counts = ratings;
    r.articles = articles;
    const double n = static_cast<double>(articles);
    r.mean_paragraphs = paragraphs / n;
    r.mean_external_links = external_links / n;
    r.mean_links = links / n;
    r.mean_quoted_words = quoted_words / n;
    r.mean_words = words / n;
    return r;
  }
};

std::string one_decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", value);
  return buf;
}

void write_row(std::ostream& out, std::string_view level, const StatsRow& row) {
  std::vector<std::string> fields{std::string(level), row.name};
  for (const std::size_t c : row.rating_counts) fields.push_back(std::to_string(c));
  fields.push_back(std::to_string(row.articles));
  for (const double m : {row.mean_paragraphs, row.mean_external_links, row.mean_links,
                         row.mean_quoted_words, row.mean_words}) {
    fields.push_back(one_decimal(m));
  }
  csv::write_row(out, fields);
}

nlohmann::json row_json(const StatsRow& row) {
  nlohmann::json ratings = nlohmann::json::object();
  for (const Rating r : kAllRatings) {
    ratings[std::string(to_string(r))] = row.rating_counts[static_cast<std::size_t>(r)];
  }
  return {{"name", row.name},
          {"orientation", to_string(row.orientation)},
          {"ratings", std::move(ratings)},
          {"articles", row.articles},
          {"mean_paragraphs", row.mean_paragraphs},
          {"mean_external_links", row.mean_external_links},
          {"mean_links", row.mean_links},
          {"mean_quoted_words", row.mean_quoted_words},
          {"mean_words", row.mean_words}};
}

}  // namespace

const StatsRow* CorpusStats::orientation_row(Orientation orientation) const {
  for (const StatsRow& row : orientations) {
    if (row.orientation == orientation) return &row;
  }
  return nullptr;
}

const StatsRow* CorpusStats::publisher_row(std::string_view publisher) const {
  for (const StatsRow& row : publishers) {
    if (row.name == publisher) return &row;
  }
  return nullptr;
}

CorpusStats corpus_statistics(const Corpus& corpus) {
  if (corpus.empty()) throw DataError("cannot summarize an empty corpus");
  const Tokenizer& tokenizer = Tokenizer::standard();
  std::map<Orientation, std::map<std::string, Sums>> grouped;
  for (const Article& article : corpus) {
    Sums& s = grouped[article.orientation][article.publisher];
    const TokenizedDocument doc = tokenizer.tokenize(article);
    s.ratings[static_cast<std::size_t>(article.rating)] += 1;
    s.articles += 1;
    s.paragraphs += static_cast<double>(article.paragraphs.size());
    for (const Link& link : article.links) s.external_links += link.external ? 1 : 0;
    s.links += static_cast<double>(article.links.size());
    s.quoted_words += static_cast<double>(count_quoted_words(doc, article.quoted_spans));
    s.words += static_cast<double>(doc.word_count());
  }

  CorpusStats stats;
  Sums total;
  for (const Orientation o : kTableOrder) {
    const auto it = grouped.find(o);
    if (it == grouped.end()) continue;
    Sums orientation_sums;
    for (const auto& [publisher, sums] : it->second) {
      stats.publishers.push_back(sums.row(publisher, o));
      orientation_sums.add(sums);
    }
    stats.orientations.push_back(orientation_sums.row(std::string(to_string(o)), o));
    total.add(orientation_sums);
  }
  stats.total = total.row("total", Orientation::mainstream);
  return stats;
}

void write_stats_csv(const CorpusStats& stats, std::ostream& out) {
  csv::write_row(out, {"level", "name", "true", "mix", "false", "n/a", "unrated", "articles",
                       "paragraphs", "links_external", "links_all", "words_quoted",
                       "words_all"});
  for (const StatsRow& orientation : stats.orientations) {
    write_row(out, "orientation", orientation);
    for (const StatsRow& publisher : stats.publishers) {
      if (publisher.orientation == orientation.orientation) write_row(out, "publisher", publisher);
    }
  }
  write_row(out, "total", stats.total);
}

nlohmann::json to_json(const CorpusStats& stats) {
  nlohmann::json out = {{"orientations", nlohmann::json::array()},
                        {"publishers", nlohmann::json::array()},
                        {"total", row_json(stats.total)}};
  for (const StatsRow& row : stats.orientations) out["orientations"].push_back(row_json(row));
  for (const StatsRow& row : stats.publishers) out["publishers"].push_back(row_json(row));
  out["total"].erase("orientation");
  return out;
}

}  // namespace newsstyle
