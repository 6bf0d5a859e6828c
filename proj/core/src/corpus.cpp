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

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include <nlohmann/json.hpp>

#include "newsstyle/buzzfeed.hpp"
#include "newsstyle/corpus.hpp"
#include "newsstyle/error.hpp"

namespace newsstyle {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 4> kOrientationNames = {"left", "right", "mainstream",
                                                               "satire"};
constexpr std::array<std::string_view, 5> kRatingNames = {"mostly_true", "mixture",
                                                          "mostly_false", "no_factual", "unrated"};

const json& require(const json& record, const char* field) {
  const auto it = record.find(field);
  if (it == record.end()) throw DataError(std::string("missing field '") + field + "'");
  return *it;
}

std::string require_string(const json& record, const char* field) {
  const json& value = require(record, field);
  if (!value.is_string()) throw DataError(std::string("field '") + field + "' must be a string");
  return value.get<std::string>();
}

std::size_t require_index(const json& value, const char* field) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0)) {
    throw DataError(std::string("field '") + field + "' must hold non-negative integers");
  }
  return value.get<std::size_t>();
}

}  // namespace

std::string_view to_string(Orientation orientation) {
  return kOrientationNames[static_cast<std::size_t>(orientation)];
}

std::string_view to_string(Rating rating) { return kRatingNames[static_cast<std::size_t>(rating)]; }

std::optional<Orientation> parse_orientation(std::string_view token) {
  for (std::size_t i = 0; i < kOrientationNames.size(); ++i) {
    if (kOrientationNames[i] == token) return static_cast<Orientation>(i);
  }
  return std::nullopt;
}

std::optional<Rating> parse_rating(std::string_view token) {
  for (std::size_t i = 0; i < kRatingNames.size(); ++i) {
    if (kRatingNames[i] == token) return static_cast<Rating>(i);
  }
  return std::nullopt;
}

void validate_article(const Article& article) {
  if (article.id.empty()) throw DataError("field 'id' is empty");
  if (article.publisher.empty()) throw DataError("field 'publisher' is empty in " + article.id);
  if (article.paragraphs.empty()) throw DataError("field 'paragraphs' is empty in " + article.id);
  for (const QuotedSpan& span : article.quoted_spans) {
    if (span.paragraph >= article.paragraphs.size() || span.begin > span.end ||
        span.end > article.paragraphs[span.paragraph].size()) {
      throw DataError("field 'quoted_spans' has a span outside its paragraph in " + article.id);
    }
  }
  if (article.orientation == Orientation::satire && article.rating != Rating::unrated) {
    throw DataError("field 'rating' must be unrated for satire article " + article.id);
  }
}

json to_json(const Article& article) {
  json links = json::array();
  for (const Link& link : article.links) links.push_back({{"url", link.url}, {"external", link.external}});
  json spans = json::array();
  for (const QuotedSpan& s : article.quoted_spans) spans.push_back({s.paragraph, s.begin, s.end});
  json out = {{"id", article.id},
              {"publisher", article.publisher},
              {"orientation", to_string(article.orientation)},
              {"rating", to_string(article.rating)},
              {"title", article.title},
              {"paragraphs", article.paragraphs},
              {"links", std::move(links)},
              {"quoted_spans", std::move(spans)}};
  if (article.source_url) out["source_url"] = *article.source_url;
  return out;
}

Article article_from_json(const json& record) {
  if (!record.is_object()) throw DataError("record is not a JSON object");
  Article article;
  article.id = require_string(record, "id");
  article.publisher = require_string(record, "publisher");

  const std::string orientation = require_string(record, "orientation");
  const auto parsed_orientation = parse_orientation(orientation);
  if (!parsed_orientation) {
    throw DataError("field 'orientation': unknown token '" + orientation + "'");
  }
  article.orientation = *parsed_orientation;

  const std::string rating = require_string(record, "rating");
  const auto parsed_rating = parse_rating(rating);
  if (!parsed_rating) throw DataError("field 'rating': unknown token '" + rating + "'");
  article.rating = *parsed_rating;

  if (const auto it = record.find("title"); it != record.end()) {
    if (!it->is_string()) throw DataError("field 'title' must be a string");
    article.title = it->get<std::string>();
  }

  const json& paragraphs = require(record, "paragraphs");
  if (!paragraphs.is_array()) throw DataError("field 'paragraphs' must be an array");
  for (const json& p : paragraphs) {
    if (!p.is_string()) throw DataError("field 'paragraphs' must hold strings");
    article.paragraphs.push_back(p.get<std::string>());
  }

  if (const auto it = record.find("links"); it != record.end()) {
    if (!it->is_array()) throw DataError("field 'links' must be an array");
    for (const json& l : *it) {
      if (!l.is_object() || !l.contains("url") || !l["url"].is_string() ||
          !l.contains("external") || !l["external"].is_boolean()) {
        throw DataError("field 'links' entries need a string url and a boolean external");
      }
      article.links.push_back({l["url"].get<std::string>(), l["external"].get<bool>()});
    }
  }

  if (const auto it = record.find("quoted_spans"); it != record.end()) {
    if (!it->is_array()) throw DataError("field 'quoted_spans' must be an array");
    for (const json& s : *it) {
      if (!s.is_array() || s.size() != 3) {
        throw DataError("field 'quoted_spans' entries must be [paragraph, begin, end]");
      }
      article.quoted_spans.push_back({require_index(s[0], "quoted_spans"),
                                      require_index(s[1], "quoted_spans"),
                                      require_index(s[2], "quoted_spans")});
    }
  }

  if (const auto it = record.find("source_url"); it != record.end() && !it->is_null()) {
    if (!it->is_string()) throw DataError("field 'source_url' must be a string");
    article.source_url = it->get<std::string>();
  }

  validate_article(article);
  return article;
}

Corpus read_jsonl(std::istream& in) {
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      corpus.push_back(article_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw DataError("line " + std::to_string(line_no) + ": malformed JSON: " + e.what());
    } catch (const DataError& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return corpus;
}

void write_jsonl(const Corpus& corpus, std::ostream& out) {
  for (const Article& article : corpus) out << to_json(article).dump() << '\n';
}

Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format,
                   const LoadOptions& options) {
  if (format == CorpusFormat::buzzfeed_csv) {
    const auto archive = options.archive_dir.value_or(path.parent_path() / "articles");
    return convert_buzzfeed(path, archive);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read corpus file " + path.string());
  try {
    return read_jsonl(in);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::string_view to_string(VeracityLabel label) {
  switch (label) {
    case VeracityLabel::fake: return "fake";
    case VeracityLabel::real: return "real";
    case VeracityLabel::excluded: return "excluded";
  }
  return "excluded";
}

VeracityLabel operationalize_veracity(const Article& article) {
  switch (article.rating) {
    case Rating::mostly_true: return VeracityLabel::real;
    case Rating::mixture:
    case Rating::mostly_false: return VeracityLabel::fake;
    case Rating::no_factual: return VeracityLabel::excluded;
    case Rating::unrated: break;
  }
  throw DataError("article " + article.id + " is unrated and has no veracity label");
}

std::vector<Fold> partition_publisher_folds(const Corpus& corpus, std::size_t k,
                                            std::uint64_t seed) {
  if (k == 0) throw DataError("fold count must be positive");
  std::map<Orientation, std::set<std::string>> publishers;
  for (const Article& a : corpus) {
    if (a.orientation == Orientation::satire) {
      throw DataError("satire article " + a.id + " cannot enter publisher folds");
    }
    publishers[a.orientation].insert(a.publisher);
  }
  if (k == 1) {
    Fold fold;
    for (std::size_t i = 0; i < corpus.size(); ++i) fold.articles.push_back(i);
    for (const Orientation o : {Orientation::left, Orientation::right, Orientation::mainstream}) {
      if (const auto it = publishers.find(o); it != publishers.end()) {
        fold.publishers.insert(fold.publishers.end(), it->second.begin(), it->second.end());
      }
    }
    return {fold};
  }

  std::vector<Fold> folds(k);
  std::map<std::string, std::size_t> fold_of;
  std::uint64_t stream = 0;
  for (const Orientation o : {Orientation::left, Orientation::right, Orientation::mainstream}) {
    const auto it = publishers.find(o);
    if (it == publishers.end()) continue;
    if (it->second.size() != k) {
      throw DataError("orientation " + std::string(to_string(o)) + " has " +
                      std::to_string(it->second.size()) + " publishers, expected " +
                      std::to_string(k));
    }
    std::vector<std::string> order(it->second.begin(), it->second.end());
    Rng rng(derive_seed(seed, stream++));
    rng.shuffle(std::span<std::string>(order));
    for (std::size_t i = 0; i < k; ++i) {
      folds[i].publishers.push_back(order[i]);
      fold_of[order[i]] = i;
    }
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    folds[fold_of.at(corpus[i].publisher)].articles.push_back(i);
  }
  return folds;
}

}  // namespace newsstyle
