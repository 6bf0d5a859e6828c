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

#ifndef NEWSSTYLE_BUZZFEED_HPP_
#define NEWSSTYLE_BUZZFEED_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "newsstyle/corpus.hpp"

namespace newsstyle {

// Text pulled from one archived article page.
struct ExtractedPage {
  std::string title;
  std::vector<std::string> paragraphs;
  std::vector<std::string> links;  // hrefs of anchors inside paragraphs
  std::optional<std::string> canonical_url;
};

// Heuristic extraction: <title> (or the first <h1>), the text of every <p>
// with at least one word, anchors inside those paragraphs, and the canonical
// or og:url link. Entities are decoded; scripts and styles are skipped.
ExtractedPage extract_article_html(std::string_view html);

// Archive file stem for a post URL: FNV-1a 64 of the URL as 16 hex digits.
std::string archive_key(std::string_view post_url);

// Maps BuzzFeed fact-check tokens ("mostly true", "mixture of true and
// false", "mostly false", "no factual content"; "mainstream", "left",
// "right").
std::optional<Rating> parse_buzzfeed_rating(std::string_view token);
std::optional<Orientation> parse_buzzfeed_category(std::string_view token);

// Registrable domain of the nine fact-checked publishers, by page name.
std::optional<std::string> known_publisher_domain(std::string_view page);

struct ConversionReport {
  std::size_t records = 0;
  std::size_t converted = 0;
  std::size_t missing_archive = 0;
  std::size_t without_text = 0;
};

// Reads the published annotation CSV (account_id, post_id, Category, Page,
// Post URL, Date Published, Post Type, Rating, ...) and, for every row, the
// archived page <archive_dir>/<archive_key(Post URL)>.html. Rows without an
// archived page or without body text are skipped and counted. Quote spans and
// link externality are computed here. Throws DataError for a missing column
// or an unknown rating/category token, naming the CSV line.
Corpus convert_buzzfeed(const std::filesystem::path& csv_path,
                        const std::filesystem::path& archive_dir,
                        ConversionReport* report = nullptr);

}  // namespace newsstyle

#endif  // NEWSSTYLE_BUZZFEED_HPP_
