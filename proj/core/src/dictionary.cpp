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
#include <fstream>
#include <sstream>

#include "newsstyle/csv.hpp"
#include "newsstyle/error.hpp"
#include "newsstyle/features.hpp"

namespace newsstyle {

Dictionaries::Dictionaries(std::vector<std::string> categories,
                           std::unordered_map<std::string, std::vector<std::uint16_t>> flags)
    : categories_(std::move(categories)), flags_(std::move(flags)) {}

Dictionaries Dictionaries::parse_inquirer_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  csv::Reader reader(in);
  const auto header = reader.next();
  if (!header || header->size() < 3) throw DataError("dictionary file has no usable header");
  std::string first = (*header)[0];
  if (first.rfind("\xEF\xBB\xBF", 0) == 0) first.erase(0, 3);
  if (first != "Entry" || (*header)[1] != "Source") {
    throw DataError("dictionary header must start with Entry,Source");
  }
  std::size_t end = header->size();
  for (std::size_t i = 2; i < header->size(); ++i) {
    if ((*header)[i] == "Othtags" || (*header)[i] == "Defined") {
      end = i;
      break;
    }
  }
  std::vector<std::string> categories(header->begin() + 2, header->begin() + static_cast<std::ptrdiff_t>(end));
  if (categories.empty()) throw DataError("dictionary file defines no categories");
  if (categories.size() > 65535) throw DataError("too many dictionary categories");

  std::unordered_map<std::string, std::vector<std::uint16_t>> flags;
  while (auto row = reader.next()) {
    if (row->empty() || (row->size() == 1 && (*row)[0].empty())) continue;
    std::string entry = (*row)[0];
    if (const std::size_t hash = entry.find('#'); hash != std::string::npos) entry.resize(hash);
    entry = normalize_word(entry);
    if (entry.empty()) {
      throw DataError("dictionary line " + std::to_string(reader.record_line()) + " has no entry");
    }
    auto& word_flags = flags[entry];
    for (std::size_t c = 0; c < categories.size(); ++c) {
      const std::size_t col = c + 2;
      if (col < row->size() && !(*row)[col].empty()) word_flags.push_back(static_cast<std::uint16_t>(c));
    }
  }
  for (auto& [word, f] : flags) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  return Dictionaries(std::move(categories), std::move(flags));
}

Dictionaries Dictionaries::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read dictionary file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_inquirer_csv(buffer.str());
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

const Dictionaries& Dictionaries::standard() {
  static const Dictionaries dict = parse_inquirer_csv(data::inquirer_sample());
  return dict;
}

std::span<const std::uint16_t> Dictionaries::lookup(std::string_view word) const {
  const auto it = flags_.find(std::string(word));
  if (it == flags_.end()) return {};
  return it->second;
}

std::vector<double> dictionary_features(const TokenizedDocument& doc, const Dictionaries& dict) {
  std::vector<double> values(dict.categories().size(), 0.0);
  std::size_t words = 0;
  for (const Token& token : doc.tokens) {
    if (!token.is_word()) continue;
    ++words;
    for (const std::uint16_t c : dict.lookup(normalize_word(token.surface))) values[c] += 1.0;
  }
  if (words > 0) {
    for (double& v : values) v /= static_cast<double>(words);
  }
  return values;
}

DomainFeatures domain_features(const Article& article, const TokenizedDocument& doc) {
  DomainFeatures f;
  const double words = static_cast<double>(doc.word_count());
  if (words > 0) {
    f.quoted_ratio = static_cast<double>(count_quoted_words(doc, article.quoted_spans)) / words;
  }
  std::size_t external = 0;
  for (const Link& link : article.links) external += link.external ? 1 : 0;
  f.external_link_ratio =
      static_cast<double>(external) / static_cast<double>(std::max<std::size_t>(1, article.links.size()));
  f.paragraph_count = static_cast<double>(article.paragraphs.size());
  if (!article.paragraphs.empty()) f.mean_paragraph_length = words / f.paragraph_count;
  return f;
}

}  // namespace newsstyle
