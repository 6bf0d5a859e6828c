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

#ifndef NEWSSTYLE_TESTS_SUPPORT_HPP_
#define NEWSSTYLE_TESTS_SUPPORT_HPP_

#include <array>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "newsstyle/corpus.hpp"
#include "newsstyle/random.hpp"
#include "newsstyle/unmasking.hpp"

namespace newsstyle::testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(NEWSSTYLE_FIXTURE_DIR) / name;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline nlohmann::json read_json(const std::filesystem::path& path) {
  return nlohmann::json::parse(read_file(path));
}

// Publisher layout and rating counts of the fact-checked corpus
// (true, mix, false, n/a), with placeholder text.
struct PublisherCounts {
  const char* name;
  Orientation orientation;
  std::array<std::size_t, 4> ratings;
};

inline constexpr std::array<PublisherCounts, 9> kFactCheckedLayout = {{
    {"ABC News", Orientation::mainstream, {90, 2, 0, 3}},
    {"CNN", Orientation::mainstream, {295, 4, 0, 8}},
    {"Politico", Orientation::mainstream, {421, 2, 0, 1}},
    {"Addicting Info", Orientation::left, {95, 25, 8, 7}},
    {"Occupy Democrats", Orientation::left, {59, 25, 7, 0}},
    {"The Other 98%", Orientation::left, {28, 1, 0, 1}},
    {"Eagle Rising", Orientation::right, {106, 47, 25, 36}},
    {"Freedom Daily", Orientation::right, {49, 24, 22, 4}},
    {"Right Wing News", Orientation::right, {121, 82, 25, 4}},
}};

// Articles with the class distribution of the fact-checked corpus. Text is a
// few seeded words so that every pipeline stage has input.
inline Corpus fact_checked_shaped_corpus(std::uint64_t seed = 1) {
  static constexpr std::array<const char*, 12> kWords = {
      "the", "report", "said", "officials", "and", "a", "new", "plan", "was", "of", "vote", "today"};
  constexpr std::array<Rating, 4> kRatings = {Rating::mostly_true, Rating::mixture,
                                              Rating::mostly_false, Rating::no_factual};
  Rng rng(seed);
  Corpus corpus;
  for (const auto& p : kFactCheckedLayout) {
    std::size_t n = 0;
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t i = 0; i < p.ratings[r]; ++i) {
        Article a;
        a.id = std::string(p.name) + "-" + std::to_string(n++);
        a.publisher = p.name;
        a.orientation = p.orientation;
        a.rating = kRatings[r];
        std::string text = "The";
        for (int w = 0; w < 12; ++w) text += std::string(" ") + kWords[rng.uniform_index(kWords.size())];
        a.paragraphs = {text + "."};
        corpus.push_back(std::move(a));
      }
    }
  }
  return corpus;
}

// Bag of words drawn from a shared vocabulary of `shared` words ("w0"...)
// with a skewed distribution, plus `markers_per_doc` draws from `markers`.
inline WordBag random_bag(Rng& rng, std::size_t shared, std::size_t length,
                          const std::vector<std::string>& markers, std::size_t markers_per_doc) {
  WordBag bag;
  for (std::size_t i = 0; i < length; ++i) {
    const double u = rng.uniform01();
    ++bag.counts["w" + std::to_string(static_cast<std::size_t>(u * u * static_cast<double>(shared)))];
  }
  for (std::size_t i = 0; i < markers_per_doc && !markers.empty(); ++i) {
    ++bag.counts[markers[rng.uniform_index(markers.size())]];
  }
  bag.total = length + (markers.empty() ? 0 : markers_per_doc);
  return bag;
}

inline std::vector<std::string> marker_words(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline std::vector<WordBag> random_bags(std::uint64_t seed, std::size_t count, std::size_t shared,
                                        std::size_t length,
                                        const std::vector<std::string>& markers = {},
                                        std::size_t markers_per_doc = 0) {
  Rng rng(seed);
  std::vector<WordBag> bags;
  for (std::size_t i = 0; i < count; ++i) {
    bags.push_back(random_bag(rng, shared, length, markers, markers_per_doc));
  }
  return bags;
}

}  // namespace newsstyle::testing

#endif  // NEWSSTYLE_TESTS_SUPPORT_HPP_
