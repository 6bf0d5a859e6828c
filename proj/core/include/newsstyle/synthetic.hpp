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

#ifndef NEWSSTYLE_SYNTHETIC_HPP_
#define NEWSSTYLE_SYNTHETIC_HPP_

#include <cstddef>
#include <cstdint>

#include "newsstyle/corpus.hpp"

namespace newsstyle {

// Generator for small news-like corpora with the nine-publisher layout of the
// fact-checked corpus. Orientations differ in punctuation, quoting,
// intensifiers, paragraph length and topic words; fake-rated articles lean
// further toward the hyperpartisan style. Used by tests, benchmarks and
// demos; it carries no claim about real news.
struct SyntheticCorpusConfig {
  std::size_t articles_per_publisher = 20;
  std::size_t min_paragraphs = 3;
  std::size_t max_paragraphs = 7;
  // 0 gives indistinguishable orientations, 1 the default separation.
  double style_strength = 1.0;
  std::uint64_t seed = 1;
};

Corpus make_synthetic_corpus(const SyntheticCorpusConfig& config = {});

// `per_class` satire articles (orientation satire, unrated) followed by
// `per_class` real mainstream articles rated mostly_true.
Corpus make_synthetic_satire_corpus(std::size_t per_class, std::uint64_t seed = 1);

}  // namespace newsstyle

#endif  // NEWSSTYLE_SYNTHETIC_HPP_
