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

#include <benchmark/benchmark.h>

#include "newsstyle/features.hpp"
#include "newsstyle/synthetic.hpp"

namespace newsstyle {
namespace {

const Corpus& corpus() {
  static const Corpus c = make_synthetic_corpus({.articles_per_publisher = 12, .seed = 3});
  return c;
}

void BM_Tokenize(benchmark::State& state) {
  const Tokenizer& tokenizer = Tokenizer::standard();
  std::size_t bytes = 0;
  for (const Article& a : corpus()) {
    for (const auto& p : a.paragraphs) bytes += p.size();
  }
  for (auto _ : state) {
    for (const Article& a : corpus()) benchmark::DoNotOptimize(tokenizer.tokenize(a));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * bytes));
}
BENCHMARK(BM_Tokenize);

void BM_TagAndReadability(benchmark::State& state) {
  std::vector<TokenizedDocument> docs;
  for (const Article& a : corpus()) docs.push_back(Tokenizer::standard().tokenize(a));
  for (auto _ : state) {
    for (TokenizedDocument doc : docs) {
      LexiconTagger::standard().tag(doc);
      benchmark::DoNotOptimize(readability_scores(doc));
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * docs.size()));
}
BENCHMARK(BM_TagAndReadability);

void BM_ExtractProfile(benchmark::State& state) {
  const auto model = static_cast<FeatureModel>(state.range(0));
  const ExtractionConfig config = ExtractionConfig::for_model(model);
  const FeatureResources resources = FeatureResources::standard();
  for (auto _ : state) {
    for (const Article& a : corpus()) benchmark::DoNotOptimize(extract_profile(a, config, resources));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * corpus().size()));
  state.SetLabel(std::string(to_string(model)));
}
BENCHMARK(BM_ExtractProfile)->Arg(0)->Arg(1);

void BM_BuildVocabulary(benchmark::State& state) {
  FeatureSpace space;
  const auto profiles = extract_profiles(corpus(), ExtractionConfig::for_model(FeatureModel::style),
                                         FeatureResources::standard(), space, 1);
  std::vector<const DocumentProfile*> docs;
  std::vector<std::string> categories;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    docs.push_back(&profiles[i]);
    categories.emplace_back(to_string(corpus()[i].orientation));
  }
  for (auto _ : state) benchmark::DoNotOptimize(build_vocabulary(docs, categories, space));
}
BENCHMARK(BM_BuildVocabulary);

}  // namespace
}  // namespace newsstyle
