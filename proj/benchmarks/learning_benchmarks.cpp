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

#include "newsstyle/forest.hpp"
#include "newsstyle/linear.hpp"
#include "newsstyle/random.hpp"
#include "newsstyle/unmasking.hpp"

namespace newsstyle {
namespace {

struct Data {
  std::vector<FeatureVector> x;
  std::vector<std::string> labels;
  std::vector<int> signs;
};

// Sparse two-class data: 5% density over `dimension` features, class signal
// in the first ten.
Data sparse_data(std::size_t n, std::size_t dimension) {
  Rng rng(11);
  Data d;
  for (std::size_t i = 0; i < n; ++i) {
    const bool positive = i % 2 == 0;
    FeatureVector v;
    v.dimension = dimension;
    for (std::uint32_t f = 0; f < dimension; ++f) {
      if (rng.uniform01() >= 0.05 && f >= 10) continue;
      double value = rng.uniform01();
      if (f < 10 && positive) value += 0.5;
      v.indices.push_back(f);
      v.values.push_back(value);
    }
    d.x.push_back(std::move(v));
    d.labels.push_back(positive ? "a" : "b");
    d.signs.push_back(positive ? 1 : -1);
  }
  return d;
}

void BM_TrainForest(benchmark::State& state) {
  const Data d = sparse_data(static_cast<std::size_t>(state.range(0)), 2000);
  ForestConfig config;
  config.trees = 32;
  for (auto _ : state) benchmark::DoNotOptimize(train_forest(d.x, d.labels, config, 1));
}
BENCHMARK(BM_TrainForest)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

void BM_TrainLinear(benchmark::State& state) {
  const Data d = sparse_data(static_cast<std::size_t>(state.range(0)), 2000);
  LinearConfig config;
  config.epochs = 100;
  for (auto _ : state) benchmark::DoNotOptimize(train_linear(d.x, d.signs, config));
}
BENCHMARK(BM_TrainLinear)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

std::vector<WordBag> bags(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<WordBag> out;
  for (std::size_t i = 0; i < count; ++i) {
    WordBag bag;
    for (int w = 0; w < 300; ++w) {
      const double u = rng.uniform01();
      ++bag.counts["w" + std::to_string(static_cast<int>(u * u * 600))];
    }
    bag.total = 300;
    out.push_back(std::move(bag));
  }
  return out;
}

void BM_UnmaskPair(benchmark::State& state) {
  const auto a = bags(1, 100);
  const auto b = bags(2, 100);
  UnmaskingConfig config;
  config.runs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(unmask_pair(a, b, config, "a", "b", 1));
}
BENCHMARK(BM_UnmaskPair)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace newsstyle
