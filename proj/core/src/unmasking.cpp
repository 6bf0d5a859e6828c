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
#include <cmath>
#include <map>

#include "newsstyle/error.hpp"
#include "newsstyle/parallel.hpp"
#include "newsstyle/random.hpp"
#include "newsstyle/unmasking.hpp"

namespace newsstyle {
namespace {

// Rolling shuffled stream over one side. Draws continue across runs and
// reshuffle when exhausted, skipping documents already taken in the run.
class SideSampler {
 public:
  SideSampler(std::size_t size, std::uint64_t seed) : rng_(seed), order_(size) {
    for (std::size_t i = 0; i < size; ++i) order_[i] = i;
    rng_.shuffle(std::span<std::size_t>(order_));
  }

  std::vector<std::size_t> draw(std::size_t count) {
    count = std::min(count, order_.size());
    std::vector<std::size_t> taken;
    std::vector<bool> used(order_.size(), false);
    while (taken.size() < count) {
      if (next_ == order_.size()) {
        rng_.shuffle(std::span<std::size_t>(order_));
        next_ = 0;
        // Move documents already in this run to the back.
        std::stable_partition(order_.begin(), order_.end(), [&](std::size_t i) { return !used[i]; });
      }
      const std::size_t doc = order_[next_++];
      if (used[doc]) continue;
      used[doc] = true;
      taken.push_back(doc);
    }
    return taken;
  }

 private:
  Rng rng_;
  std::vector<std::size_t> order_;
  std::size_t next_ = 0;
};

struct RunResult {
  std::vector<double> accuracy;
  std::vector<std::vector<std::string>> eliminated;
};

// Dense z-standardized vectors over `active` columns, using statistics of
// the rows in `fit`.
std::vector<FeatureVector> standardized(const std::vector<std::vector<double>>& rows,
                                        const std::vector<std::size_t>& active,
                                        const std::vector<std::size_t>& fit,
                                        const std::vector<std::size_t>& apply) {
  std::vector<double> mean(active.size(), 0.0);
  std::vector<double> scale(active.size(), 1.0);
  for (std::size_t j = 0; j < active.size(); ++j) {
    double sum = 0.0;
    double sq = 0.0;
    for (const std::size_t r : fit) {
      const double v = rows[r][active[j]];
      sum += v;
      sq += v * v;
    }
    const double n = static_cast<double>(fit.size());
    mean[j] = sum / n;
    const double var = std::max(0.0, sq / n - mean[j] * mean[j]);
    scale[j] = var > 0.0 ? std::sqrt(var) : 1.0;
  }
  std::vector<FeatureVector> out;
  out.reserve(apply.size());
  for (const std::size_t r : apply) {
    FeatureVector v;
    v.dimension = active.size();
    for (std::size_t j = 0; j < active.size(); ++j) {
      const double z = (rows[r][active[j]] - mean[j]) / scale[j];
      if (z != 0.0) {
        v.indices.push_back(static_cast<std::uint32_t>(j));
        v.values.push_back(z);
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

RunResult run_once(const std::vector<const WordBag*>& docs, const std::vector<int>& labels,
                   const UnmaskingConfig& config, std::uint64_t seed) {
  // Run vocabulary: highest collection frequency, ties by word.
  std::map<std::string, std::size_t> collection;
  for (const WordBag* bag : docs) {
    for (const auto& [word, count] : bag->counts) collection[word] += count;
  }
  std::vector<std::pair<std::string, std::size_t>> ranked(collection.begin(), collection.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  const std::size_t needed = config.iterations * 2 * config.eliminate_per_side;
  if (ranked.size() < needed) {
    throw DataError("unmasking sample has " + std::to_string(ranked.size()) +
                    " distinct words; the eliminations need " + std::to_string(needed));
  }
  ranked.resize(std::min(ranked.size(), config.vocabulary_size));
  std::vector<std::string> words;
  for (const auto& [word, count] : ranked) words.push_back(word);

  std::vector<std::vector<double>> rows(docs.size(), std::vector<double>(words.size(), 0.0));
  for (std::size_t d = 0; d < docs.size(); ++d) {
    if (docs[d]->total == 0) continue;
    for (std::size_t j = 0; j < words.size(); ++j) {
      const auto it = docs[d]->counts.find(words[j]);
      if (it != docs[d]->counts.end()) {
        rows[d][j] = static_cast<double>(it->second) / static_cast<double>(docs[d]->total);
      }
    }
  }

  // Stratified fold assignment, fixed for the run.
  Rng rng(seed);
  std::vector<std::size_t> fold_of(docs.size());
  std::size_t per_side = docs.size();
  for (const int side : {1, -1}) {
    std::vector<std::size_t> members;
    for (std::size_t d = 0; d < docs.size(); ++d) {
      if (labels[d] == side) members.push_back(d);
    }
    per_side = std::min(per_side, members.size());
    rng.shuffle(std::span<std::size_t>(members));
    for (std::size_t i = 0; i < members.size(); ++i) fold_of[members[i]] = i % config.cv_folds;
  }
  const std::size_t folds = std::min(config.cv_folds, per_side);
  for (std::size_t& f : fold_of) f %= folds;

  std::vector<std::size_t> active(words.size());
  for (std::size_t j = 0; j < active.size(); ++j) active[j] = j;
  std::vector<std::size_t> everyone(docs.size());
  for (std::size_t d = 0; d < docs.size(); ++d) everyone[d] = d;

  RunResult result;
  for (std::size_t iteration = 0; iteration < config.iterations; ++iteration) {
    std::size_t correct = 0;
    for (std::size_t f = 0; f < folds; ++f) {
      std::vector<std::size_t> train;
      std::vector<std::size_t> test;
      for (std::size_t d = 0; d < docs.size(); ++d) (fold_of[d] == f ? test : train).push_back(d);
      if (test.empty()) continue;
      std::vector<int> y;
      for (const std::size_t d : train) y.push_back(labels[d]);
      const auto x_train = standardized(rows, active, train, train);
      const auto x_test = standardized(rows, active, train, test);
      const LinearModel model = train_linear(x_train, y, config.linear);
      for (std::size_t t = 0; t < test.size(); ++t) {
        if (model.predict(x_test[t]) == labels[test[t]]) ++correct;
      }
    }
    result.accuracy.push_back(static_cast<double>(correct) / static_cast<double>(docs.size()));
    if (iteration + 1 == config.iterations) break;

    const auto x_all = standardized(rows, active, everyone, everyone);
    const LinearModel model = train_linear(x_all, labels, config.linear);
    std::vector<std::size_t> order(active.size());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    auto by_weight = [&](bool descending) {
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double wa = model.weights[a];
        const double wb = model.weights[b];
        if (wa != wb) return descending ? wa > wb : wa < wb;
        return words[active[a]] < words[active[b]];
      });
    };
    std::vector<bool> drop(active.size(), false);
    std::vector<std::string> removed;
    by_weight(true);
    for (std::size_t i = 0; i < config.eliminate_per_side; ++i) {
      drop[order[i]] = true;
      removed.push_back(words[active[order[i]]]);
    }
    by_weight(false);
    for (std::size_t i = 0, taken = 0; i < order.size() && taken < config.eliminate_per_side; ++i) {
      if (drop[order[i]]) continue;
      drop[order[i]] = true;
      removed.push_back(words[active[order[i]]]);
      ++taken;
    }
    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < active.size(); ++j) {
      if (!drop[j]) kept.push_back(active[j]);
    }
    active.swap(kept);
    result.eliminated.push_back(std::move(removed));
  }
  return result;
}

}  // namespace

void UnmaskingConfig::validate() const {
  if (docs_per_side == 0 || runs == 0 || vocabulary_size == 0 || eliminate_per_side == 0 ||
      iterations == 0) {
    throw UsageError("unmasking counts must be positive");
  }
  if (cv_folds < 2) throw UsageError("unmasking needs at least two inner folds");
  if (iterations * 2 * eliminate_per_side > vocabulary_size) {
    throw UsageError("unmasking eliminates more features than the vocabulary holds");
  }
}

nlohmann::json UnmaskingConfig::to_json() const {
  return {{"docs_per_side", docs_per_side},
          {"runs", runs},
          {"vocabulary_size", vocabulary_size},
          {"eliminate_per_side", eliminate_per_side},
          {"iterations", iterations},
          {"cv_folds", cv_folds},
          {"seed", seed},
          {"linear", {{"lambda", linear.lambda}, {"epochs", linear.epochs}}}};
}

WordBag make_word_bag(const TokenizedDocument& doc) {
  WordBag bag;
  for (const Token& token : doc.tokens) {
    if (!token.is_word()) continue;
    ++bag.counts[normalize_word(token.surface)];
    ++bag.total;
  }
  return bag;
}

UnmaskingCurve unmask_pair(std::span<const WordBag> side_a, std::span<const WordBag> side_b,
                           const UnmaskingConfig& config, std::string label_a, std::string label_b,
                           std::size_t threads) {
  config.validate();
  if (side_a.empty() || side_b.empty()) {
    throw DataError("unmasking needs documents on both sides (" + label_a + ", " + label_b + ")");
  }
  // Samples are drawn up front so that runs can execute in any order.
  SideSampler sampler_a(side_a.size(), derive_seed(config.seed, 0xA));
  SideSampler sampler_b(side_b.size(), derive_seed(config.seed, 0xB));
  std::vector<std::vector<const WordBag*>> run_docs(config.runs);
  std::vector<std::vector<int>> run_labels(config.runs);
  for (std::size_t r = 0; r < config.runs; ++r) {
    for (const std::size_t i : sampler_a.draw(config.docs_per_side)) {
      run_docs[r].push_back(&side_a[i]);
      run_labels[r].push_back(1);
    }
    for (const std::size_t i : sampler_b.draw(config.docs_per_side)) {
      run_docs[r].push_back(&side_b[i]);
      run_labels[r].push_back(-1);
    }
  }

  std::vector<RunResult> results(config.runs);
  parallel_for(
      config.runs,
      [&](std::size_t r) {
        results[r] = run_once(run_docs[r], run_labels[r], config, derive_seed(config.seed, 100 + r));
      },
      threads);

  UnmaskingCurve curve;
  curve.label_a = std::move(label_a);
  curve.label_b = std::move(label_b);
  curve.config = config;
  curve.mean.assign(config.iterations, 0.0);
  for (RunResult& r : results) {
    for (std::size_t i = 0; i < config.iterations; ++i) curve.mean[i] += r.accuracy[i];
    curve.runs.push_back(std::move(r.accuracy));
    curve.eliminated.push_back(std::move(r.eliminated));
  }
  for (double& m : curve.mean) m /= static_cast<double>(config.runs);
  return curve;
}

double curve_slope_statistic(std::span<const double> curve, std::size_t begin,
                             std::optional<std::size_t> end) {
  const std::size_t stop = std::min(end.value_or(curve.size()), curve.size());
  if (stop < begin + 2) throw DataError("slope statistic needs at least two curve points");
  return (curve[stop - 1] - curve[begin]) / static_cast<double>(stop - 1 - begin);
}

double curve_slope_statistic(const UnmaskingCurve& curve, std::size_t begin,
                             std::optional<std::size_t> end) {
  return curve_slope_statistic(std::span<const double>(curve.mean), begin, end);
}

nlohmann::json to_json(const UnmaskingCurve& curve) {
  return {{"label_a", curve.label_a},
          {"label_b", curve.label_b},
          {"config", curve.config.to_json()},
          {"runs", curve.runs},
          {"mean", curve.mean},
          {"slope", curve.mean.size() >= 2 ? nlohmann::json(curve_slope_statistic(curve))
                                           : nlohmann::json(nullptr)},
          {"eliminated", curve.eliminated}};
}

}  // namespace newsstyle
