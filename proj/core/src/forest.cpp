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
#include <numeric>

#include "newsstyle/error.hpp"
#include "newsstyle/forest.hpp"
#include "newsstyle/parallel.hpp"
#include "newsstyle/random.hpp"

namespace newsstyle {
namespace {

// Row-major dense copy of the training vectors.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<float> data;

  float at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

DenseMatrix densify(std::span<const FeatureVector> x, std::size_t dim) {
  DenseMatrix m;
  m.rows = x.size();
  m.cols = dim;
  m.data.assign(m.rows * m.cols, 0.0F);
  for (std::size_t r = 0; r < x.size(); ++r) {
    for (std::size_t k = 0; k < x[r].indices.size(); ++k) {
      m.data[r * dim + x[r].indices[k]] = static_cast<float>(x[r].values[k]);
    }
  }
  return m;
}

std::vector<float> densify_one(const FeatureVector& x) {
  std::vector<float> dense(x.dimension, 0.0F);
  for (std::size_t k = 0; k < x.indices.size(); ++k) {
    dense[x.indices[k]] = static_cast<float>(x.values[k]);
  }
  return dense;
}

double gini_sum(const std::vector<std::size_t>& counts, std::size_t total) {
  // total * gini, which keeps child impurities additive.
  if (total == 0) return 0.0;
  double sq = 0.0;
  for (const std::size_t c : counts) sq += static_cast<double>(c) * static_cast<double>(c);
  return static_cast<double>(total) - sq / static_cast<double>(total);
}

struct Split {
  bool valid = false;
  std::size_t feature = 0;
  float threshold = 0.0F;
  double impurity = 0.0;
};

class TreeBuilder {
 public:
  TreeBuilder(const DenseMatrix& x, std::span<const std::size_t> y, std::size_t classes,
              const ForestConfig& config, std::size_t mtry, Rng& rng)
      : x_(x), y_(y), classes_(classes), config_(config), mtry_(mtry), rng_(rng) {
    features_.resize(x.cols);
    std::iota(features_.begin(), features_.end(), std::size_t{0});
  }

  DecisionTree build(std::vector<std::size_t> samples) {
    DecisionTree tree;
    grow(tree, samples, 0);
    return tree;
  }

 private:
  std::int32_t grow(DecisionTree& tree, std::vector<std::size_t>& samples, std::size_t depth) {
    const auto node_index = static_cast<std::int32_t>(tree.nodes.size());
    tree.nodes.emplace_back();

    std::vector<std::size_t> counts(classes_, 0);
    for (const std::size_t s : samples) ++counts[y_[s]];
    const bool pure =
        std::count_if(counts.begin(), counts.end(), [](std::size_t c) { return c > 0; }) <= 1;
    const bool depth_reached = config_.max_depth != 0 && depth >= config_.max_depth;
    Split split;
    if (!pure && !depth_reached && samples.size() >= std::max<std::size_t>(2, config_.min_samples_split)) {
      split = find_split(samples, counts);
    }
    if (!split.valid) {
      TreeNode& leaf = tree.nodes[static_cast<std::size_t>(node_index)];
      leaf.distribution.resize(classes_);
      for (std::size_t c = 0; c < classes_; ++c) {
        leaf.distribution[c] = static_cast<double>(counts[c]) / static_cast<double>(samples.size());
      }
      return node_index;
    }

    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    for (const std::size_t s : samples) {
      (x_.at(s, split.feature) <= split.threshold ? left : right).push_back(s);
    }
    samples.clear();
    samples.shrink_to_fit();
    const std::int32_t l = grow(tree, left, depth + 1);
    const std::int32_t r = grow(tree, right, depth + 1);
    TreeNode& node = tree.nodes[static_cast<std::size_t>(node_index)];
    node.feature = static_cast<std::int32_t>(split.feature);
    node.threshold = split.threshold;
    node.left = l;
    node.right = r;
    return node_index;
  }

  // Draws features without replacement; after mtry draws, stops at the first
  // valid split found.
  Split find_split(const std::vector<std::size_t>& samples, const std::vector<std::size_t>& counts) {
    Split best_any;
    std::vector<std::pair<float, std::size_t>> column(samples.size());
    std::size_t drawn = 0;
    for (std::size_t remaining = features_.size(); remaining > 0; --remaining) {
      if (drawn >= mtry_ && best_any.valid) break;
      const std::size_t pick = rng_.uniform_index(remaining);
      std::swap(features_[pick], features_[remaining - 1]);
      const std::size_t f = features_[remaining - 1];
      ++drawn;

      for (std::size_t i = 0; i < samples.size(); ++i) column[i] = {x_.at(samples[i], f), y_[samples[i]]};
      std::sort(column.begin(), column.end());
      if (column.front().first == column.back().first) continue;

      std::vector<std::size_t> left(classes_, 0);
      std::vector<std::size_t> right = counts;
      for (std::size_t i = 0; i + 1 < column.size(); ++i) {
        ++left[column[i].second];
        --right[column[i].second];
        if (column[i].first == column[i + 1].first) continue;
        const std::size_t nl = i + 1;
        const double impurity = gini_sum(left, nl) + gini_sum(right, column.size() - nl);
        if (!best_any.valid || impurity < best_any.impurity) {
          const float lo = column[i].first;
          const float hi = column[i + 1].first;
          float threshold = lo + (hi - lo) * 0.5F;
          if (!(threshold >= lo && threshold < hi)) threshold = lo;
          best_any = {true, f, threshold, impurity};
        }
      }
    }
    return best_any;
  }

  const DenseMatrix& x_;
  std::span<const std::size_t> y_;
  std::size_t classes_;
  const ForestConfig& config_;
  std::size_t mtry_;
  Rng& rng_;
  std::vector<std::size_t> features_;
};

}  // namespace

const TreeNode& DecisionTree::leaf_for(std::span<const float> dense) const {
  std::size_t i = 0;
  while (nodes[i].feature >= 0) {
    const TreeNode& node = nodes[i];
    i = static_cast<std::size_t>(dense[static_cast<std::size_t>(node.feature)] <= node.threshold
                                     ? node.left
                                     : node.right);
  }
  return nodes[i];
}

std::size_t DecisionTree::vote(std::span<const float> dense) const {
  const auto& dist = leaf_for(dense).distribution;
  return static_cast<std::size_t>(std::max_element(dist.begin(), dist.end()) - dist.begin());
}

std::size_t ForestModel::predict_index(const FeatureVector& x) const {
  if (x.dimension != dimension) {
    throw DataError("vector dimension " + std::to_string(x.dimension) + " does not match forest " +
                    std::to_string(dimension));
  }
  const std::vector<float> dense = densify_one(x);
  std::vector<std::size_t> votes(classes.size(), 0);
  for (const DecisionTree& tree : trees) ++votes[tree.vote(dense)];
  // max_element returns the first maximum: the smallest class on ties.
  return static_cast<std::size_t>(std::max_element(votes.begin(), votes.end()) - votes.begin());
}

ForestModel train_forest(std::span<const FeatureVector> x, std::span<const std::string> labels,
                         const ForestConfig& config, std::size_t threads) {
  if (x.empty()) throw DataError("train_forest: empty training set");
  if (x.size() != labels.size()) throw DataError("train_forest: need one label per vector");
  if (config.trees == 0) throw DataError("train_forest: tree count must be positive");
  const std::size_t dim = x.front().dimension;
  for (const FeatureVector& v : x) {
    if (v.dimension != dim) throw DataError("train_forest: inconsistent vector dimensions");
  }
  ForestModel model;
  model.config = config;
  model.dimension = dim;
  model.classes.assign(labels.begin(), labels.end());
  std::sort(model.classes.begin(), model.classes.end());
  model.classes.erase(std::unique(model.classes.begin(), model.classes.end()), model.classes.end());
  if (model.classes.size() < 2) throw DataError("train_forest: at least two classes are required");
  if (dim == 0) throw DataError("train_forest: vectors have no features");

  std::vector<std::size_t> y(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    y[i] = static_cast<std::size_t>(
        std::lower_bound(model.classes.begin(), model.classes.end(), labels[i]) - model.classes.begin());
  }
  const DenseMatrix dense = densify(x, dim);
  const std::size_t mtry =
      config.features_per_split > 0
          ? std::min(config.features_per_split, dim)
          : std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(dim)))));

  model.trees.resize(config.trees);
  parallel_for(
      config.trees,
      [&](std::size_t t) {
        Rng rng(derive_seed(config.seed, t));
        std::vector<std::size_t> samples(x.size());
        if (config.bootstrap) {
          for (std::size_t& s : samples) s = rng.uniform_index(x.size());
        } else {
          std::iota(samples.begin(), samples.end(), std::size_t{0});
        }
        TreeBuilder builder(dense, y, model.classes.size(), config, mtry, rng);
        model.trees[t] = builder.build(std::move(samples));
      },
      threads);
  return model;
}

}  // namespace newsstyle
