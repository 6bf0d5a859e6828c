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

#ifndef NEWSSTYLE_FOREST_HPP_
#define NEWSSTYLE_FOREST_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "newsstyle/features.hpp"

namespace newsstyle {

struct ForestConfig {
  std::size_t trees = 256;
  std::size_t max_depth = 0;           // 0: unlimited
  std::size_t features_per_split = 0;  // 0: floor(sqrt(dimension))
  std::size_t min_samples_split = 2;
  bool bootstrap = true;
  std::uint64_t seed = 1;
};

struct TreeNode {
  std::int32_t feature = -1;  // -1 marks a leaf
  float threshold = 0.0F;     // go left when value <= threshold
  std::int32_t left = -1;
  std::int32_t right = -1;
  std::vector<double> distribution;  // leaves only; sums to 1
};

struct DecisionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  const TreeNode& leaf_for(std::span<const float> dense) const;
  // Argmax of the leaf distribution, smallest class index on ties.
  std::size_t vote(std::span<const float> dense) const;
};

struct ForestModel {
  std::vector<DecisionTree> trees;
  ForestConfig config;
  std::size_t dimension = 0;
  // Sorted; class indices follow this order.
  std::vector<std::string> classes;

  // Majority vote over trees; ties go to the lexicographically smallest
  // class. Throws DataError on a dimension mismatch.
  std::size_t predict_index(const FeatureVector& x) const;
  const std::string& predict(const FeatureVector& x) const {
    return classes[predict_index(x)];
  }
};

// CART trees on Gini impurity, each grown on a bootstrap sample with a fresh
// random feature subset per split. If none of the sampled features can split
// a node, further features are drawn until one can or all are exhausted.
// Tree t uses derive_seed(config.seed, t), so any thread count produces the
// same forest. Throws DataError for empty input, a single class, or
// inconsistent dimensions.
ForestModel train_forest(std::span<const FeatureVector> x, std::span<const std::string> labels,
                         const ForestConfig& config = {}, std::size_t threads = 0);

}  // namespace newsstyle

#endif  // NEWSSTYLE_FOREST_HPP_
