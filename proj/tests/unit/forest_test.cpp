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

#include <gtest/gtest.h>

#include <cmath>

#include "newsstyle/error.hpp"
#include "newsstyle/forest.hpp"
#include "newsstyle/random.hpp"

namespace newsstyle {
namespace {

struct Planted {
  std::vector<FeatureVector> x;
  std::vector<std::string> y;
};

// Three classes; class c raises feature c, the other 17 features are noise.
Planted planted(std::uint64_t seed, std::size_t per_class) {
  const std::array<std::string, 3> names = {"alpha", "beta", "gamma"};
  Rng rng(seed);
  Planted p;
  for (std::size_t i = 0; i < per_class; ++i) {
    for (std::size_t c = 0; c < 3; ++c) {
      FeatureVector v;
      v.dimension = 20;
      for (std::uint32_t f = 0; f < 20; ++f) {
        double value = rng.uniform01();
        if (f == c) value += 1.0;
        v.indices.push_back(f);
        v.values.push_back(value);
      }
      p.x.push_back(std::move(v));
      p.y.push_back(names[c]);
    }
  }
  return p;
}

TEST(Forest, LearnsPlantedSignal) {
  const Planted train = planted(1, 60);
  const Planted test = planted(2, 60);
  const ForestModel m = train_forest(train.x, train.y, {.trees = 64, .seed = 5}, 2);
  EXPECT_EQ(m.classes, (std::vector<std::string>{"alpha", "beta", "gamma"}));
  EXPECT_EQ(m.trees.size(), 64U);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < test.x.size(); ++i) hits += m.predict(test.x[i]) == test.y[i] ? 1 : 0;
  EXPECT_GE(static_cast<double>(hits) / static_cast<double>(test.x.size()), 0.95);
}

TEST(Forest, ThreadCountDoesNotChangeTheForest) {
  const Planted train = planted(3, 30);
  const ForestModel a = train_forest(train.x, train.y, {.trees = 16, .seed = 9}, 1);
  const ForestModel b = train_forest(train.x, train.y, {.trees = 16, .seed = 9}, 4);
  ASSERT_EQ(a.trees.size(), b.trees.size());
  for (std::size_t t = 0; t < a.trees.size(); ++t) {
    ASSERT_EQ(a.trees[t].nodes.size(), b.trees[t].nodes.size());
    for (std::size_t n = 0; n < a.trees[t].nodes.size(); ++n) {
      const TreeNode& x = a.trees[t].nodes[n];
      const TreeNode& y = b.trees[t].nodes[n];
      EXPECT_EQ(x.feature, y.feature);
      EXPECT_EQ(x.threshold, y.threshold);
      EXPECT_EQ(x.left, y.left);
      EXPECT_EQ(x.distribution, y.distribution);
    }
  }
  const ForestModel c = train_forest(train.x, train.y, {.trees = 16, .seed = 10}, 1);
  bool differs = false;
  for (std::size_t t = 0; t < a.trees.size(); ++t) differs |= a.trees[t].nodes.size() != c.trees[t].nodes.size();
  for (std::size_t t = 0; t < a.trees.size() && !differs; ++t) {
    differs |= a.trees[t].nodes[0].feature != c.trees[t].nodes[0].feature ||
               a.trees[t].nodes[0].threshold != c.trees[t].nodes[0].threshold;
  }
  EXPECT_TRUE(differs);
}

TEST(Forest, TreesAreWellFormed) {
  const Planted train = planted(4, 25);
  const ForestModel m = train_forest(train.x, train.y, {.trees = 8, .max_depth = 3, .seed = 2}, 1);
  for (const DecisionTree& tree : m.trees) {
    for (const TreeNode& node : tree.nodes) {
      if (node.feature < 0) {
        ASSERT_EQ(node.distribution.size(), 3U);
        double sum = 0.0;
        for (const double p : node.distribution) sum += p;
        EXPECT_NEAR(sum, 1.0, 1e-12);
      } else {
        EXPECT_LT(node.feature, 20);
        EXPECT_GT(node.left, 0);
        EXPECT_GT(node.right, 0);
        EXPECT_LT(static_cast<std::size_t>(node.right), tree.nodes.size());
      }
    }
    // depth <= 3 gives at most 15 nodes
    EXPECT_LE(tree.nodes.size(), 15U);
  }
}

TEST(Forest, PureTrainingSetIsMemorizedWithoutBootstrap) {
  const Planted train = planted(6, 10);
  const ForestModel m =
      train_forest(train.x, train.y, {.trees = 4, .features_per_split = 20, .bootstrap = false}, 1);
  for (std::size_t i = 0; i < train.x.size(); ++i) EXPECT_EQ(m.predict(train.x[i]), train.y[i]);
}

TEST(Forest, RejectsBadInput) {
  const Planted train = planted(7, 3);
  EXPECT_THROW(train_forest({}, {}, {}), DataError);
  const std::vector<std::string> one(train.x.size(), "alpha");
  EXPECT_THROW(train_forest(train.x, one, {.trees = 2}), DataError);
  const ForestModel m = train_forest(train.x, train.y, {.trees = 2});
  FeatureVector wrong;
  wrong.dimension = 3;
  EXPECT_THROW(m.predict_index(wrong), DataError);
}

}  // namespace
}  // namespace newsstyle
