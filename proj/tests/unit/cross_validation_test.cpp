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

#include <map>
#include <set>

#include "newsstyle/cross_validation.hpp"
#include "newsstyle/error.hpp"
#include "newsstyle/synthetic.hpp"

namespace newsstyle {
namespace {

// Orientation task on a small synthetic corpus, one fold per publisher
// triple (one publisher of each orientation).
struct OrientationData {
  Corpus corpus;
  FeatureSpace space;
  std::vector<DocumentProfile> profiles;
  std::vector<CvItem> items;
  std::vector<FoldSplit> splits;
};

const OrientationData& orientation_data() {
  static const OrientationData s = [] {
    OrientationData s;
    s.corpus = make_synthetic_corpus({.articles_per_publisher = 8, .seed = 11});
    s.profiles = extract_profiles(s.corpus, ExtractionConfig::for_model(FeatureModel::style),
                                  FeatureResources::standard(), s.space, 2);
    std::map<Orientation, std::vector<std::string>> publishers;
    for (std::size_t i = 0; i < s.corpus.size(); ++i) {
      const Article& a = s.corpus[i];
      s.items.push_back({i, std::string(to_string(a.orientation)), a.publisher});
      auto& list = publishers[a.orientation];
      if (std::find(list.begin(), list.end(), a.publisher) == list.end()) list.push_back(a.publisher);
    }
    std::vector<std::vector<std::size_t>> folds(3);
    for (std::size_t i = 0; i < s.items.size(); ++i) {
      const auto& list = publishers[s.corpus[i].orientation];
      const auto f = static_cast<std::size_t>(std::find(list.begin(), list.end(), s.items[i].publisher) - list.begin());
      folds[f].push_back(i);
    }
    s.splits = leave_one_fold_out(folds);
    return s;
  }();
  return s;
}

PipelineConfig small_forest() {
  PipelineConfig config;
  config.forest.trees = 24;
  config.seed = 3;
  return config;
}

TEST(CrossValidation, LeaveOneFoldOutCoversEveryItemOnce) {
  const std::vector<std::vector<std::size_t>> folds = {{0, 3}, {1}, {2, 4, 5}};
  const auto splits = leave_one_fold_out(folds);
  ASSERT_EQ(splits.size(), 3U);
  std::multiset<std::size_t> tested;
  for (const FoldSplit& s : splits) {
    tested.insert(s.test.begin(), s.test.end());
    EXPECT_EQ(s.train.size() + s.test.size(), 6U);
    for (const std::size_t t : s.test) {
      EXPECT_EQ(std::count(s.train.begin(), s.train.end(), t), 0);
    }
  }
  EXPECT_EQ(tested, (std::multiset<std::size_t>{0, 1, 2, 3, 4, 5}));
  EXPECT_THROW(leave_one_fold_out({{0, 1}}), DataError);
}

TEST(CrossValidation, GuardChecksEveryFold) {
  const OrientationData& s = orientation_data();
  LeakageGuard guard;
  const auto result = cross_validate(s.profiles, s.space, s.items, s.splits, small_forest(), &guard, 2);
  EXPECT_EQ(result.folds.size(), 3U);
  EXPECT_EQ(guard.vocabulary_checks(), 3U);
  EXPECT_EQ(guard.publisher_checks(), 3U);
  EXPECT_EQ(result.average.folds, 3U);
  for (std::size_t f = 0; f < 3; ++f) {
    EXPECT_EQ(result.folds[f].predictions.size(), s.splits[f].test.size());
    EXPECT_GT(result.folds[f].vocabulary_size, 0U);
  }
  // Synthetic styles are separable.
  EXPECT_GT(result.average.accuracy, 0.8);
}

TEST(CrossValidation, ThreadCountDoesNotChangeResults) {
  const OrientationData& s = orientation_data();
  const auto one = cross_validate(s.profiles, s.space, s.items, s.splits, small_forest(), nullptr, 1);
  const auto four = cross_validate(s.profiles, s.space, s.items, s.splits, small_forest(), nullptr, 4);
  for (std::size_t f = 0; f < one.folds.size(); ++f) {
    EXPECT_EQ(one.folds[f].predictions, four.folds[f].predictions);
    EXPECT_EQ(one.folds[f].vocabulary_checksum, four.folds[f].vocabulary_checksum);
  }
}

TEST(CrossValidation, InjectedLeakIsCaught) {
  const OrientationData& s = orientation_data();
  PipelineConfig config = small_forest();
  config.inject_test_leak = true;
  LeakageGuard guard;
  EXPECT_THROW(cross_validate(s.profiles, s.space, s.items, s.splits, config, &guard, 1), LeakageError);
}

TEST(CrossValidation, PublisherOnBothSidesIsCaught) {
  const OrientationData& s = orientation_data();
  std::vector<FoldSplit> splits = s.splits;
  // Move one test item of split 0 into training; its publisher is now on both sides.
  splits[0].train.push_back(splits[0].test.back());
  splits[0].test.pop_back();
  LeakageGuard guard;
  EXPECT_THROW(cross_validate(s.profiles, s.space, s.items, splits, small_forest(), &guard, 1),
               LeakageError);
  PipelineConfig lenient = small_forest();
  lenient.publisher_disjoint = false;
  EXPECT_NO_THROW(cross_validate(s.profiles, s.space, s.items, splits, lenient, &guard, 1));
}

TEST(CrossValidation, GuardRejectsVocabularyBuiltFromTestDocuments) {
  FeatureVocabulary v({}, {"a", "b"}, {"d1", "d2"}, {});
  LeakageGuard guard;
  const std::vector<std::string> clean = {"d3"};
  EXPECT_NO_THROW(guard.check_vocabulary(v, clean, "ok"));
  const std::vector<std::string> dirty = {"d3", "d2"};
  EXPECT_THROW(guard.check_vocabulary(v, dirty, "fold"), LeakageError);
  EXPECT_EQ(guard.vocabulary_checks(), 2U);
}

TEST(CrossValidation, MissingTrainingClassIsDataError) {
  const OrientationData& s = orientation_data();
  std::vector<CvItem> items = s.items;
  // Only fold 0 keeps right-leaning items; its split has none in training.
  for (std::size_t i : s.splits[1].test) {
    if (items[i].label == "right") items[i].label = "left";
  }
  for (std::size_t i : s.splits[2].test) {
    if (items[i].label == "right") items[i].label = "left";
  }
  EXPECT_THROW(cross_validate(s.profiles, s.space, items, s.splits, small_forest(), nullptr, 1),
               DataError);
}

TEST(CrossValidation, LinearClassifierRunsOnBinaryTask) {
  const OrientationData& s = orientation_data();
  std::vector<CvItem> items = s.items;
  for (CvItem& item : items) item.label = item.label == "mainstream" ? "mainstream" : "hyperpartisan";
  PipelineConfig config = small_forest();
  config.classifier = ClassifierKind::linear;
  config.balance_training = true;
  const auto result = cross_validate(s.profiles, s.space, items, s.splits, config, nullptr, 1);
  EXPECT_EQ(result.average.classes, (std::vector<std::string>{"hyperpartisan", "mainstream"}));
  EXPECT_GT(result.average.accuracy, 0.7);
}

}  // namespace
}  // namespace newsstyle
