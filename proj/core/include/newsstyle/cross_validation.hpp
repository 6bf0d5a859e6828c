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

#ifndef NEWSSTYLE_CROSS_VALIDATION_HPP_
#define NEWSSTYLE_CROSS_VALIDATION_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "newsstyle/features.hpp"
#include "newsstyle/forest.hpp"
#include "newsstyle/linear.hpp"
#include "newsstyle/metrics.hpp"

namespace newsstyle {

// Records every fit made during an experiment and fails loudly when test
// documents reach the training side.
class LeakageGuard {
 public:
  // Throws LeakageError when a vocabulary was built from any of `test_ids`.
  void check_vocabulary(const FeatureVocabulary& vocabulary,
                        std::span<const std::string> test_ids, std::string_view context);
  // Throws LeakageError when a publisher is on both sides.
  void check_publishers(std::span<const std::string> train_publishers,
                        std::span<const std::string> test_publishers,
                        std::string_view context);

  std::size_t vocabulary_checks() const { return vocabulary_checks_; }
  std::size_t publisher_checks() const { return publisher_checks_; }

 private:
  std::size_t vocabulary_checks_ = 0;
  std::size_t publisher_checks_ = 0;
};

// One classification item backed by a document profile.
struct CvItem {
  std::size_t profile = 0;  // index into the profile list
  std::string label;
  std::string publisher;
};

struct FoldSplit {
  std::vector<std::size_t> train;  // indices into the item list
  std::vector<std::size_t> test;
};

// Split i tests fold i and trains on all others. Throws DataError for fewer
// than two folds.
std::vector<FoldSplit> leave_one_fold_out(const std::vector<std::vector<std::size_t>>& folds);

enum class ClassifierKind { forest, linear };

struct PipelineConfig {
  SelectionConfig selection;
  ClassifierKind classifier = ClassifierKind::forest;
  ForestConfig forest;
  LinearConfig linear;
  // Oversample training items so every class matches the largest.
  bool balance_training = false;
  // Assert that no publisher is on both sides of a split.
  bool publisher_disjoint = true;
  // Fault injection for auditing the guard: adds the first test document to
  // vocabulary construction.
  bool inject_test_leak = false;
  std::uint64_t seed = 1;
};

struct FoldOutcome {
  std::vector<std::string> predictions;  // aligned with FoldSplit::test
  EvaluationReport report;
  std::size_t vocabulary_size = 0;
  std::string vocabulary_checksum;
};

struct CrossValidationResult {
  std::vector<FoldOutcome> folds;
  AveragedReport average;
};

// Per split: build the vocabulary and standardization from the unique
// training items only, vectorize, optionally balance, train, predict the test
// items. Fold f uses derive_seed(config.seed, f). Throws DataError when a
// training split lacks one of the task's classes.
CrossValidationResult cross_validate(std::span<const DocumentProfile> profiles,
                                     const FeatureSpace& space, std::span<const CvItem> items,
                                     std::span<const FoldSplit> splits,
                                     const PipelineConfig& config, LeakageGuard* guard = nullptr,
                                     std::size_t threads = 0);

// Trains the configured classifier on `train` and predicts `test`; the
// building block of cross_validate, also used for fixed train/test splits.
FoldOutcome fit_and_predict(std::span<const DocumentProfile> profiles, const FeatureSpace& space,
                            std::span<const CvItem> items, const FoldSplit& split,
                            std::span<const std::string> classes, const PipelineConfig& config,
                            std::uint64_t seed, LeakageGuard* guard, std::string_view context,
                            std::size_t threads = 0);

}  // namespace newsstyle

#endif  // NEWSSTYLE_CROSS_VALIDATION_HPP_
