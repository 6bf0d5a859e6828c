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

#ifndef NEWSSTYLE_EXPERIMENTS_HPP_
#define NEWSSTYLE_EXPERIMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "newsstyle/corpus.hpp"
#include "newsstyle/cross_validation.hpp"
#include "newsstyle/features.hpp"
#include "newsstyle/metrics.hpp"
#include "newsstyle/unmasking.hpp"

namespace newsstyle {

enum class Task {
  hyperpartisan_omission,
  hyperpartisan_binary,
  orientation_3class,
  veracity_generic,
  veracity_orientation_specific,
  satire,
  unmask_orientations,
  unmask_satire,
};

std::string_view to_string(Task task);
std::optional<Task> parse_task(std::string_view name);
std::vector<Task> all_tasks();

// Class label of an article under a classification task, or nullopt when the
// task does not use it. Throws UsageError for the unmasking tasks.
std::optional<std::string> task_label(Task task, const Article& article);

// How orientation-specific veracity results are merged: pooled predictions
// of both wings per fold, or the mean of the per-wing fold averages.
enum class VeracityAggregation { pooled, averaged };

struct ExperimentConfig {
  std::size_t folds = 3;
  std::vector<FeatureModel> models = {FeatureModel::style, FeatureModel::topic};
  int min_n = 1;
  int max_n = 3;
  SelectionConfig selection;
  ForestConfig forest;
  LinearConfig linear;
  UnmaskingConfig unmasking;
  VeracityAggregation veracity_aggregation = VeracityAggregation::pooled;
  std::size_t satire_per_class = 180;
  double satire_train_fraction = 0.75;

  nlohmann::json to_json() const;
  // Applies the keys present in `overrides` on top of `base`. Throws
  // UsageError for unknown keys or values of the wrong type.
  static ExperimentConfig from_json(const nlohmann::json& overrides,
                                    const ExperimentConfig& base);
  static ExperimentConfig from_json(const nlohmann::json& overrides);
};

struct ExperimentSpec {
  Task task = Task::hyperpartisan_binary;
  std::uint64_t seed = 1;
  ExperimentConfig config;
  // Sets PipelineConfig::inject_test_leak for every fit.
  bool inject_test_leak = false;
};

// A claim evaluated on the run's results (orderings, analytic identities).
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Shared state for experiments on one corpus (and optional satire set):
// cached tokenization, tagging and feature profiles, plus the leakage guard.
// Articles of both corpora live in one pool; satire-set articles follow the
// main corpus.
class ExperimentContext {
 public:
  ExperimentContext(Corpus corpus, std::optional<Corpus> satire_corpus = std::nullopt,
                    FeatureResources resources = FeatureResources::standard(),
                    std::size_t threads = 0);
  ~ExperimentContext();
  ExperimentContext(const ExperimentContext&) = delete;
  ExperimentContext& operator=(const ExperimentContext&) = delete;

  const Corpus& corpus() const { return corpus_; }
  const Corpus* satire_corpus() const { return satire_ ? &*satire_ : nullptr; }
  std::size_t pool_size() const;
  const Article& pool_article(std::size_t index) const;
  std::size_t satire_offset() const { return corpus_.size(); }
  std::size_t threads() const { return threads_; }

  // Profiles for every pool article under `model`, extracted on first use.
  const std::vector<DocumentProfile>& profiles(FeatureModel model, int min_n, int max_n);
  const FeatureSpace& space() const { return space_; }
  const std::vector<WordBag>& word_bags();

  LeakageGuard& guard() { return guard_; }

 private:
  struct Cache;

  Corpus corpus_;
  std::optional<Corpus> satire_;
  FeatureResources resources_;
  std::size_t threads_;
  FeatureSpace space_;
  LeakageGuard guard_;
  std::unique_ptr<Cache> cache_;
};

struct ModelRow {
  FeatureModel model;
  AveragedReport report;
};

struct BaselineRow {
  std::string name;  // "All-hyp." etc.
  EvaluationReport report;
};

struct ClassificationResult {
  std::vector<std::string> classes;
  std::vector<ModelRow> models;
  std::vector<BaselineRow> baselines;
  std::vector<Check> checks;

  const AveragedReport* report_for(FeatureModel model) const;
};

// Omission layout: accuracy per test subset for each training variant.
struct OmissionResult {
  struct Cell {
    std::string training;  // without_left, without_right, with_both
    FeatureModel model;
    double left = 0.0;
    double right = 0.0;
    double mainstream = 0.0;
  };
  std::vector<Cell> cells;

  const Cell* cell(std::string_view training, FeatureModel model) const;
};

struct OrientationResult {
  ClassificationResult classification;
  // Per model: [gold][predicted] misclassification shares from the summed
  // confusion matrix.
  std::vector<std::pair<FeatureModel, std::vector<std::vector<std::optional<double>>>>> shares;
};

struct VeracityResult {
  std::optional<ClassificationResult> generic;
  std::optional<ClassificationResult> orientation_specific;
  VeracityAggregation aggregation = VeracityAggregation::pooled;
};

struct UnmaskingSuiteResult {
  std::string suite;  // orientations or satire
  std::vector<UnmaskingCurve> curves;
  std::vector<double> slopes;
  std::vector<Check> checks;
};

// Published reference scores of the best satire classifier from the
// literature, echoed next to the satire results: precision, recall, F1.
inline constexpr double kSatireReferencePrecision = 0.90;
inline constexpr double kSatireReferenceRecall = 0.84;
inline constexpr double kSatireReferenceF1 = 0.87;

// Hyperpartisan (left + right) vs mainstream with left omitted, right
// omitted, or both kept in training; balanced by oversampling; publisher
// folds. Throws DataError when an orientation is missing.
OmissionResult run_hyperpartisan_omission(ExperimentContext& context, const ExperimentSpec& spec);
ClassificationResult run_hyperpartisan_binary(ExperimentContext& context,
                                              const ExperimentSpec& spec);
OrientationResult run_orientation(ExperimentContext& context, const ExperimentSpec& spec);
// Fake vs real over left and right articles (no_factual and mainstream
// dropped). `generic` and `specific` choose which classifiers run.
VeracityResult run_veracity(ExperimentContext& context, const ExperimentSpec& spec,
                            bool generic = true, bool specific = true);
// Satire vs real on the satire set with one seeded stratified split.
ClassificationResult run_satire(ExperimentContext& context, const ExperimentSpec& spec);
// Orientation pairs (left-right, left-mainstream, right-mainstream) or the
// fake/real/satire pairs.
UnmaskingSuiteResult run_unmasking_suite(ExperimentContext& context, const ExperimentSpec& spec,
                                         bool satire_suite);

}  // namespace newsstyle

#endif  // NEWSSTYLE_EXPERIMENTS_HPP_
