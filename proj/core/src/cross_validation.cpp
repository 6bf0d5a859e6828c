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
#include <map>
#include <set>

#include "newsstyle/corpus.hpp"
#include "newsstyle/cross_validation.hpp"
#include "newsstyle/error.hpp"
#include "newsstyle/random.hpp"

namespace newsstyle {

void LeakageGuard::check_vocabulary(const FeatureVocabulary& vocabulary,
                                    std::span<const std::string> test_ids,
                                    std::string_view context) {
  ++vocabulary_checks_;
  const auto& trained = vocabulary.training_ids();
  for (const std::string& id : test_ids) {
    if (std::binary_search(trained.begin(), trained.end(), id)) {
      throw LeakageError(std::string(context) + ": test document " + id +
                         " contributed to the vocabulary");
    }
  }
}

void LeakageGuard::check_publishers(std::span<const std::string> train_publishers,
                                    std::span<const std::string> test_publishers,
                                    std::string_view context) {
  ++publisher_checks_;
  const std::set<std::string> train(train_publishers.begin(), train_publishers.end());
  for (const std::string& p : test_publishers) {
    if (train.contains(p)) {
      throw LeakageError(std::string(context) + ": publisher " + p + " is on both sides");
    }
  }
}

std::vector<FoldSplit> leave_one_fold_out(const std::vector<std::vector<std::size_t>>& folds) {
  if (folds.size() < 2) throw DataError("cross-validation needs at least two folds");
  std::vector<FoldSplit> splits(folds.size());
  for (std::size_t f = 0; f < folds.size(); ++f) {
    splits[f].test = folds[f];
    for (std::size_t g = 0; g < folds.size(); ++g) {
      if (g != f) splits[f].train.insert(splits[f].train.end(), folds[g].begin(), folds[g].end());
    }
    std::sort(splits[f].train.begin(), splits[f].train.end());
    std::sort(splits[f].test.begin(), splits[f].test.end());
  }
  return splits;
}

FoldOutcome fit_and_predict(std::span<const DocumentProfile> profiles, const FeatureSpace& space,
                            std::span<const CvItem> items, const FoldSplit& split,
                            std::span<const std::string> classes, const PipelineConfig& config,
                            std::uint64_t seed, LeakageGuard* guard, std::string_view context,
                            std::size_t threads) {
  if (split.train.empty() || split.test.empty()) {
    throw DataError(std::string(context) + ": empty training or test side");
  }
  std::set<std::string> train_classes;
  for (const std::size_t i : split.train) train_classes.insert(items[i].label);
  for (const std::string& c : classes) {
    if (!train_classes.contains(c)) {
      throw DataError(std::string(context) + ": training split has no '" + c + "' items");
    }
  }

  std::vector<std::string> test_ids;
  for (const std::size_t i : split.test) test_ids.push_back(profiles[items[i].profile].doc_id);
  if (config.publisher_disjoint && guard != nullptr) {
    std::vector<std::string> train_pubs;
    std::vector<std::string> test_pubs;
    for (const std::size_t i : split.train) train_pubs.push_back(items[i].publisher);
    for (const std::size_t i : split.test) test_pubs.push_back(items[i].publisher);
    guard->check_publishers(train_pubs, test_pubs, context);
  }

  // Vocabulary from unique training documents.
  std::vector<const DocumentProfile*> vocab_docs;
  std::vector<std::string> vocab_labels;
  std::set<std::size_t> seen;
  for (const std::size_t i : split.train) {
    if (!seen.insert(items[i].profile).second) continue;
    vocab_docs.push_back(&profiles[items[i].profile]);
    vocab_labels.push_back(items[i].label);
  }
  if (config.inject_test_leak && !split.test.empty()) {
    vocab_docs.push_back(&profiles[items[split.test.front()].profile]);
    vocab_labels.push_back(items[split.test.front()].label);
  }
  const FeatureVocabulary vocabulary = build_vocabulary(vocab_docs, vocab_labels, space, config.selection);
  if (guard != nullptr) guard->check_vocabulary(vocabulary, test_ids, context);
  if (vocabulary.size() == 0) throw DataError(std::string(context) + ": empty vocabulary");

  const Vectorizer vectorizer(vocabulary, space);
  std::vector<std::size_t> train = split.train;
  if (config.balance_training) {
    std::map<std::string, std::vector<std::size_t>> by_label;
    for (const std::size_t i : train) by_label[items[i].label].push_back(i);
    std::vector<std::vector<std::size_t>> groups;
    for (auto& [label, group] : by_label) groups.push_back(std::move(group));
    train.clear();
    for (const auto& group : balance_by_oversampling(std::move(groups), derive_seed(seed, 7))) {
      train.insert(train.end(), group.begin(), group.end());
    }
  }

  std::vector<FeatureVector> x_train;
  std::vector<std::string> y_train;
  x_train.reserve(train.size());
  for (const std::size_t i : train) {
    x_train.push_back(vectorizer(profiles[items[i].profile]));
    y_train.push_back(items[i].label);
  }

  FoldOutcome outcome;
  outcome.vocabulary_size = vocabulary.size();
  outcome.vocabulary_checksum = vocabulary.checksum();
  std::vector<std::string> gold;
  if (config.classifier == ClassifierKind::forest) {
    ForestConfig forest = config.forest;
    forest.seed = seed;
    const ForestModel model = train_forest(x_train, y_train, forest, threads);
    for (const std::size_t i : split.test) {
      outcome.predictions.push_back(model.predict(vectorizer(profiles[items[i].profile])));
      gold.push_back(items[i].label);
    }
  } else {
    if (classes.size() != 2) throw UsageError("the linear classifier handles two classes only");
    std::vector<int> y;
    for (const std::string& label : y_train) y.push_back(label == classes[0] ? 1 : -1);
    LinearConfig linear = config.linear;
    linear.seed = seed;
    const LinearModel model = train_linear(x_train, y, linear);
    for (const std::size_t i : split.test) {
      const int sign = model.predict(vectorizer(profiles[items[i].profile]));
      outcome.predictions.push_back(sign > 0 ? classes[0] : classes[1]);
      gold.push_back(items[i].label);
    }
  }
  outcome.report = evaluate(outcome.predictions, gold, classes);
  return outcome;
}

CrossValidationResult cross_validate(std::span<const DocumentProfile> profiles,
                                     const FeatureSpace& space, std::span<const CvItem> items,
                                     std::span<const FoldSplit> splits,
                                     const PipelineConfig& config, LeakageGuard* guard,
                                     std::size_t threads) {
  if (splits.size() < 2) throw DataError("cross-validation needs at least two folds");
  std::set<std::string> labels;
  for (const CvItem& item : items) labels.insert(item.label);
  const std::vector<std::string> classes(labels.begin(), labels.end());

  CrossValidationResult result;
  std::vector<EvaluationReport> reports;
  for (std::size_t f = 0; f < splits.size(); ++f) {
    result.folds.push_back(fit_and_predict(profiles, space, items, splits[f], classes, config,
                                           derive_seed(config.seed, f), guard,
                                           "fold " + std::to_string(f + 1), threads));
    reports.push_back(result.folds.back().report);
  }
  result.average = average_reports(reports);
  return result;
}

}  // namespace newsstyle
