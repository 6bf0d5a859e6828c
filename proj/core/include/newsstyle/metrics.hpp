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

#ifndef NEWSSTYLE_METRICS_HPP_
#define NEWSSTYLE_METRICS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace newsstyle {

// Absent values stand for undefined ratios (zero denominators).
struct ClassMetrics {
  std::size_t support = 0;
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;

  bool operator==(const ClassMetrics&) const = default;
};

struct EvaluationReport {
  std::vector<std::string> classes;                  // sorted
  std::vector<std::vector<std::size_t>> confusion;   // [gold][predicted]
  std::vector<ClassMetrics> per_class;
  double accuracy = 0.0;
  std::size_t total = 0;

  std::size_t class_index(std::string_view label) const;
  const ClassMetrics& metrics(std::string_view label) const {
    return per_class[class_index(label)];
  }
  bool operator==(const EvaluationReport&) const = default;
};

// Classes are the sorted union of `classes`, gold and predicted labels.
// Throws DataError on a length mismatch or empty input.
EvaluationReport evaluate(std::span<const std::string> predictions,
                          std::span<const std::string> gold,
                          std::span<const std::string> classes = {});

// Unweighted mean over folds. A class metric is averaged over the folds where
// it is defined and is absent when undefined in all of them. Supports and
// confusion counts are summed.
struct AveragedReport {
  std::vector<std::string> classes;
  std::vector<std::vector<std::size_t>> confusion;
  std::vector<ClassMetrics> per_class;
  double accuracy = 0.0;
  std::size_t folds = 0;

  std::size_t class_index(std::string_view label) const;
  const ClassMetrics& metrics(std::string_view label) const {
    return per_class[class_index(label)];
  }
};

// Throws DataError for no reports or reports over different class sets.
AveragedReport average_reports(std::span<const EvaluationReport> reports);

// For gold class g, the share of its misclassified items predicted as each
// other class; absent when g has no misclassifications. [gold][predicted].
std::vector<std::vector<std::optional<double>>> misclassification_shares(
    const std::vector<std::vector<std::size_t>>& confusion);

// Constant predictor.
class ConstantPredictor {
 public:
  explicit ConstantPredictor(std::string label) : label_(std::move(label)) {}
  const std::string& label() const { return label_; }
  std::vector<std::string> predict_all(std::size_t count) const {
    return std::vector<std::string>(count, label_);
  }

 private:
  std::string label_;
};

// Throws UsageError when label is not one of `classes`.
ConstantPredictor naive_baseline(std::string_view label, std::span<const std::string> classes);

// The report a constant predictor of `label` must produce, derived from the
// class supports alone: accuracy = precision = n_label / N, recall 1, F1 =
// 2P/(P+1); other classes have recall 0 and no precision or F1.
EvaluationReport analytic_baseline_report(std::string_view label,
                                          std::span<const std::string> classes,
                                          std::span<const std::size_t> supports);

nlohmann::json to_json(const EvaluationReport& report);
nlohmann::json to_json(const AveragedReport& report);

}  // namespace newsstyle

#endif  // NEWSSTYLE_METRICS_HPP_
