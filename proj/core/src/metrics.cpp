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
#include <array>

#include "newsstyle/error.hpp"
#include "newsstyle/metrics.hpp"

namespace newsstyle {
namespace {

std::size_t find_class(const std::vector<std::string>& classes, std::string_view label) {
  const auto it = std::lower_bound(classes.begin(), classes.end(), label);
  if (it == classes.end() || *it != label) {
    throw UsageError("unknown class '" + std::string(label) + "'");
  }
  return static_cast<std::size_t>(it - classes.begin());
}

void fill_metrics(EvaluationReport& r) {
  const std::size_t k = r.classes.size();
  r.per_class.assign(k, {});
  std::size_t correct = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t support = 0;
    std::size_t predicted = 0;
    for (std::size_t j = 0; j < k; ++j) {
      support += r.confusion[c][j];
      predicted += r.confusion[j][c];
    }
    const std::size_t tp = r.confusion[c][c];
    correct += tp;
    ClassMetrics& m = r.per_class[c];
    m.support = support;
    if (predicted > 0) m.precision = static_cast<double>(tp) / static_cast<double>(predicted);
    if (support > 0) m.recall = static_cast<double>(tp) / static_cast<double>(support);
    if (m.precision && m.recall) {
      const double sum = *m.precision + *m.recall;
      m.f1 = sum > 0.0 ? 2.0 * *m.precision * *m.recall / sum : 0.0;
    }
  }
  r.accuracy = r.total > 0 ? static_cast<double>(correct) / static_cast<double>(r.total) : 0.0;
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json metrics_json(const std::vector<std::string>& classes,
                            const std::vector<ClassMetrics>& per_class) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const ClassMetrics& m = per_class[c];
    out[classes[c]] = {{"support", m.support},
                       {"precision", optional_json(m.precision)},
                       {"recall", optional_json(m.recall)},
                       {"f1", optional_json(m.f1)}};
  }
  return out;
}

}  // namespace

std::size_t EvaluationReport::class_index(std::string_view label) const {
  return find_class(classes, label);
}

std::size_t AveragedReport::class_index(std::string_view label) const {
  return find_class(classes, label);
}

EvaluationReport evaluate(std::span<const std::string> predictions,
                          std::span<const std::string> gold,
                          std::span<const std::string> classes) {
  if (predictions.size() != gold.size()) {
    throw DataError("evaluate: " + std::to_string(predictions.size()) + " predictions for " +
                    std::to_string(gold.size()) + " gold labels");
  }
  if (gold.empty()) throw DataError("evaluate: no items");
  EvaluationReport r;
  r.classes.assign(classes.begin(), classes.end());
  r.classes.insert(r.classes.end(), gold.begin(), gold.end());
  r.classes.insert(r.classes.end(), predictions.begin(), predictions.end());
  std::sort(r.classes.begin(), r.classes.end());
  r.classes.erase(std::unique(r.classes.begin(), r.classes.end()), r.classes.end());
  const std::size_t k = r.classes.size();
  r.confusion.assign(k, std::vector<std::size_t>(k, 0));
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ++r.confusion[find_class(r.classes, gold[i])][find_class(r.classes, predictions[i])];
  }
  r.total = gold.size();
  fill_metrics(r);
  return r;
}

AveragedReport average_reports(std::span<const EvaluationReport> reports) {
  if (reports.empty()) throw DataError("average_reports: no reports");
  AveragedReport avg;
  avg.classes = reports.front().classes;
  const std::size_t k = avg.classes.size();
  avg.confusion.assign(k, std::vector<std::size_t>(k, 0));
  avg.per_class.assign(k, {});
  avg.folds = reports.size();
  std::vector<std::array<double, 3>> sums(k, {0.0, 0.0, 0.0});
  std::vector<std::array<std::size_t, 3>> defined(k, {0, 0, 0});
  for (const EvaluationReport& r : reports) {
    if (r.classes != avg.classes) throw DataError("average_reports: class sets differ");
    avg.accuracy += r.accuracy;
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t j = 0; j < k; ++j) avg.confusion[c][j] += r.confusion[c][j];
      const ClassMetrics& m = r.per_class[c];
      avg.per_class[c].support += m.support;
      const std::optional<double>* values[3] = {&m.precision, &m.recall, &m.f1};
      for (std::size_t v = 0; v < 3; ++v) {
        if (*values[v]) {
          sums[c][v] += **values[v];
          ++defined[c][v];
        }
      }
    }
  }
  avg.accuracy /= static_cast<double>(reports.size());
  for (std::size_t c = 0; c < k; ++c) {
    std::optional<double>* targets[3] = {&avg.per_class[c].precision, &avg.per_class[c].recall,
                                         &avg.per_class[c].f1};
    for (std::size_t v = 0; v < 3; ++v) {
      if (defined[c][v] > 0) *targets[v] = sums[c][v] / static_cast<double>(defined[c][v]);
    }
  }
  return avg;
}

std::vector<std::vector<std::optional<double>>> misclassification_shares(
    const std::vector<std::vector<std::size_t>>& confusion) {
  const std::size_t k = confusion.size();
  std::vector<std::vector<std::optional<double>>> shares(k, std::vector<std::optional<double>>(k));
  for (std::size_t g = 0; g < k; ++g) {
    std::size_t wrong = 0;
    for (std::size_t p = 0; p < k; ++p) {
      if (p != g) wrong += confusion[g][p];
    }
    if (wrong == 0) continue;
    for (std::size_t p = 0; p < k; ++p) {
      if (p != g) shares[g][p] = static_cast<double>(confusion[g][p]) / static_cast<double>(wrong);
    }
  }
  return shares;
}

ConstantPredictor naive_baseline(std::string_view label, std::span<const std::string> classes) {
  if (std::find(classes.begin(), classes.end(), label) == classes.end()) {
    throw UsageError("baseline label '" + std::string(label) + "' is not a task class");
  }
  return ConstantPredictor(std::string(label));
}

EvaluationReport analytic_baseline_report(std::string_view label,
                                          std::span<const std::string> classes,
                                          std::span<const std::size_t> supports) {
  if (classes.size() != supports.size()) {
    throw DataError("analytic_baseline_report: one support per class is required");
  }
  std::vector<std::pair<std::string, std::size_t>> sorted;
  for (std::size_t i = 0; i < classes.size(); ++i) sorted.emplace_back(classes[i], supports[i]);
  std::sort(sorted.begin(), sorted.end());
  EvaluationReport r;
  for (const auto& [name, support] : sorted) {
    r.classes.push_back(name);
    r.total += support;
  }
  if (r.total == 0) throw DataError("analytic_baseline_report: no items");
  const std::size_t target = find_class(r.classes, label);
  const std::size_t k = r.classes.size();
  r.confusion.assign(k, std::vector<std::size_t>(k, 0));
  for (std::size_t c = 0; c < k; ++c) r.confusion[c][target] = sorted[c].second;
  fill_metrics(r);
  return r;
}

nlohmann::json to_json(const EvaluationReport& report) {
  return {{"classes", report.classes},
          {"accuracy", report.accuracy},
          {"total", report.total},
          {"confusion", report.confusion},
          {"per_class", metrics_json(report.classes, report.per_class)}};
}

nlohmann::json to_json(const AveragedReport& report) {
  return {{"classes", report.classes},
          {"accuracy", report.accuracy},
          {"folds", report.folds},
          {"fold_weighting", "unweighted"},
          {"confusion", report.confusion},
          {"per_class", metrics_json(report.classes, report.per_class)}};
}

}  // namespace newsstyle
