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

#include "newsstyle/error.hpp"
#include "newsstyle/metrics.hpp"

namespace newsstyle {
namespace {

using Labels = std::vector<std::string>;

TEST(Metrics, ConfusionAndScoresByHand) {
  const Labels gold = {"a", "a", "a", "b", "b", "c"};
  const Labels pred = {"a", "a", "b", "b", "a", "a"};
  const EvaluationReport r = evaluate(pred, gold);
  EXPECT_EQ(r.classes, (Labels{"a", "b", "c"}));
  EXPECT_EQ(r.confusion, (std::vector<std::vector<std::size_t>>{{2, 1, 0}, {1, 1, 0}, {1, 0, 0}}));
  EXPECT_DOUBLE_EQ(r.accuracy, 0.5);
  EXPECT_EQ(r.total, 6U);
  EXPECT_DOUBLE_EQ(*r.metrics("a").precision, 0.5);
  EXPECT_DOUBLE_EQ(*r.metrics("a").recall, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(*r.metrics("a").f1, 2 * 0.5 * (2.0 / 3.0) / (0.5 + 2.0 / 3.0));
  EXPECT_DOUBLE_EQ(*r.metrics("b").precision, 0.5);
  EXPECT_EQ(r.metrics("c").support, 1U);
  EXPECT_FALSE(r.metrics("c").precision);
  EXPECT_DOUBLE_EQ(*r.metrics("c").recall, 0.0);
  EXPECT_FALSE(r.metrics("c").f1);
}

TEST(Metrics, DeclaredClassesAreKeptWhenAbsent) {
  const Labels x = {"a", "a"};
  const Labels declared = {"b", "a"};
  const EvaluationReport r = evaluate(x, x, declared);
  EXPECT_EQ(r.classes, (Labels{"a", "b"}));
  EXPECT_FALSE(r.metrics("b").recall);
  EXPECT_THROW(evaluate(x, Labels{"a"}), DataError);
  EXPECT_THROW(evaluate(Labels{}, Labels{}), DataError);
}

TEST(Metrics, ConstantPredictorMatchesAnalyticReport) {
  const Labels classes = {"hyperpartisan", "mainstream"};
  Labels gold(801, "hyperpartisan");
  gold.insert(gold.end(), 826, "mainstream");
  for (const std::string& label : classes) {
    const auto baseline = naive_baseline(label, classes);
    const EvaluationReport measured = evaluate(baseline.predict_all(gold.size()), gold, classes);
    const std::vector<std::size_t> supports = {801, 826};
    EXPECT_EQ(measured, analytic_baseline_report(label, classes, supports)) << label;
  }
  EXPECT_THROW(naive_baseline("other", classes), UsageError);
  const auto r = analytic_baseline_report("hyperpartisan", classes, std::vector<std::size_t>{801, 826});
  EXPECT_NEAR(r.accuracy, 801.0 / 1627.0, 1e-15);
  EXPECT_NEAR(*r.metrics("hyperpartisan").f1, 2 * (801.0 / 1627.0) / (801.0 / 1627.0 + 1), 1e-15);
}

TEST(Metrics, AveragingSkipsUndefinedFolds) {
  const Labels classes = {"a", "b"};
  const EvaluationReport one = evaluate(Labels{"a", "a"}, Labels{"a", "b"}, classes);
  const EvaluationReport two = evaluate(Labels{"b", "b"}, Labels{"b", "b"}, classes);
  const std::vector<EvaluationReport> reports = {one, two};
  const AveragedReport avg = average_reports(reports);
  EXPECT_EQ(avg.folds, 2U);
  EXPECT_DOUBLE_EQ(avg.accuracy, 0.75);
  // a: precision 0.5 in fold one, undefined in fold two
  EXPECT_DOUBLE_EQ(*avg.metrics("a").precision, 0.5);
  // a: recall 1 in fold one, undefined in fold two (no gold a)
  EXPECT_DOUBLE_EQ(*avg.metrics("a").recall, 1.0);
  EXPECT_DOUBLE_EQ(*avg.metrics("b").recall, 0.5);
  EXPECT_EQ(avg.metrics("b").support, 3U);
  EXPECT_EQ(avg.confusion, (std::vector<std::vector<std::size_t>>{{1, 0}, {1, 2}}));
  EXPECT_THROW(average_reports({}), DataError);
  const std::vector<EvaluationReport> mixed = {one, evaluate(Labels{"c"}, Labels{"c"})};
  EXPECT_THROW(average_reports(mixed), DataError);
}

TEST(Metrics, MisclassificationShares) {
  const std::vector<std::vector<std::size_t>> confusion = {{5, 3, 1}, {0, 4, 0}, {2, 2, 0}};
  const auto shares = misclassification_shares(confusion);
  EXPECT_DOUBLE_EQ(*shares[0][1], 0.75);
  EXPECT_DOUBLE_EQ(*shares[0][2], 0.25);
  EXPECT_FALSE(shares[1][0]);
  EXPECT_DOUBLE_EQ(*shares[2][0], 0.5);
  EXPECT_FALSE(shares[0][0]);
}

TEST(Metrics, JsonMarksUndefinedValuesAsNull) {
  const EvaluationReport r = evaluate(Labels{"a", "a"}, Labels{"a", "b"});
  const nlohmann::json j = to_json(r);
  EXPECT_DOUBLE_EQ(j["accuracy"].get<double>(), 0.5);
  EXPECT_TRUE(j.dump().find("null") != std::string::npos);
}

}  // namespace
}  // namespace newsstyle
