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
#include <functional>
#include <tuple>
#include <cmath>
#include <map>
#include <set>

#include "newsstyle/error.hpp"
#include "newsstyle/experiments.hpp"
#include "newsstyle/parallel.hpp"
#include "newsstyle/random.hpp"

namespace newsstyle {
namespace {

constexpr std::array<std::string_view, 8> kTaskNames = {
    "hyperpartisan_omission", "hyperpartisan_binary",   "orientation_3class",
    "veracity_generic",       "veracity_orientation_specific", "satire",
    "unmask_orientations",    "unmask_satire"};

// Stream ids for seeds derived from the experiment seed.
constexpr std::uint64_t kFoldStream = 1;
constexpr std::uint64_t kPipelineStream = 2;
constexpr std::uint64_t kSatireSplitStream = 3;
constexpr std::uint64_t kUnmaskingStream = 10;

using nlohmann::json;

// -- config ------------------------------------------------------------------

template <typename T>
T typed(const json& value, std::string_view key) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    throw UsageError("config key '" + std::string(key) + "' has the wrong type");
  }
}

void require_object(const json& value, std::string_view key) {
  if (!value.is_object()) throw UsageError("config key '" + std::string(key) + "' must be an object");
}

void unknown_key(std::string_view section, std::string_view key) {
  throw UsageError("unknown config key '" + std::string(section) + std::string(key) + "'");
}

void apply_linear(const json& j, LinearConfig& linear, std::string_view section) {
  require_object(j, section);
  for (const auto& [key, value] : j.items()) {
    if (key == "lambda") {
      linear.lambda = typed<double>(value, key);
    } else if (key == "epochs") {
      linear.epochs = typed<std::size_t>(value, key);
    } else {
      unknown_key(section, key);
    }
  }
}

json linear_json(const LinearConfig& linear) {
  return {{"lambda", linear.lambda}, {"epochs", linear.epochs}};
}

// -- items and folds ------------------------------------------------------------

struct Item {
  std::size_t pool = 0;  // index into the context pool
  std::string label;
  std::string publisher;
  Orientation orientation = Orientation::mainstream;
};

std::vector<CvItem> cv_items(const std::vector<Item>& items) {
  std::vector<CvItem> out;
  out.reserve(items.size());
  for (const Item& item : items) out.push_back({item.pool, item.label, item.publisher});
  return out;
}

std::vector<std::string> sorted_labels(const std::vector<Item>& items) {
  std::set<std::string> labels;
  for (const Item& item : items) labels.insert(item.label);
  return {labels.begin(), labels.end()};
}

// Publisher -> fold from the publisher-disjoint partition of the main corpus.
std::map<std::string, std::size_t> publisher_folds(const Corpus& corpus, std::size_t k,
                                                   std::uint64_t seed) {
  Corpus publishers;
  std::set<std::string> seen;
  for (const Article& a : corpus) {
    if (a.orientation == Orientation::satire || !seen.insert(a.publisher).second) continue;
    Article stub;
    stub.id = a.publisher;
    stub.publisher = a.publisher;
    stub.orientation = a.orientation;
    publishers.push_back(std::move(stub));
  }
  std::map<std::string, std::size_t> fold_of;
  const auto folds = partition_publisher_folds(publishers, k, seed);
  for (std::size_t f = 0; f < folds.size(); ++f) {
    for (const std::string& p : folds[f].publishers) fold_of[p] = f;
  }
  return fold_of;
}

std::vector<FoldSplit> publisher_splits(const std::vector<Item>& items,
                                        const std::map<std::string, std::size_t>& fold_of,
                                        std::size_t k) {
  std::vector<std::vector<std::size_t>> folds(k);
  for (std::size_t i = 0; i < items.size(); ++i) folds[fold_of.at(items[i].publisher)].push_back(i);
  for (std::size_t f = 0; f < k; ++f) {
    if (folds[f].empty()) throw DataError("fold " + std::to_string(f + 1) + " has no items");
  }
  return leave_one_fold_out(folds);
}

void require_orientations(const std::vector<Item>& items, std::initializer_list<Orientation> needed) {
  std::set<Orientation> present;
  for (const Item& item : items) present.insert(item.orientation);
  std::string missing;
  for (const Orientation o : needed) {
    if (!present.contains(o)) missing += (missing.empty() ? "" : ", ") + std::string(to_string(o));
  }
  if (!missing.empty()) throw DataError("corpus lacks articles for: " + missing);
}

PipelineConfig pipeline(const ExperimentSpec& spec, bool balance) {
  PipelineConfig p;
  p.selection = spec.config.selection;
  p.classifier = ClassifierKind::forest;
  p.forest = spec.config.forest;
  p.linear = spec.config.linear;
  p.balance_training = balance;
  p.publisher_disjoint = true;
  p.inject_test_leak = spec.inject_test_leak;
  p.seed = derive_seed(spec.seed, kPipelineStream);
  return p;
}

// Naive rows on pooled items, cross-checked against the analytic derivation.
void add_baselines(ClassificationResult& result, const std::vector<Item>& items,
                   const std::vector<std::pair<std::string, std::string>>& names) {
  std::vector<std::string> gold;
  for (const Item& item : items) gold.push_back(item.label);
  std::vector<std::size_t> supports;
  for (const std::string& c : result.classes) {
    supports.push_back(static_cast<std::size_t>(std::count(gold.begin(), gold.end(), c)));
  }
  for (const auto& [name, label] : names) {
    const ConstantPredictor predictor = naive_baseline(label, result.classes);
    const auto predictions = predictor.predict_all(gold.size());
    EvaluationReport report = evaluate(predictions, gold, result.classes);
    const EvaluationReport analytic = analytic_baseline_report(label, result.classes, supports);
    result.checks.push_back({"baseline " + name + " equals analytic derivation", report == analytic,
                             "accuracy " + std::to_string(report.accuracy)});
    result.baselines.push_back({name, std::move(report)});
  }
}

void add_style_over_topic(ClassificationResult& result) {
  const AveragedReport* style = result.report_for(FeatureModel::style);
  const AveragedReport* topic = result.report_for(FeatureModel::topic);
  if (style == nullptr || topic == nullptr) return;
  result.checks.push_back({"style accuracy > topic accuracy", style->accuracy > topic->accuracy,
                           "style " + std::to_string(style->accuracy) + ", topic " +
                               std::to_string(topic->accuracy)});
}

std::vector<Item> main_items(const ExperimentContext& context,
                             const std::function<std::optional<std::string>(const Article&)>& label) {
  std::vector<Item> items;
  for (std::size_t i = 0; i < context.corpus().size(); ++i) {
    const Article& a = context.corpus()[i];
    if (a.orientation == Orientation::satire) continue;
    if (auto l = label(a)) items.push_back({i, std::move(*l), a.publisher, a.orientation});
  }
  return items;
}

std::optional<std::string> hyperpartisan_label(const Article& a) {
  return task_label(Task::hyperpartisan_binary, a);
}

std::optional<std::string> veracity_label(const Article& a) {
  return task_label(Task::veracity_generic, a);
}

ClassificationResult cv_classification(ExperimentContext& context, const ExperimentSpec& spec,
                                       const std::vector<Item>& items, bool balance) {
  const auto fold_of = publisher_folds(context.corpus(), spec.config.folds,
                                       derive_seed(spec.seed, kFoldStream));
  const auto splits = publisher_splits(items, fold_of, spec.config.folds);
  const auto cv = cv_items(items);
  ClassificationResult result;
  result.classes = sorted_labels(items);
  for (const FeatureModel model : spec.config.models) {
    const auto& profiles = context.profiles(model, spec.config.min_n, spec.config.max_n);
    const CrossValidationResult r = cross_validate(profiles, context.space(), cv, splits,
                                                   pipeline(spec, balance), &context.guard(),
                                                   context.threads());
    result.models.push_back({model, r.average});
  }
  return result;
}

}  // namespace

// -- names ---------------------------------------------------------------------

std::string_view to_string(Task task) { return kTaskNames[static_cast<std::size_t>(task)]; }

std::optional<Task> parse_task(std::string_view name) {
  for (std::size_t i = 0; i < kTaskNames.size(); ++i) {
    if (kTaskNames[i] == name) return static_cast<Task>(i);
  }
  return std::nullopt;
}

std::vector<Task> all_tasks() {
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < kTaskNames.size(); ++i) tasks.push_back(static_cast<Task>(i));
  return tasks;
}

json ExperimentConfig::to_json() const {
  json models_json = json::array();
  for (const FeatureModel m : models) models_json.push_back(to_string(m));
  json unmasking_json = unmasking.to_json();
  unmasking_json.erase("seed");
  return {{"folds", folds},
          {"models", models_json},
          {"min_n", min_n},
          {"max_n", max_n},
          {"selection",
           {{"min_document_fraction", selection.min_document_fraction},
            {"min_categories", selection.min_categories}}},
          {"forest",
           {{"trees", forest.trees},
            {"max_depth", forest.max_depth},
            {"features_per_split", forest.features_per_split},
            {"min_samples_split", forest.min_samples_split},
            {"bootstrap", forest.bootstrap}}},
          {"linear", linear_json(linear)},
          {"unmasking", unmasking_json},
          {"veracity_aggregation",
           veracity_aggregation == VeracityAggregation::pooled ? "pooled" : "averaged"},
          {"satire_per_class", satire_per_class},
          {"satire_train_fraction", satire_train_fraction}};
}

ExperimentConfig ExperimentConfig::from_json(const json& overrides, const ExperimentConfig& base) {
  require_object(overrides, "<root>");
  ExperimentConfig c = base;
  for (const auto& [key, value] : overrides.items()) {
    if (key == "folds") {
      c.folds = typed<std::size_t>(value, key);
    } else if (key == "models") {
      c.models.clear();
      for (const auto& m : typed<std::vector<std::string>>(value, key)) {
        const auto model = parse_feature_model(m);
        if (!model) throw UsageError("unknown feature model '" + m + "'");
        c.models.push_back(*model);
      }
    } else if (key == "min_n") {
      c.min_n = typed<int>(value, key);
    } else if (key == "max_n") {
      c.max_n = typed<int>(value, key);
    } else if (key == "selection") {
      require_object(value, key);
      for (const auto& [k, v] : value.items()) {
        if (k == "min_document_fraction") {
          c.selection.min_document_fraction = typed<double>(v, k);
        } else if (k == "min_categories") {
          c.selection.min_categories = typed<std::size_t>(v, k);
        } else {
          unknown_key("selection.", k);
        }
      }
    } else if (key == "forest") {
      require_object(value, key);
      for (const auto& [k, v] : value.items()) {
        if (k == "trees") {
          c.forest.trees = typed<std::size_t>(v, k);
        } else if (k == "max_depth") {
          c.forest.max_depth = typed<std::size_t>(v, k);
        } else if (k == "features_per_split") {
          c.forest.features_per_split = typed<std::size_t>(v, k);
        } else if (k == "min_samples_split") {
          c.forest.min_samples_split = typed<std::size_t>(v, k);
        } else if (k == "bootstrap") {
          c.forest.bootstrap = typed<bool>(v, k);
        } else {
          unknown_key("forest.", k);
        }
      }
    } else if (key == "linear") {
      apply_linear(value, c.linear, "linear.");
    } else if (key == "unmasking") {
      require_object(value, key);
      for (const auto& [k, v] : value.items()) {
        if (k == "docs_per_side") {
          c.unmasking.docs_per_side = typed<std::size_t>(v, k);
        } else if (k == "runs") {
          c.unmasking.runs = typed<std::size_t>(v, k);
        } else if (k == "vocabulary_size") {
          c.unmasking.vocabulary_size = typed<std::size_t>(v, k);
        } else if (k == "eliminate_per_side") {
          c.unmasking.eliminate_per_side = typed<std::size_t>(v, k);
        } else if (k == "iterations") {
          c.unmasking.iterations = typed<std::size_t>(v, k);
        } else if (k == "cv_folds") {
          c.unmasking.cv_folds = typed<std::size_t>(v, k);
        } else if (k == "linear") {
          apply_linear(v, c.unmasking.linear, "unmasking.linear.");
        } else {
          unknown_key("unmasking.", k);
        }
      }
    } else if (key == "veracity_aggregation") {
      const auto mode = typed<std::string>(value, key);
      if (mode == "pooled") {
        c.veracity_aggregation = VeracityAggregation::pooled;
      } else if (mode == "averaged") {
        c.veracity_aggregation = VeracityAggregation::averaged;
      } else {
        throw UsageError("veracity_aggregation must be pooled or averaged");
      }
    } else if (key == "satire_per_class") {
      c.satire_per_class = typed<std::size_t>(value, key);
    } else if (key == "satire_train_fraction") {
      c.satire_train_fraction = typed<double>(value, key);
    } else {
      unknown_key("", key);
    }
  }
  if (c.min_n < 1 || c.max_n > 3 || c.min_n > c.max_n) {
    throw UsageError("config requires 1 <= min_n <= max_n <= 3");
  }
  if (c.models.empty()) throw UsageError("config lists no feature models");
  if (!(c.satire_train_fraction > 0.0 && c.satire_train_fraction < 1.0)) {
    throw UsageError("satire_train_fraction must lie strictly between 0 and 1");
  }
  c.unmasking.validate();
  return c;
}

std::optional<std::string> task_label(Task task, const Article& a) {
  switch (task) {
    case Task::hyperpartisan_omission:
    case Task::hyperpartisan_binary:
      if (a.orientation == Orientation::satire) return std::nullopt;
      return a.orientation == Orientation::mainstream ? "mainstream" : "hyperpartisan";
    case Task::orientation_3class:
      if (a.orientation == Orientation::satire) return std::nullopt;
      return std::string(to_string(a.orientation));
    case Task::veracity_generic:
    case Task::veracity_orientation_specific: {
      if (a.orientation != Orientation::left && a.orientation != Orientation::right) return std::nullopt;
      if (a.rating == Rating::unrated) return std::nullopt;
      const VeracityLabel v = operationalize_veracity(a);
      if (v == VeracityLabel::excluded) return std::nullopt;
      return std::string(to_string(v));
    }
    case Task::satire:
      if (a.orientation == Orientation::satire) return "satire";
      if (a.rating == Rating::mostly_true || a.rating == Rating::unrated) return "real";
      return std::nullopt;
    case Task::unmask_orientations:
    case Task::unmask_satire:
      break;
  }
  throw UsageError("task '" + std::string(to_string(task)) + "' has no class labels");
}

ExperimentConfig ExperimentConfig::from_json(const json& overrides) {
  return from_json(overrides, ExperimentConfig{});
}

// -- context -------------------------------------------------------------------

struct ExperimentContext::Cache {
  std::map<std::tuple<FeatureModel, int, int>, std::vector<DocumentProfile>> profiles;
  std::optional<std::vector<WordBag>> word_bags;
};

ExperimentContext::ExperimentContext(Corpus corpus, std::optional<Corpus> satire_corpus,
                                     FeatureResources resources, std::size_t threads)
    : corpus_(std::move(corpus)),
      satire_(std::move(satire_corpus)),
      resources_(resources),
      threads_(threads == 0 ? default_threads() : threads),
      cache_(std::make_unique<Cache>()) {
  std::set<std::string> ids;
  for (std::size_t i = 0; i < pool_size(); ++i) {
    if (!ids.insert(pool_article(i).id).second) {
      throw DataError("duplicate article id '" + pool_article(i).id + "'");
    }
  }
}

ExperimentContext::~ExperimentContext() = default;

std::size_t ExperimentContext::pool_size() const {
  return corpus_.size() + (satire_ ? satire_->size() : 0);
}

const Article& ExperimentContext::pool_article(std::size_t index) const {
  return index < corpus_.size() ? corpus_[index] : (*satire_)[index - corpus_.size()];
}

const std::vector<DocumentProfile>& ExperimentContext::profiles(FeatureModel model, int min_n,
                                                                int max_n) {
  const auto key = std::make_tuple(model, min_n, max_n);
  if (const auto it = cache_->profiles.find(key); it != cache_->profiles.end()) return it->second;
  ExtractionConfig config = ExtractionConfig::for_model(model);
  config.min_n = min_n;
  config.max_n = max_n;
  std::vector<DocumentProfile> all = extract_profiles(corpus_, config, resources_, space_, threads_);
  if (satire_) {
    auto more = extract_profiles(*satire_, config, resources_, space_, threads_);
    all.insert(all.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }
  return cache_->profiles.emplace(key, std::move(all)).first->second;
}

const std::vector<WordBag>& ExperimentContext::word_bags() {
  if (!cache_->word_bags) {
    std::vector<WordBag> bags(pool_size());
    parallel_for(
        pool_size(),
        [&](std::size_t i) { bags[i] = make_word_bag(resources_.tokenizer->tokenize(pool_article(i))); },
        threads_);
    cache_->word_bags = std::move(bags);
  }
  return *cache_->word_bags;
}

const AveragedReport* ClassificationResult::report_for(FeatureModel model) const {
  for (const ModelRow& row : models) {
    if (row.model == model) return &row.report;
  }
  return nullptr;
}

const OmissionResult::Cell* OmissionResult::cell(std::string_view training, FeatureModel model) const {
  for (const Cell& c : cells) {
    if (c.training == training && c.model == model) return &c;
  }
  return nullptr;
}

// -- tasks -----------------------------------------------------------------------

OmissionResult run_hyperpartisan_omission(ExperimentContext& context, const ExperimentSpec& spec) {
  const std::vector<Item> items = main_items(context, hyperpartisan_label);
  require_orientations(items, {Orientation::left, Orientation::right, Orientation::mainstream});
  const auto fold_of = publisher_folds(context.corpus(), spec.config.folds,
                                       derive_seed(spec.seed, kFoldStream));
  const auto splits = publisher_splits(items, fold_of, spec.config.folds);
  const auto cv = cv_items(items);
  const std::vector<std::string> classes = sorted_labels(items);
  const PipelineConfig config = pipeline(spec, true);

  OmissionResult result;
  const std::array<std::pair<std::string_view, std::optional<Orientation>>, 3> variants = {{
      {"without_left", Orientation::left},
      {"without_right", Orientation::right},
      {"with_both", std::nullopt},
  }};
  for (const FeatureModel model : spec.config.models) {
    const auto& profiles = context.profiles(model, spec.config.min_n, spec.config.max_n);
    for (const auto& [name, omitted] : variants) {
      std::array<double, 3> sums{};  // left, right, mainstream
      std::array<std::size_t, 3> defined{};
      for (std::size_t f = 0; f < splits.size(); ++f) {
        FoldSplit split;
        split.test = splits[f].test;
        for (const std::size_t i : splits[f].train) {
          if (!omitted || items[i].orientation != *omitted) split.train.push_back(i);
        }
        const FoldOutcome outcome =
            fit_and_predict(profiles, context.space(), cv, split, classes, config,
                            derive_seed(config.seed, f), &context.guard(),
                            std::string(name) + " fold " + std::to_string(f + 1), context.threads());
        std::array<std::size_t, 3> correct{};
        std::array<std::size_t, 3> total{};
        for (std::size_t t = 0; t < split.test.size(); ++t) {
          const Item& item = items[split.test[t]];
          const std::size_t slot = item.orientation == Orientation::left    ? 0
                                   : item.orientation == Orientation::right ? 1
                                                                            : 2;
          ++total[slot];
          if (outcome.predictions[t] == item.label) ++correct[slot];
        }
        for (std::size_t s = 0; s < 3; ++s) {
          if (total[s] == 0) continue;
          sums[s] += static_cast<double>(correct[s]) / static_cast<double>(total[s]);
          ++defined[s];
        }
      }
      auto mean = [&](std::size_t s) {
        return defined[s] == 0 ? 0.0 : sums[s] / static_cast<double>(defined[s]);
      };
      result.cells.push_back({std::string(name), model, mean(0), mean(1), mean(2)});
    }
  }
  return result;
}

ClassificationResult run_hyperpartisan_binary(ExperimentContext& context,
                                              const ExperimentSpec& spec) {
  const std::vector<Item> items = main_items(context, hyperpartisan_label);
  require_orientations(items, {Orientation::left, Orientation::right, Orientation::mainstream});
  ClassificationResult result = cv_classification(context, spec, items, true);
  add_baselines(result, items, {{"All-hyp.", "hyperpartisan"}, {"All-main.", "mainstream"}});
  add_style_over_topic(result);
  return result;
}

OrientationResult run_orientation(ExperimentContext& context, const ExperimentSpec& spec) {
  const std::vector<Item> items = main_items(
      context, [](const Article& a) { return std::optional<std::string>(to_string(a.orientation)); });
  require_orientations(items, {Orientation::left, Orientation::right, Orientation::mainstream});
  OrientationResult result;
  result.classification = cv_classification(context, spec, items, false);
  add_baselines(result.classification, items,
                {{"All-left", "left"}, {"All-right", "right"}, {"All-main.", "mainstream"}});
  for (const ModelRow& row : result.classification.models) {
    auto shares = misclassification_shares(row.report.confusion);
    const std::size_t left = row.report.class_index("left");
    const std::size_t right = row.report.class_index("right");
    const auto& share = shares[left][right];
    result.classification.checks.push_back(
        {std::string(to_string(row.model)) + " left misclassified as right share",
         share.has_value(), share ? std::to_string(*share) : "no misclassified left documents"});
    result.shares.emplace_back(row.model, std::move(shares));
  }
  return result;
}

VeracityResult run_veracity(ExperimentContext& context, const ExperimentSpec& spec, bool generic,
                            bool specific) {
  std::vector<Item> items = main_items(context, veracity_label);
  std::erase_if(items, [](const Item& i) { return i.orientation == Orientation::mainstream; });
  require_orientations(items, {Orientation::left, Orientation::right});
  const std::vector<std::string> classes = sorted_labels(items);
  if (classes.size() != 2) throw DataError("veracity task needs both fake and real articles");
  const std::vector<std::pair<std::string, std::string>> baselines = {{"All-fake", "fake"},
                                                                      {"All-real", "real"}};
  VeracityResult result;
  result.aggregation = spec.config.veracity_aggregation;
  if (generic) {
    ClassificationResult r = cv_classification(context, spec, items, false);
    add_baselines(r, items, baselines);
    add_style_over_topic(r);
    result.generic = std::move(r);
  }
  if (!specific) return result;

  const auto fold_of = publisher_folds(context.corpus(), spec.config.folds,
                                       derive_seed(spec.seed, kFoldStream));
  const auto cv = cv_items(items);
  const PipelineConfig config = pipeline(spec, false);
  ClassificationResult r;
  r.classes = classes;
  for (const FeatureModel model : spec.config.models) {
    const auto& profiles = context.profiles(model, spec.config.min_n, spec.config.max_n);
    std::vector<std::vector<std::string>> fold_predictions(spec.config.folds);
    std::vector<std::vector<std::string>> fold_gold(spec.config.folds);
    std::vector<EvaluationReport> wing_reports;
    for (const Orientation wing : {Orientation::left, Orientation::right}) {
      std::vector<std::vector<std::size_t>> folds(spec.config.folds);
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (items[i].orientation == wing) folds[fold_of.at(items[i].publisher)].push_back(i);
      }
      const auto splits = leave_one_fold_out(folds);
      for (std::size_t f = 0; f < splits.size(); ++f) {
        const FoldOutcome outcome =
            fit_and_predict(profiles, context.space(), cv, splits[f], classes, config,
                            derive_seed(config.seed, f), &context.guard(),
                            std::string(to_string(wing)) + " fold " + std::to_string(f + 1),
                            context.threads());
        wing_reports.push_back(outcome.report);
        for (std::size_t t = 0; t < splits[f].test.size(); ++t) {
          fold_predictions[f].push_back(outcome.predictions[t]);
          fold_gold[f].push_back(items[splits[f].test[t]].label);
        }
      }
    }
    if (spec.config.veracity_aggregation == VeracityAggregation::pooled) {
      std::vector<EvaluationReport> pooled;
      for (std::size_t f = 0; f < spec.config.folds; ++f) {
        pooled.push_back(evaluate(fold_predictions[f], fold_gold[f], classes));
      }
      r.models.push_back({model, average_reports(pooled)});
    } else {
      r.models.push_back({model, average_reports(wing_reports)});
    }
  }
  add_baselines(r, items, baselines);
  add_style_over_topic(r);
  result.orientation_specific = std::move(r);
  return result;
}

ClassificationResult run_satire(ExperimentContext& context, const ExperimentSpec& spec) {
  const Corpus* satire = context.satire_corpus();
  if (satire == nullptr) throw DataError("the satire task needs a satire corpus");
  std::vector<std::size_t> sat;
  std::vector<std::size_t> real;
  for (std::size_t i = 0; i < satire->size(); ++i) {
    const Article& a = (*satire)[i];
    const std::size_t pool = context.satire_offset() + i;
    if (a.orientation == Orientation::satire) {
      sat.push_back(pool);
    } else if (a.rating == Rating::mostly_true || a.rating == Rating::unrated) {
      real.push_back(pool);
    }
  }
  const std::size_t n = std::min({sat.size(), real.size(), spec.config.satire_per_class});
  if (n < 2) throw DataError("the satire task needs at least two satire and two real articles");

  Rng rng(derive_seed(spec.seed, kSatireSplitStream));
  std::vector<Item> items;
  FoldSplit split;
  const auto train_count = static_cast<std::size_t>(
      std::llround(spec.config.satire_train_fraction * static_cast<double>(n)));
  if (train_count == 0 || train_count >= n) throw DataError("satire split leaves one side empty");
  for (auto* group : {&real, &sat}) {
    rng.shuffle(std::span<std::size_t>(*group));
    group->resize(n);
    std::sort(group->begin(), group->end());
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(std::span<std::size_t>(order));
    for (std::size_t i = 0; i < n; ++i) {
      const Article& a = context.pool_article((*group)[order[i]]);
      (i < train_count ? split.train : split.test).push_back(items.size());
      items.push_back({(*group)[order[i]], group == &sat ? "satire" : "real", a.publisher,
                       a.orientation});
    }
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());

  const auto cv = cv_items(items);
  ClassificationResult result;
  result.classes = sorted_labels(items);
  PipelineConfig config = pipeline(spec, false);
  config.publisher_disjoint = false;
  for (const FeatureModel model : spec.config.models) {
    const auto& profiles = context.profiles(model, spec.config.min_n, spec.config.max_n);
    const FoldOutcome outcome = fit_and_predict(profiles, context.space(), cv, split, result.classes,
                                                config, config.seed, &context.guard(), "satire split",
                                                context.threads());
    result.models.push_back({model, average_reports(std::span<const EvaluationReport>(&outcome.report, 1))});
  }
  std::vector<Item> test_items;
  for (const std::size_t i : split.test) test_items.push_back(items[i]);
  add_baselines(result, test_items, {{"All-sat.", "satire"}, {"All-real", "real"}});
  add_style_over_topic(result);
  return result;
}

UnmaskingSuiteResult run_unmasking_suite(ExperimentContext& context, const ExperimentSpec& spec,
                                         bool satire_suite) {
  const auto& bags = context.word_bags();
  std::map<std::string, std::vector<WordBag>> sides;
  std::vector<std::pair<std::string, std::string>> pairs;
  if (!satire_suite) {
    for (std::size_t i = 0; i < context.corpus().size(); ++i) {
      const Article& a = context.corpus()[i];
      if (a.orientation != Orientation::satire) sides[std::string(to_string(a.orientation))].push_back(bags[i]);
    }
    pairs = {{"left", "right"}, {"left", "mainstream"}, {"right", "mainstream"}};
  } else {
    for (std::size_t i = 0; i < context.corpus().size(); ++i) {
      const Article& a = context.corpus()[i];
      if (a.orientation == Orientation::satire || a.rating == Rating::unrated) continue;
      const VeracityLabel v = operationalize_veracity(a);
      if (v != VeracityLabel::excluded) sides[std::string(to_string(v))].push_back(bags[i]);
    }
    if (const Corpus* satire = context.satire_corpus()) {
      for (std::size_t i = 0; i < satire->size(); ++i) {
        if ((*satire)[i].orientation == Orientation::satire) {
          sides["satire"].push_back(bags[context.satire_offset() + i]);
        }
      }
    }
    pairs = {{"fake", "real"}, {"fake", "satire"}, {"real", "satire"}};
  }
  std::string missing;
  for (const auto& [a, b] : pairs) {
    for (const std::string& side : {a, b}) {
      if (sides[side].empty() && missing.find(side) == std::string::npos) {
        missing += (missing.empty() ? "" : ", ") + side;
      }
    }
  }
  if (!missing.empty()) throw DataError("unmasking suite lacks documents for: " + missing);

  UnmaskingSuiteResult result;
  result.suite = satire_suite ? "satire" : "orientations";
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    UnmaskingConfig config = spec.config.unmasking;
    config.seed = derive_seed(spec.seed, kUnmaskingStream + p);
    result.curves.push_back(unmask_pair(sides[pairs[p].first], sides[pairs[p].second], config,
                                        pairs[p].first, pairs[p].second, context.threads()));
    result.slopes.push_back(curve_slope_statistic(result.curves.back()));
  }
  auto detail = [&] {
    std::string d;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      d += (p ? ", " : "") + pairs[p].first + "-" + pairs[p].second + " " + std::to_string(result.slopes[p]);
    }
    return d;
  };
  if (!satire_suite) {
    result.checks.push_back({"left-right slope below both cross-pair slopes",
                             result.slopes[0] < result.slopes[1] && result.slopes[0] < result.slopes[2],
                             detail()});
  } else {
    result.checks.push_back({"fake-real curve decreases slowest",
                             result.slopes[0] > result.slopes[1] && result.slopes[0] > result.slopes[2],
                             detail()});
  }
  return result;
}

}  // namespace newsstyle
