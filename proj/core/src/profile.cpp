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

#include "newsstyle/error.hpp"
#include "newsstyle/features.hpp"
#include "newsstyle/parallel.hpp"

namespace newsstyle {
namespace {

void add_relative(std::vector<std::pair<std::string, double>>& out, const GramCounts& grams,
                  std::string_view prefix) {
  std::size_t total = 0;
  for (const auto& [gram, count] : grams) total += count;
  if (total == 0) return;
  const double denominator = static_cast<double>(total);
  for (const auto& [gram, count] : grams) {
    std::string id(prefix);
    id += gram;
    out.emplace_back(std::move(id), static_cast<double>(count) / denominator);
  }
}

std::string order_prefix(std::string_view family, int n) {
  std::string prefix(family);
  prefix += static_cast<char>('0' + n);
  prefix += ':';
  return prefix;
}

}  // namespace

std::string_view to_string(FeatureModel model) {
  return model == FeatureModel::style ? "style" : "topic";
}

std::optional<FeatureModel> parse_feature_model(std::string_view name) {
  if (name == "style") return FeatureModel::style;
  if (name == "topic") return FeatureModel::topic;
  return std::nullopt;
}

ExtractionConfig ExtractionConfig::for_model(FeatureModel model) {
  ExtractionConfig config;
  if (model == FeatureModel::topic) {
    config.families[static_cast<std::size_t>(FeatureFamily::bow)] = true;
    return config;
  }
  for (const FeatureFamily f : {FeatureFamily::char_ngram, FeatureFamily::stop_ngram,
                                FeatureFamily::pos_ngram, FeatureFamily::readability,
                                FeatureFamily::dictionary, FeatureFamily::domain}) {
    config.families[static_cast<std::size_t>(f)] = true;
  }
  return config;
}

FeatureResources FeatureResources::standard() {
  FeatureResources resources;
  resources.tokenizer = &Tokenizer::standard();
  resources.tagger = &LexiconTagger::standard();
  resources.stopwords = &standard_stopwords();
  resources.dictionaries = &Dictionaries::standard();
  return resources;
}

RawProfile extract_profile(const Article& article, const ExtractionConfig& config,
                           const FeatureResources& resources) {
  if (config.min_n < 1 || config.max_n > 3 || config.min_n > config.max_n) {
    throw UsageError("n-gram range must satisfy 1 <= min_n <= max_n <= 3");
  }
  if (resources.tokenizer == nullptr) throw UsageError("feature extraction needs a tokenizer");
  RawProfile profile;
  profile.doc_id = article.id;
  for (std::size_t f = 0; f < kFeatureFamilyCount; ++f) {
    if (config.families[f]) profile.family_mask |= 1U << f;
  }

  TokenizedDocument doc = resources.tokenizer->tokenize(article);
  auto& values = profile.values;

  for (int n = config.min_n; n <= config.max_n; ++n) {
    if (config.has(FeatureFamily::char_ngram)) {
      add_relative(values, char_ngrams(article.paragraphs, n), order_prefix("char", n));
    }
    if (config.has(FeatureFamily::stop_ngram)) {
      if (resources.stopwords == nullptr) throw UsageError("stop-word n-grams need a stop-word list");
      add_relative(values, stopword_ngrams(doc, n, *resources.stopwords), order_prefix("stop", n));
    }
  }
  if (config.has(FeatureFamily::pos_ngram)) {
    if (resources.tagger == nullptr) throw UsageError("POS n-grams need a tagger");
    resources.tagger->tag(doc);
    for (int n = config.min_n; n <= config.max_n; ++n) {
      add_relative(values, pos_ngrams(doc, n), order_prefix("pos", n));
    }
  }
  if (config.has(FeatureFamily::readability)) {
    const ReadabilityCounts counts = readability_counts(doc);
    ReadabilityScores scores{};
    if (counts.words > 0 && counts.sentences > 0) scores = readability_scores(counts);
    for (std::size_t i = 0; i < kReadabilityCount; ++i) {
      values.emplace_back("read:" + std::string(kReadabilityNames[i]), scores[i]);
    }
  }
  if (config.has(FeatureFamily::dictionary)) {
    if (resources.dictionaries == nullptr) throw UsageError("dictionary features need a dictionary");
    const auto& categories = resources.dictionaries->categories();
    const std::vector<double> fractions = dictionary_features(doc, *resources.dictionaries);
    for (std::size_t c = 0; c < categories.size(); ++c) {
      if (fractions[c] > 0.0) values.emplace_back("dict:" + categories[c], fractions[c]);
    }
  }
  if (config.has(FeatureFamily::domain)) {
    const DomainFeatures d = domain_features(article, doc);
    values.emplace_back("dom:quoted_ratio", d.quoted_ratio);
    values.emplace_back("dom:external_link_ratio", d.external_link_ratio);
    values.emplace_back("dom:paragraph_count", d.paragraph_count);
    values.emplace_back("dom:mean_paragraph_length", d.mean_paragraph_length);
  }
  if (config.has(FeatureFamily::bow)) add_relative(values, word_unigrams(doc), "bow:");

  std::sort(values.begin(), values.end());
  return profile;
}

FeatureId FeatureSpace::intern(std::string_view name) {
  if (const auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
  const auto family = family_of(name);
  if (!family) throw DataError("feature id '" + std::string(name) + "' has no known family");
  const auto id = static_cast<FeatureId>(names_.size());
  names_.emplace_back(name);
  families_.push_back(*family);
  ids_.emplace(names_.back(), id);
  return id;
}

std::optional<FeatureId> FeatureSpace::find(std::string_view name) const {
  const auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

DocumentProfile intern_profile(const RawProfile& raw, FeatureSpace& space) {
  DocumentProfile profile;
  profile.doc_id = raw.doc_id;
  profile.family_mask = raw.family_mask;
  profile.values.reserve(raw.values.size());
  for (const auto& [name, value] : raw.values) profile.values.emplace_back(space.intern(name), value);
  std::sort(profile.values.begin(), profile.values.end());
  return profile;
}

std::vector<DocumentProfile> extract_profiles(std::span<const Article> articles,
                                              const ExtractionConfig& config,
                                              const FeatureResources& resources,
                                              FeatureSpace& space, std::size_t threads) {
  std::vector<RawProfile> raw(articles.size());
  parallel_for(
      articles.size(), [&](std::size_t i) { raw[i] = extract_profile(articles[i], config, resources); },
      threads);
  std::vector<DocumentProfile> profiles;
  profiles.reserve(raw.size());
  for (const RawProfile& r : raw) profiles.push_back(intern_profile(r, space));
  return profiles;
}

}  // namespace newsstyle
