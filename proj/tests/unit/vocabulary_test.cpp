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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <set>

#include "newsstyle/error.hpp"
#include "newsstyle/features.hpp"
#include "newsstyle/random.hpp"
#include "test_support.hpp"

namespace newsstyle {
namespace {

constexpr std::uint32_t kAllFamilies = (1U << kFeatureFamilyCount) - 1;

struct RandomTraining {
  FeatureSpace space;
  std::vector<DocumentProfile> profiles;
  std::vector<std::string> categories;
};

// Documents with a skewed draw of gram features plus one scalar feature.
RandomTraining random_training(std::uint64_t seed, std::size_t docs, std::size_t features) {
  RandomTraining t;
  Rng rng(seed);
  const std::array<std::string, 3> names = {"left", "mainstream", "right"};
  for (std::size_t d = 0; d < docs; ++d) {
    std::map<std::string, double> values;
    const std::size_t draws = 3 + rng.uniform_index(15);
    for (std::size_t i = 0; i < draws; ++i) {
      const double u = rng.uniform01();
      values["char2:f" + std::to_string(static_cast<std::size_t>(u * u * u * features))] += 1.0;
    }
    if (rng.uniform01() < 0.8) values["read:lix"] = 20.0 + 10.0 * rng.uniform01();
    RawProfile raw;
    raw.doc_id = "d" + std::to_string(d);
    raw.family_mask = kAllFamilies;
    raw.values.assign(values.begin(), values.end());
    t.profiles.push_back(intern_profile(raw, t.space));
    t.categories.push_back(names[rng.uniform_index(names.size())]);
  }
  return t;
}

std::vector<const DocumentProfile*> pointers(const std::vector<DocumentProfile>& profiles) {
  std::vector<const DocumentProfile*> out;
  for (const auto& p : profiles) out.push_back(&p);
  return out;
}

// Brute-force selection of the gram features.
std::set<std::string> brute_force_selection(const RandomTraining& t, double fraction,
                                            std::size_t min_categories) {
  std::map<std::string, std::set<std::size_t>> docs_with;
  std::map<std::string, std::set<std::string>> categories_with;
  for (std::size_t d = 0; d < t.profiles.size(); ++d) {
    for (const auto& [id, value] : t.profiles[d].values) {
      const std::string& name = t.space.name(id);
      if (name.rfind("char", 0) != 0) continue;
      docs_with[name].insert(d);
      categories_with[name].insert(t.categories[d]);
    }
  }
  std::set<std::string> kept;
  for (const auto& [name, docs] : docs_with) {
    if (static_cast<double>(docs.size()) * 1.0 >= fraction * static_cast<double>(t.profiles.size()) - 1e-9 &&
        categories_with[name].size() >= min_categories) {
      kept.insert(name);
    }
  }
  return kept;
}

TEST(Vocabulary, MatchesBruteForceSelection) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const RandomTraining t = random_training(seed, 30 + seed * 7, 60);
    const auto docs = pointers(t.profiles);
    for (const auto& [fraction, min_categories] :
         std::vector<std::pair<double, std::size_t>>{{0.10, 2}, {0.25, 3}, {0.0, 1}}) {
      SelectionConfig selection;
      selection.min_document_fraction = fraction;
      selection.min_categories = min_categories;
      const FeatureVocabulary v = build_vocabulary(docs, t.categories, t.space, selection);
      std::set<std::string> grams;
      for (const auto& e : v.entries()) {
        if (e.family == FeatureFamily::char_ngram) grams.insert(e.id);
      }
      EXPECT_EQ(grams, brute_force_selection(t, fraction, min_categories)) << "seed " << seed;
      EXPECT_TRUE(v.index_of("read:lix").has_value());
    }
  }
}

TEST(Vocabulary, TenPercentOfThirtyKeepsThree) {
  FeatureSpace space;
  std::vector<DocumentProfile> profiles;
  std::vector<std::string> categories;
  for (int d = 0; d < 30; ++d) {
    RawProfile raw;
    raw.doc_id = "d" + std::to_string(d);
    raw.family_mask = kAllFamilies;
    if (d < 3) raw.values.emplace_back("bow:three", 1.0);
    if (d < 2) raw.values.emplace_back("bow:two", 1.0);
    raw.values.emplace_back("bow:zz", 1.0);
    std::sort(raw.values.begin(), raw.values.end());
    profiles.push_back(intern_profile(raw, space));
    categories.push_back(d % 2 == 0 ? "a" : "b");
  }
  const FeatureVocabulary v = build_vocabulary(pointers(profiles), categories, space);
  EXPECT_TRUE(v.index_of("bow:three"));
  EXPECT_FALSE(v.index_of("bow:two"));
  EXPECT_EQ(v.entries()[*v.index_of("bow:three")].category_presence,
            (std::vector<std::size_t>{2, 1}));
}

TEST(Vocabulary, SingleCategoryFeatureIsDropped) {
  FeatureSpace space;
  std::vector<DocumentProfile> profiles;
  std::vector<std::string> categories;
  for (int d = 0; d < 10; ++d) {
    RawProfile raw;
    raw.doc_id = "d" + std::to_string(d);
    raw.family_mask = kAllFamilies;
    raw.values.emplace_back(d < 5 ? "bow:only_a" : "bow:only_b", 1.0);
    raw.values.emplace_back("bow:shared", 1.0);
    profiles.push_back(intern_profile(raw, space));
    categories.push_back(d < 5 ? "a" : "b");
  }
  const FeatureVocabulary v = build_vocabulary(pointers(profiles), categories, space);
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v.entries()[0].id, "bow:shared");
  const std::vector<std::string> one(10, "a");
  EXPECT_THROW(build_vocabulary(pointers(profiles), one, space), DataError);
  const std::vector<std::string> short_list(3, "a");
  EXPECT_THROW(build_vocabulary(pointers(profiles), short_list, space), DataError);
}

TEST(Vocabulary, ScalarFeaturesAreStandardizedOnTraining) {
  const RandomTraining t = random_training(4, 80, 40);
  const auto docs = pointers(t.profiles);
  const FeatureVocabulary v = build_vocabulary(docs, t.categories, t.space);
  const std::size_t lix = *v.index_of("read:lix");
  const Vectorizer vectorize_doc(v, t.space);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const auto& p : t.profiles) {
    const double x = vectorize_doc(p).value_at(lix);
    sum += x;
    sum_sq += x * x;
  }
  const double n = static_cast<double>(t.profiles.size());
  EXPECT_NEAR(sum / n, 0.0, 1e-9);
  EXPECT_NEAR(sum_sq / n, 1.0, 1e-9);
}

TEST(Vocabulary, VectorsAreSparseSortedAndAgreeAcrossPaths) {
  const RandomTraining t = random_training(9, 60, 50);
  const FeatureVocabulary v = build_vocabulary(pointers(t.profiles), t.categories, t.space);
  const Vectorizer vectorize_doc(v, t.space);
  for (const auto& p : t.profiles) {
    const FeatureVector a = vectorize_doc(p);
    EXPECT_EQ(a.dimension, v.size());
    EXPECT_TRUE(std::is_sorted(a.indices.begin(), a.indices.end()));
    EXPECT_EQ(std::adjacent_find(a.indices.begin(), a.indices.end()), a.indices.end());
    for (const double x : a.values) EXPECT_NE(x, 0.0);
    RawProfile raw;
    raw.doc_id = p.doc_id;
    raw.family_mask = p.family_mask;
    for (const auto& [id, value] : p.values) raw.values.emplace_back(t.space.name(id), value);
    EXPECT_EQ(vectorize(raw, v), a);
  }
}

TEST(Vocabulary, MissingFamilyIsDataError) {
  const RandomTraining t = random_training(2, 40, 30);
  const FeatureVocabulary v = build_vocabulary(pointers(t.profiles), t.categories, t.space);
  DocumentProfile p = t.profiles[0];
  p.family_mask = 1U << static_cast<unsigned>(FeatureFamily::bow);
  EXPECT_THROW(vectorize(p, v, t.space), DataError);
}

TEST(Vocabulary, JsonRoundTripKeepsChecksum) {
  const RandomTraining t = random_training(5, 50, 40);
  const FeatureVocabulary v = build_vocabulary(pointers(t.profiles), t.categories, t.space);
  const auto path = std::filesystem::temp_directory_path() / "newsstyle_vocabulary_test.json";
  v.save(path);
  const FeatureVocabulary loaded = FeatureVocabulary::load(path);
  std::filesystem::remove(path);
  EXPECT_EQ(loaded, v);
  EXPECT_EQ(loaded.checksum(), v.checksum());
  EXPECT_EQ(v.checksum().size(), 64U);
  EXPECT_TRUE(std::is_sorted(v.training_ids().begin(), v.training_ids().end()));

  nlohmann::json j = v.to_json();
  j["entries"][0]["document_frequency"] = 999;
  EXPECT_NE(FeatureVocabulary::from_json(j).checksum(), v.checksum());
  j["format_version"] = 7;
  EXPECT_THROW(FeatureVocabulary::from_json(j), DataError);
  EXPECT_THROW(FeatureVocabulary::from_json(nlohmann::json::object()), DataError);
  EXPECT_THROW(FeatureVocabulary::load("/nonexistent/vocabulary.json"), DataError);
}

TEST(Vocabulary, EntriesOrderedByFamilyThenId) {
  const Corpus corpus = testing::fact_checked_shaped_corpus(3);
  std::vector<Article> sample;
  for (std::size_t i = 0; i < corpus.size(); i += 8) sample.push_back(corpus[i]);
  FeatureSpace space;
  const auto profiles = extract_profiles(sample, ExtractionConfig::for_model(FeatureModel::style),
                                         FeatureResources::standard(), space, 2);
  std::vector<std::string> categories;
  for (const auto& a : sample) categories.emplace_back(to_string(a.orientation));
  const FeatureVocabulary v = build_vocabulary(pointers(profiles), categories, space);
  ASSERT_GT(v.size(), 10U);
  for (std::size_t i = 1; i < v.size(); ++i) {
    const auto& a = v.entries()[i - 1];
    const auto& b = v.entries()[i];
    EXPECT_TRUE(a.family < b.family || (a.family == b.family && a.id < b.id));
  }
  for (const FeatureFamily f : {FeatureFamily::char_ngram, FeatureFamily::stop_ngram,
                                FeatureFamily::pos_ngram, FeatureFamily::readability,
                                FeatureFamily::domain}) {
    EXPECT_TRUE(v.uses_family(f)) << to_string(f);
  }
  EXPECT_FALSE(v.uses_family(FeatureFamily::bow));
}

}  // namespace
}  // namespace newsstyle
