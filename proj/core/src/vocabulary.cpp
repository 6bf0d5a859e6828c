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
#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include "newsstyle/checksum.hpp"
#include "newsstyle/error.hpp"
#include "newsstyle/features.hpp"

namespace newsstyle {
namespace {

// Slack for comparing docfreq against fraction * N so that 10% of 30
// documents keeps features in exactly 3 of them.
constexpr double kThresholdSlack = 1e-9;

struct Candidate {
  std::size_t document_frequency = 0;
  std::vector<std::size_t> presence;
  double sum = 0.0;
  double sum_sq = 0.0;
};

}  // namespace

FeatureVocabulary::FeatureVocabulary(std::vector<VocabularyEntry> entries,
                                     std::vector<std::string> categories,
                                     std::vector<std::string> training_ids,
                                     SelectionConfig selection)
    : entries_(std::move(entries)),
      categories_(std::move(categories)),
      training_ids_(std::move(training_ids)),
      selection_(selection) {
  std::sort(training_ids_.begin(), training_ids_.end());
  index();
}

void FeatureVocabulary::index() {
  lookup_.clear();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!lookup_.emplace(entries_[i].id, i).second) {
      throw DataError("duplicate vocabulary entry '" + entries_[i].id + "'");
    }
  }
}

std::optional<std::size_t> FeatureVocabulary::index_of(std::string_view id) const {
  const auto it = lookup_.find(std::string(id));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

bool FeatureVocabulary::uses_family(FeatureFamily family) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const VocabularyEntry& e) { return e.family == family; });
}

nlohmann::json FeatureVocabulary::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const VocabularyEntry& e : entries_) {
    entries.push_back({{"id", e.id},
                       {"family", to_string(e.family)},
                       {"document_frequency", e.document_frequency},
                       {"category_presence", e.category_presence},
                       {"mean", e.mean},
                       {"scale", e.scale}});
  }
  return {{"format_version", kFormatVersion},
          {"categories", categories_},
          {"selection",
           {{"min_document_fraction", selection_.min_document_fraction},
            {"min_categories", selection_.min_categories}}},
          {"training_ids", training_ids_},
          {"entries", std::move(entries)}};
}

FeatureVocabulary FeatureVocabulary::from_json(const nlohmann::json& j) {
  try {
    if (j.at("format_version").get<int>() != kFormatVersion) {
      throw DataError("unsupported vocabulary format version");
    }
    std::vector<VocabularyEntry> entries;
    for (const auto& e : j.at("entries")) {
      VocabularyEntry entry;
      entry.id = e.at("id").get<std::string>();
      const auto family = parse_feature_family(e.at("family").get<std::string>());
      if (!family) throw DataError("unknown feature family in vocabulary entry " + entry.id);
      entry.family = *family;
      entry.document_frequency = e.at("document_frequency").get<std::size_t>();
      entry.category_presence = e.at("category_presence").get<std::vector<std::size_t>>();
      entry.mean = e.at("mean").get<double>();
      entry.scale = e.at("scale").get<double>();
      entries.push_back(std::move(entry));
    }
    SelectionConfig selection;
    selection.min_document_fraction = j.at("selection").at("min_document_fraction").get<double>();
    selection.min_categories = j.at("selection").at("min_categories").get<std::size_t>();
    return FeatureVocabulary(std::move(entries), j.at("categories").get<std::vector<std::string>>(),
                             j.at("training_ids").get<std::vector<std::string>>(), selection);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed vocabulary: ") + e.what());
  }
}

std::string FeatureVocabulary::checksum() const { return sha256_hex(to_json().dump()); }

void FeatureVocabulary::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write vocabulary " + path.string());
  out << to_json().dump(1) << '\n';
}

FeatureVocabulary FeatureVocabulary::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read vocabulary " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(path.string() + ": " + e.what());
  }
  return from_json(j);
}

FeatureVocabulary build_vocabulary(std::span<const DocumentProfile* const> docs,
                                   std::span<const std::string> categories,
                                   const FeatureSpace& space, const SelectionConfig& selection) {
  if (docs.size() != categories.size()) {
    throw DataError("build_vocabulary: one category per document is required");
  }
  const std::set<std::string> distinct(categories.begin(), categories.end());
  if (distinct.size() < 2) throw DataError("build_vocabulary needs at least two categories");
  const std::vector<std::string> names(distinct.begin(), distinct.end());
  std::vector<std::size_t> category_of(docs.size());
  for (std::size_t d = 0; d < docs.size(); ++d) {
    category_of[d] = static_cast<std::size_t>(
        std::lower_bound(names.begin(), names.end(), categories[d]) - names.begin());
  }

  std::map<FeatureId, Candidate> candidates;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    const DocumentProfile& doc = *docs[d];
    for (const auto& [id, value] : doc.values) {
      if (value == 0.0 && !is_scalar_family(space.family(id))) continue;
      Candidate& c = candidates[id];
      if (c.presence.empty()) c.presence.assign(names.size(), 0);
      ++c.document_frequency;
      ++c.presence[category_of[d]];
      c.sum += value;
      c.sum_sq += value * value;
    }
  }

  const double n = static_cast<double>(docs.size());
  std::vector<VocabularyEntry> entries;
  for (const auto& [id, c] : candidates) {
    const FeatureFamily family = space.family(id);
    VocabularyEntry entry;
    entry.id = space.name(id);
    entry.family = family;
    entry.document_frequency = c.document_frequency;
    entry.category_presence = c.presence;
    if (is_scalar_family(family)) {
      // Documents without the value contribute a raw zero.
      const double mean = c.sum / n;
      const double variance = std::max(0.0, c.sum_sq / n - mean * mean);
      entry.mean = mean;
      entry.scale = variance > 0.0 ? std::sqrt(variance) : 1.0;
    } else {
      const std::size_t present_in = static_cast<std::size_t>(
          std::count_if(c.presence.begin(), c.presence.end(), [](std::size_t p) { return p > 0; }));
      if (static_cast<double>(c.document_frequency) + kThresholdSlack <
              selection.min_document_fraction * n ||
          present_in < selection.min_categories) {
        continue;
      }
    }
    entries.push_back(std::move(entry));
  }
  std::sort(entries.begin(), entries.end(), [](const VocabularyEntry& a, const VocabularyEntry& b) {
    if (a.family != b.family) return a.family < b.family;
    return a.id < b.id;
  });

  std::vector<std::string> training_ids;
  training_ids.reserve(docs.size());
  for (const DocumentProfile* doc : docs) training_ids.push_back(doc->doc_id);
  return FeatureVocabulary(std::move(entries), names, std::move(training_ids), selection);
}

double FeatureVector::value_at(std::size_t index) const {
  const auto it = std::lower_bound(indices.begin(), indices.end(), static_cast<std::uint32_t>(index));
  if (it == indices.end() || *it != index) return 0.0;
  return values[static_cast<std::size_t>(it - indices.begin())];
}

namespace {

FeatureVector finish(std::vector<std::pair<std::uint32_t, double>>& cells, std::size_t dimension) {
  std::sort(cells.begin(), cells.end());
  FeatureVector v;
  v.dimension = dimension;
  for (const auto& [index, value] : cells) {
    if (value == 0.0) continue;
    v.indices.push_back(index);
    v.values.push_back(value);
  }
  return v;
}

}  // namespace

Vectorizer::Vectorizer(const FeatureVocabulary& vocabulary, const FeatureSpace& space)
    : vocabulary_(vocabulary), space_to_index_(space.size(), -1) {
  for (std::size_t i = 0; i < vocabulary.size(); ++i) {
    const VocabularyEntry& e = vocabulary.entries()[i];
    required_mask_ |= 1U << static_cast<unsigned>(e.family);
    if (const auto id = space.find(e.id)) space_to_index_[*id] = static_cast<std::int32_t>(i);
  }
}

FeatureVector Vectorizer::operator()(const DocumentProfile& profile) const {
  if ((profile.family_mask & required_mask_) != required_mask_) {
    throw DataError("document " + profile.doc_id + " lacks a feature family the vocabulary uses");
  }
  const auto& entries = vocabulary_.entries();
  std::vector<double> scalars(entries.size(), 0.0);
  std::vector<bool> scalar_seen(entries.size(), false);
  std::vector<std::pair<std::uint32_t, double>> cells;
  for (const auto& [id, value] : profile.values) {
    if (id >= space_to_index_.size() || space_to_index_[id] < 0) continue;
    const auto index = static_cast<std::uint32_t>(space_to_index_[id]);
    const VocabularyEntry& e = entries[index];
    if (is_scalar_family(e.family)) {
      scalar_seen[index] = true;
      cells.emplace_back(index, (value - e.mean) / e.scale);
    } else {
      cells.emplace_back(index, value);
    }
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (is_scalar_family(entries[i].family) && !scalar_seen[i]) {
      cells.emplace_back(static_cast<std::uint32_t>(i), -entries[i].mean / entries[i].scale);
    }
  }
  return finish(cells, entries.size());
}

FeatureVector vectorize(const DocumentProfile& profile, const FeatureVocabulary& vocabulary,
                        const FeatureSpace& space) {
  return Vectorizer(vocabulary, space)(profile);
}

FeatureVector vectorize(const RawProfile& profile, const FeatureVocabulary& vocabulary) {
  std::uint32_t required = 0;
  for (const VocabularyEntry& e : vocabulary.entries()) required |= 1U << static_cast<unsigned>(e.family);
  if ((profile.family_mask & required) != required) {
    throw DataError("document " + profile.doc_id + " lacks a feature family the vocabulary uses");
  }
  const auto& entries = vocabulary.entries();
  std::vector<bool> scalar_seen(entries.size(), false);
  std::vector<std::pair<std::uint32_t, double>> cells;
  for (const auto& [name, value] : profile.values) {
    const auto index = vocabulary.index_of(name);
    if (!index) continue;
    const VocabularyEntry& e = entries[*index];
    if (is_scalar_family(e.family)) {
      scalar_seen[*index] = true;
      cells.emplace_back(static_cast<std::uint32_t>(*index), (value - e.mean) / e.scale);
    } else {
      cells.emplace_back(static_cast<std::uint32_t>(*index), value);
    }
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (is_scalar_family(entries[i].family) && !scalar_seen[i]) {
      cells.emplace_back(static_cast<std::uint32_t>(i), -entries[i].mean / entries[i].scale);
    }
  }
  return finish(cells, entries.size());
}

}  // namespace newsstyle
