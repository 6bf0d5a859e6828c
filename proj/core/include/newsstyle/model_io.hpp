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

#ifndef NEWSSTYLE_MODEL_IO_HPP_
#define NEWSSTYLE_MODEL_IO_HPP_

#include <filesystem>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "newsstyle/forest.hpp"
#include "newsstyle/linear.hpp"

namespace newsstyle {

// Self-describing model container. The vocabulary is stored separately; its
// checksum pins the pairing.
struct ModelFile {
  static constexpr int kFormatVersion = 1;

  std::string task;
  std::string feature_model;
  std::string vocabulary_checksum;
  // Linear models separate classes[0] (margin >= 0) from classes[1].
  std::vector<std::string> classes;
  std::variant<ForestModel, LinearModel> model;
};

nlohmann::json forest_to_json(const ForestModel& model);
ForestModel forest_from_json(const nlohmann::json& j);
nlohmann::json linear_to_json(const LinearModel& model);
LinearModel linear_from_json(const nlohmann::json& j);

void save_model(const std::filesystem::path& path, const ModelFile& file);
// Throws DataError for unreadable or malformed files.
ModelFile load_model(const std::filesystem::path& path);

// Throws DataError unless the checksums agree.
void require_matching_vocabulary(const ModelFile& file, const FeatureVocabulary& vocabulary);

// Class label predicted by either model kind.
std::string predict_label(const ModelFile& file, const FeatureVector& x);

}  // namespace newsstyle

#endif  // NEWSSTYLE_MODEL_IO_HPP_
