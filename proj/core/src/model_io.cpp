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

#include "newsstyle/model_io.hpp"

#include <fstream>

#include "newsstyle/error.hpp"

namespace newsstyle {

using nlohmann::json;

namespace {

json forest_config_json(const ForestConfig& c) {
  return {{"trees", c.trees},
          {"max_depth", c.max_depth},
          {"features_per_split", c.features_per_split},
          {"min_samples_split", c.min_samples_split},
          {"bootstrap", c.bootstrap},
          {"seed", c.seed}};
}

}  // namespace

// Internal node: [feature, threshold, left, right]. Leaf: class distribution.
json forest_to_json(const ForestModel& model) {
  json trees = json::array();
  for (const DecisionTree& tree : model.trees) {
    json nodes = json::array();
    for (const TreeNode& node : tree.nodes) {
      if (node.feature < 0) {
        nodes.push_back({{"leaf", node.distribution}});
      } else {
        nodes.push_back(json::array({node.feature, node.threshold, node.left, node.right}));
      }
    }
    trees.push_back(std::move(nodes));
  }
  return {{"config", forest_config_json(model.config)},
          {"dimension", model.dimension},
          {"classes", model.classes},
          {"trees", std::move(trees)}};
}

ForestModel forest_from_json(const json& j) {
  ForestModel model;
  try {
    const json& c = j.at("config");
    model.config.trees = c.at("trees").get<std::size_t>();
    model.config.max_depth = c.at("max_depth").get<std::size_t>();
    model.config.features_per_split = c.at("features_per_split").get<std::size_t>();
    model.config.min_samples_split = c.at("min_samples_split").get<std::size_t>();
    model.config.bootstrap = c.at("bootstrap").get<bool>();
    model.config.seed = c.at("seed").get<std::uint64_t>();
    model.dimension = j.at("dimension").get<std::size_t>();
    model.classes = j.at("classes").get<std::vector<std::string>>();
    for (const json& nodes : j.at("trees")) {
      DecisionTree tree;
      for (const json& n : nodes) {
        TreeNode node;
        if (n.is_object()) {
          node.distribution = n.at("leaf").get<std::vector<double>>();
          if (node.distribution.size() != model.classes.size()) {
            throw DataError("forest leaf has the wrong number of classes");
          }
        } else {
          node.feature = n.at(0).get<std::int32_t>();
          node.threshold = n.at(1).get<float>();
          node.left = n.at(2).get<std::int32_t>();
          node.right = n.at(3).get<std::int32_t>();
          if (node.feature < 0 || static_cast<std::size_t>(node.feature) >= model.dimension) {
            throw DataError("forest node feature out of range");
          }
        }
        tree.nodes.push_back(std::move(node));
      }
      const auto count = static_cast<std::int32_t>(tree.nodes.size());
      if (count == 0) throw DataError("forest tree has no nodes");
      for (const TreeNode& node : tree.nodes) {
        if (node.feature >= 0 && (node.left <= 0 || node.left >= count || node.right <= 0 ||
                                  node.right >= count)) {
          throw DataError("forest node child out of range");
        }
      }
      model.trees.push_back(std::move(tree));
    }
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed forest model: ") + e.what());
  }
  return model;
}

json linear_to_json(const LinearModel& model) {
  return {{"config",
           {{"lambda", model.config.lambda},
            {"epochs", model.config.epochs},
            {"seed", model.config.seed}}},
          {"bias", model.bias},
          {"weights", model.weights}};
}

LinearModel linear_from_json(const json& j) {
  LinearModel model;
  try {
    const json& c = j.at("config");
    model.config.lambda = c.at("lambda").get<double>();
    model.config.epochs = c.at("epochs").get<std::size_t>();
    model.config.seed = c.at("seed").get<std::uint64_t>();
    model.bias = j.at("bias").get<double>();
    model.weights = j.at("weights").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed linear model: ") + e.what());
  }
  return model;
}

void save_model(const std::filesystem::path& path, const ModelFile& file) {
  const bool forest = std::holds_alternative<ForestModel>(file.model);
  const json doc = {
      {"format_version", ModelFile::kFormatVersion},
      {"task", file.task},
      {"feature_model", file.feature_model},
      {"vocabulary_checksum", file.vocabulary_checksum},
      {"classes", file.classes},
      {"kind", forest ? "forest" : "linear"},
      {"model", forest ? forest_to_json(std::get<ForestModel>(file.model))
                       : linear_to_json(std::get<LinearModel>(file.model))}};
  std::ofstream out(path, std::ios::binary);
  out << doc.dump() << "\n";
  out.close();
  if (!out) throw DataError("cannot write model '" + path.string() + "'");
}

ModelFile load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open model '" + path.string() + "'");
  ModelFile file;
  try {
    const json doc = json::parse(in);
    if (doc.at("format_version").get<int>() != ModelFile::kFormatVersion) {
      throw DataError("unsupported model format version");
    }
    file.task = doc.at("task").get<std::string>();
    file.feature_model = doc.at("feature_model").get<std::string>();
    file.vocabulary_checksum = doc.at("vocabulary_checksum").get<std::string>();
    file.classes = doc.at("classes").get<std::vector<std::string>>();
    const auto kind = doc.at("kind").get<std::string>();
    if (kind == "forest") {
      file.model = forest_from_json(doc.at("model"));
    } else if (kind == "linear") {
      if (file.classes.size() != 2) throw DataError("linear model needs exactly two classes");
      file.model = linear_from_json(doc.at("model"));
    } else {
      throw DataError("unknown model kind '" + kind + "'");
    }
  } catch (const json::exception& e) {
    throw DataError("malformed model '" + path.string() + "': " + e.what());
  }
  return file;
}

void require_matching_vocabulary(const ModelFile& file, const FeatureVocabulary& vocabulary) {
  const std::string actual = vocabulary.checksum();
  if (actual != file.vocabulary_checksum) {
    throw DataError("vocabulary checksum " + actual + " does not match the model's " +
                    file.vocabulary_checksum);
  }
}

std::string predict_label(const ModelFile& file, const FeatureVector& x) {
  if (const auto* forest = std::get_if<ForestModel>(&file.model)) return forest->predict(x);
  return file.classes[std::get<LinearModel>(file.model).predict(x) > 0 ? 0 : 1];
}

}  // namespace newsstyle
