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

#ifndef NEWSSTYLE_EXPERIMENT_OUTPUT_HPP_
#define NEWSSTYLE_EXPERIMENT_OUTPUT_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "newsstyle/experiments.hpp"

namespace newsstyle {

struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_table_csv(const Table& table, std::ostream& out);
nlohmann::json to_json(const Table& table);

// Uniform view of any experiment's outcome for writing to disk.
struct ExperimentResult {
  Task task = Task::hyperpartisan_binary;
  std::vector<Table> tables;
  std::vector<UnmaskingCurve> curves;
  std::vector<Check> checks;
  nlohmann::json data;

  bool all_checks_passed() const;
};

// Runs one task end to end.
ExperimentResult run_experiment(ExperimentContext& context, const ExperimentSpec& spec);

ExperimentResult to_result(Task task, const OmissionResult& result);
ExperimentResult to_result(Task task, const ClassificationResult& result);
ExperimentResult to_result(Task task, const OrientationResult& result);
ExperimentResult to_result(Task task, const VeracityResult& result);
ExperimentResult to_result(Task task, const UnmaskingSuiteResult& result);

struct Provenance {
  std::string tool_version;
  std::vector<std::pair<std::string, std::filesystem::path>> inputs;  // role, path
  std::size_t leakage_vocabulary_checks = 0;
  std::size_t leakage_publisher_checks = 0;
};

enum class OutputFormat { csv, json, svg };

// Writes <task>.<table>.csv or <task>.json, curve CSVs and the chart when
// requested, and <task>.manifest.json with config, seed, input checksums and
// the checksums of every file written. Nothing time- or host-dependent is
// recorded, so equal inputs give byte-identical files. Returns the paths in
// write order.
std::vector<std::filesystem::path> write_experiment(const ExperimentResult& result,
                                                    const ExperimentSpec& spec,
                                                    const Provenance& provenance,
                                                    const std::filesystem::path& out_dir,
                                                    const std::vector<OutputFormat>& formats);

}  // namespace newsstyle

#endif  // NEWSSTYLE_EXPERIMENT_OUTPUT_HPP_
