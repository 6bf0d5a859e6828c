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

#include "newsstyle/experiment_output.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "newsstyle/checksum.hpp"
#include "newsstyle/csv.hpp"
#include "newsstyle/error.hpp"

namespace newsstyle {
namespace {

using nlohmann::json;

std::string fixed(double value) {
  std::array<char, 64> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, 4);
  return std::string(buf.data(), res.ptr);
}

std::string cell(const std::optional<double>& value) { return value ? fixed(*value) : "n/a"; }

std::vector<std::string> metric_header(const std::vector<std::string>& classes) {
  std::vector<std::string> header = {"system", "accuracy"};
  for (const std::string& c : classes) {
    header.push_back(c + "_precision");
    header.push_back(c + "_recall");
    header.push_back(c + "_f1");
  }
  return header;
}

template <typename Report>
std::vector<std::string> metric_row(std::string name, const Report& report) {
  std::vector<std::string> row = {std::move(name), fixed(report.accuracy)};
  for (const ClassMetrics& m : report.per_class) {
    row.push_back(cell(m.precision));
    row.push_back(cell(m.recall));
    row.push_back(cell(m.f1));
  }
  return row;
}

Table classification_table(std::string name, const ClassificationResult& result, bool satire) {
  Table table{std::move(name), metric_header(result.classes), {}};
  for (const ModelRow& row : result.models) {
    table.rows.push_back(metric_row(std::string(to_string(row.model)), row.report));
  }
  for (const BaselineRow& row : result.baselines) table.rows.push_back(metric_row(row.name, row.report));
  if (satire) {
    // Published reference: satire-class scores only.
    std::vector<std::string> row(table.header.size(), "n/a");
    row[0] = "reference";
    const auto it = std::find(result.classes.begin(), result.classes.end(), "satire");
    if (it != result.classes.end()) {
      const auto base = 2 + 3 * static_cast<std::size_t>(it - result.classes.begin());
      row[base] = fixed(kSatireReferencePrecision);
      row[base + 1] = fixed(kSatireReferenceRecall);
      row[base + 2] = fixed(kSatireReferenceF1);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

json classification_json(const ClassificationResult& result) {
  json models = json::array();
  for (const ModelRow& row : result.models) {
    models.push_back({{"model", to_string(row.model)}, {"report", to_json(row.report)}});
  }
  json baselines = json::array();
  for (const BaselineRow& row : result.baselines) {
    baselines.push_back({{"name", row.name}, {"report", to_json(row.report)}});
  }
  return {{"classes", result.classes}, {"models", models}, {"baselines", baselines}};
}

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const Check& c : checks) {
    out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return out;
}

std::filesystem::path write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  out << bytes;
  out.close();
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  return path;
}

}  // namespace

void write_table_csv(const Table& table, std::ostream& out) {
  csv::write_row(out, table.header);
  for (const auto& row : table.rows) csv::write_row(out, row);
}

json to_json(const Table& table) {
  return {{"name", table.name}, {"header", table.header}, {"rows", table.rows}};
}

bool ExperimentResult::all_checks_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

ExperimentResult to_result(Task task, const OmissionResult& result) {
  ExperimentResult out;
  out.task = task;
  Table table{"accuracy", {"training", "model", "left", "right", "mainstream"}, {}};
  json cells = json::array();
  for (const auto& c : result.cells) {
    table.rows.push_back({c.training, std::string(to_string(c.model)), fixed(c.left), fixed(c.right),
                          fixed(c.mainstream)});
    cells.push_back({{"training", c.training},
                     {"model", to_string(c.model)},
                     {"left", c.left},
                     {"right", c.right},
                     {"mainstream", c.mainstream}});
  }
  out.tables.push_back(std::move(table));
  out.data = {{"cells", cells}};
  return out;
}

ExperimentResult to_result(Task task, const ClassificationResult& result) {
  ExperimentResult out;
  out.task = task;
  out.tables.push_back(classification_table("metrics", result, task == Task::satire));
  out.checks = result.checks;
  out.data = classification_json(result);
  if (task == Task::satire) {
    out.data["reference"] = {{"precision", kSatireReferencePrecision},
                             {"recall", kSatireReferenceRecall},
                             {"f1", kSatireReferenceF1}};
  }
  return out;
}

ExperimentResult to_result(Task task, const OrientationResult& result) {
  ExperimentResult out = to_result(task, result.classification);
  Table shares{"misclassification", {"model", "gold", "predicted", "share"}, {}};
  json shares_json = json::array();
  const auto& classes = result.classification.classes;
  for (const auto& [model, matrix] : result.shares) {
    json m = json::array();
    for (std::size_t g = 0; g < matrix.size(); ++g) {
      json row = json::array();
      for (std::size_t p = 0; p < matrix[g].size(); ++p) {
        row.push_back(matrix[g][p] ? json(*matrix[g][p]) : json(nullptr));
        if (g == p) continue;
        shares.rows.push_back(
            {std::string(to_string(model)), classes[g], classes[p], cell(matrix[g][p])});
      }
      m.push_back(std::move(row));
    }
    shares_json.push_back({{"model", to_string(model)}, {"shares", std::move(m)}});
  }
  out.tables.push_back(std::move(shares));
  out.data["misclassification_shares"] = std::move(shares_json);
  return out;
}

ExperimentResult to_result(Task task, const VeracityResult& result) {
  ExperimentResult out;
  out.task = task;
  out.data = json::object();
  out.data["aggregation"] =
      result.aggregation == VeracityAggregation::pooled ? "pooled" : "averaged";
  if (result.generic) {
    out.tables.push_back(classification_table("generic", *result.generic, false));
    out.checks.insert(out.checks.end(), result.generic->checks.begin(), result.generic->checks.end());
    out.data["generic"] = classification_json(*result.generic);
  }
  if (result.orientation_specific) {
    out.tables.push_back(
        classification_table("orientation_specific", *result.orientation_specific, false));
    out.checks.insert(out.checks.end(), result.orientation_specific->checks.begin(),
                      result.orientation_specific->checks.end());
    out.data["orientation_specific"] = classification_json(*result.orientation_specific);
  }
  return out;
}

ExperimentResult to_result(Task task, const UnmaskingSuiteResult& result) {
  ExperimentResult out;
  out.task = task;
  out.curves = result.curves;
  out.checks = result.checks;
  Table slopes{"slopes", {"pair", "slope"}, {}};
  json curves = json::array();
  for (std::size_t i = 0; i < result.curves.size(); ++i) {
    const auto& c = result.curves[i];
    slopes.rows.push_back({c.label_a + "-" + c.label_b, fixed(result.slopes[i])});
    json cj = to_json(c);
    cj["slope"] = result.slopes[i];
    curves.push_back(std::move(cj));
  }
  out.tables.push_back(std::move(slopes));
  out.data = {{"suite", result.suite}, {"curves", curves}};
  return out;
}

ExperimentResult run_experiment(ExperimentContext& context, const ExperimentSpec& spec) {
  switch (spec.task) {
    case Task::hyperpartisan_omission:
      return to_result(spec.task, run_hyperpartisan_omission(context, spec));
    case Task::hyperpartisan_binary:
      return to_result(spec.task, run_hyperpartisan_binary(context, spec));
    case Task::orientation_3class:
      return to_result(spec.task, run_orientation(context, spec));
    case Task::veracity_generic:
      return to_result(spec.task, run_veracity(context, spec, true, false));
    case Task::veracity_orientation_specific:
      return to_result(spec.task, run_veracity(context, spec, false, true));
    case Task::satire:
      return to_result(spec.task, run_satire(context, spec));
    case Task::unmask_orientations:
      return to_result(spec.task, run_unmasking_suite(context, spec, false));
    case Task::unmask_satire:
      return to_result(spec.task, run_unmasking_suite(context, spec, true));
  }
  throw UsageError("unknown task");
}

std::vector<std::filesystem::path> write_experiment(const ExperimentResult& result,
                                                    const ExperimentSpec& spec,
                                                    const Provenance& provenance,
                                                    const std::filesystem::path& out_dir,
                                                    const std::vector<OutputFormat>& formats) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw DataError("cannot create '" + out_dir.string() + "': " + ec.message());
  const std::string task(to_string(result.task));
  auto wants = [&](OutputFormat f) {
    return std::find(formats.begin(), formats.end(), f) != formats.end();
  };

  std::vector<std::filesystem::path> written;
  if (wants(OutputFormat::csv)) {
    for (const Table& table : result.tables) {
      std::ostringstream out;
      write_table_csv(table, out);
      written.push_back(write_file(out_dir / (task + "." + table.name + ".csv"), out.str()));
    }
    for (const UnmaskingCurve& curve : result.curves) {
      std::ostringstream out;
      write_curve_csv(curve, out);
      written.push_back(write_file(
          out_dir / (task + "." + curve.label_a + "_vs_" + curve.label_b + ".csv"), out.str()));
    }
  }
  if (wants(OutputFormat::json)) {
    json tables = json::array();
    for (const Table& table : result.tables) tables.push_back(to_json(table));
    const json doc = {{"task", task},
                      {"seed", spec.seed},
                      {"tables", tables},
                      {"checks", checks_json(result.checks)},
                      {"data", result.data}};
    written.push_back(write_file(out_dir / (task + ".json"), doc.dump(2) + "\n"));
  }
  if (wants(OutputFormat::svg) && !result.curves.empty()) {
    std::ostringstream out;
    write_curves_svg(result.curves, out, task);
    written.push_back(write_file(out_dir / (task + ".svg"), out.str()));
  }

  json inputs = json::array();
  for (const auto& [role, path] : provenance.inputs) {
    inputs.push_back({{"role", role}, {"path", path.string()}, {"sha256", sha256_file(path)}});
  }
  json files = json::array();
  for (const auto& path : written) {
    files.push_back({{"path", path.filename().string()}, {"sha256", sha256_file(path)}});
  }
  const json manifest = {
      {"tool_version", provenance.tool_version},
      {"task", task},
      {"seed", spec.seed},
      {"config", spec.config.to_json()},
      {"inputs", inputs},
      {"leakage_checks",
       {{"vocabulary", provenance.leakage_vocabulary_checks},
        {"publisher", provenance.leakage_publisher_checks}}},
      {"checks", checks_json(result.checks)},
      {"files", files}};
  written.push_back(write_file(out_dir / (task + ".manifest.json"), manifest.dump(2) + "\n"));
  return written;
}

}  // namespace newsstyle
