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

#ifndef NEWSSTYLE_UNMASKING_HPP_
#define NEWSSTYLE_UNMASKING_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "newsstyle/linear.hpp"
#include "newsstyle/textproc.hpp"

namespace newsstyle {

// Category-level unmasking: documents are the units (no chunking), one run
// samples docs_per_side documents per side and records a classification
// accuracy per elimination round.
struct UnmaskingConfig {
  std::size_t docs_per_side = 100;
  std::size_t runs = 5;
  std::size_t vocabulary_size = 250;
  std::size_t eliminate_per_side = 3;
  std::size_t iterations = 25;
  std::size_t cv_folds = 10;
  std::uint64_t seed = 1;
  // Inner learner on z-standardized relative frequencies.
  LinearConfig linear{5e-3, 100, 1};

  // Throws UsageError for zero counts or when iterations * 2 *
  // eliminate_per_side exceeds vocabulary_size.
  void validate() const;
  nlohmann::json to_json() const;
};

// Lowercased word-token counts of one document.
struct WordBag {
  std::unordered_map<std::string, std::size_t> counts;
  std::size_t total = 0;
};

WordBag make_word_bag(const TokenizedDocument& doc);

struct UnmaskingCurve {
  std::string label_a;
  std::string label_b;
  UnmaskingConfig config;
  std::vector<std::vector<double>> runs;  // [run][iteration]
  std::vector<double> mean;               // pointwise mean over runs
  // Features removed after each iteration but the last: [run][iteration].
  std::vector<std::vector<std::vector<std::string>>> eliminated;
};

// Per run: draw docs_per_side distinct documents per side (fewer when the
// side is smaller) from a shuffled stream that continues across runs and is
// reshuffled when exhausted; take the
// vocabulary_size most frequent words of the sample (ties by word), represent
// documents by relative frequencies, then repeat: record the cv_folds-fold
// cross-validated accuracy of a linear classifier, train on the whole sample
// and remove the eliminate_per_side most positive and most negative weighted
// features. Runs execute in parallel with seeds derived from config.seed.
// Throws DataError for an empty side or a sample vocabulary too small for the
// eliminations.
UnmaskingCurve unmask_pair(std::span<const WordBag> side_a, std::span<const WordBag> side_b,
                           const UnmaskingConfig& config, std::string label_a = "A",
                           std::string label_b = "B", std::size_t threads = 0);

// Mean first difference of the mean curve over [begin, end). More negative
// means more similar styles. Throws DataError for fewer than two points.
double curve_slope_statistic(std::span<const double> curve, std::size_t begin = 0,
                             std::optional<std::size_t> end = std::nullopt);
double curve_slope_statistic(const UnmaskingCurve& curve, std::size_t begin = 0,
                             std::optional<std::size_t> end = std::nullopt);

enum class CurveFormat { csv, svg };

// CSV: "iteration,run_1..run_R,mean" then one row per iteration, values in
// shortest round-trip form.
void write_curve_csv(const UnmaskingCurve& curve, std::ostream& out);
// Restores runs and mean. Labels are not part of the CSV.
UnmaskingCurve read_curve_csv(std::istream& in);
// Self-contained SVG line chart of the mean curves with a legend.
void write_curves_svg(std::span<const UnmaskingCurve> curves, std::ostream& out,
                      const std::string& title = "Unmasking");

// Writes one curve (csv) or a chart of all curves (svg). Throws DataError
// when the path cannot be written.
void emit_curves(std::span<const UnmaskingCurve> curves, CurveFormat format,
                 const std::filesystem::path& path);

nlohmann::json to_json(const UnmaskingCurve& curve);

}  // namespace newsstyle

#endif  // NEWSSTYLE_UNMASKING_HPP_
