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
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "newsstyle/csv.hpp"
#include "newsstyle/error.hpp"
#include "newsstyle/unmasking.hpp"

namespace newsstyle {
namespace {

std::string shortest(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

std::string fixed(double value, int digits) {
  std::array<char, 64> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, digits);
  return std::string(buf.data(), res.ptr);
}

double parse_double(const std::string& field, std::size_t line) {
  double value = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw DataError("curve CSV line " + std::to_string(line) + ": bad number '" + field + "'");
  }
  return value;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

constexpr std::array<std::string_view, 6> kColors = {"#1f77b4", "#d62728", "#2ca02c",
                                                     "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace

void write_curve_csv(const UnmaskingCurve& curve, std::ostream& out) {
  std::vector<std::string> header{"iteration"};
  for (std::size_t r = 0; r < curve.runs.size(); ++r) header.push_back("run_" + std::to_string(r + 1));
  header.emplace_back("mean");
  csv::write_row(out, header);
  for (std::size_t i = 0; i < curve.mean.size(); ++i) {
    std::vector<std::string> row{std::to_string(i)};
    for (const auto& run : curve.runs) row.push_back(shortest(run[i]));
    row.push_back(shortest(curve.mean[i]));
    csv::write_row(out, row);
  }
}

UnmaskingCurve read_curve_csv(std::istream& in) {
  csv::Reader reader(in);
  const auto header = reader.next();
  if (!header || header->size() < 2 || (*header)[0] != "iteration" || header->back() != "mean") {
    throw DataError("curve CSV must start with an iteration,...,mean header");
  }
  const std::size_t runs = header->size() - 2;
  UnmaskingCurve curve;
  curve.runs.assign(runs, {});
  while (auto row = reader.next()) {
    if (row->size() == 1 && (*row)[0].empty()) continue;
    if (row->size() != header->size()) {
      throw DataError("curve CSV line " + std::to_string(reader.record_line()) +
                      ": expected " + std::to_string(header->size()) + " fields");
    }
    for (std::size_t r = 0; r < runs; ++r) {
      curve.runs[r].push_back(parse_double((*row)[r + 1], reader.record_line()));
    }
    curve.mean.push_back(parse_double(row->back(), reader.record_line()));
  }
  curve.config.runs = runs;
  curve.config.iterations = curve.mean.size();
  return curve;
}

void write_curves_svg(std::span<const UnmaskingCurve> curves, std::ostream& out,
                      const std::string& title) {
  constexpr double kWidth = 640;
  constexpr double kHeight = 400;
  constexpr double kLeft = 60;
  constexpr double kRight = 20;
  constexpr double kTop = 40;
  constexpr double kBottom = 50;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  std::size_t points = 2;
  for (const auto& c : curves) points = std::max(points, c.mean.size());
  // Accuracy axis from 0.4 to 1.0 unless a value falls below.
  double y_min = 0.4;
  for (const auto& c : curves) {
    for (const double v : c.mean) y_min = std::min(y_min, std::floor(v * 10.0) / 10.0);
  }
  const double y_max = 1.0;
  auto px = [&](std::size_t i) {
    return kLeft + plot_w * static_cast<double>(i) / static_cast<double>(points - 1);
  };
  auto py = [&](double v) { return kTop + plot_h * (y_max - v) / (y_max - y_min); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"15\">"
      << xml_escape(title) << "</text>\n";
  // Axes and ticks.
  out << "<g stroke=\"#444\" stroke-width=\"1\">\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
      << "\" y2=\"" << kTop + plot_h << "\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kTop + plot_h << "\"/>\n";
  out << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#222\">\n";
  for (double v = y_min; v <= y_max + 1e-9; v += 0.1) {
    out << "<text x=\"" << kLeft - 6 << "\" y=\"" << fixed(py(v) + 4, 1)
        << "\" text-anchor=\"end\">" << fixed(v, 1) << "</text>\n";
  }
  const std::size_t step = points > 12 ? 5 : 1;
  for (std::size_t i = 0; i < points; i += step) {
    out << "<text x=\"" << fixed(px(i), 1) << "\" y=\"" << kTop + plot_h + 16
        << "\" text-anchor=\"middle\">" << i << "</text>\n";
  }
  out << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
      << "\" text-anchor=\"middle\">iteration</text>\n";
  out << "<text x=\"16\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << kTop + plot_h / 2 << ")\">accuracy</text>\n</g>\n";

  for (std::size_t c = 0; c < curves.size(); ++c) {
    const std::string_view color = kColors[c % kColors.size()];
    const std::string label = curves[c].label_a + " vs " + curves[c].label_b;
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < curves[c].mean.size(); ++i) {
      if (i > 0) out << ' ';
      out << fixed(px(i), 2) << ',' << fixed(py(curves[c].mean[i]), 2);
    }
    out << "\"><title>" << xml_escape(label) << "</title></polyline>\n";
    const double ly = kTop + 12 + 16 * static_cast<double>(c);
    out << "<line x1=\"" << kLeft + plot_w - 170 << "\" y1=\"" << ly - 4 << "\" x2=\""
        << kLeft + plot_w - 150 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << kLeft + plot_w - 144 << "\" y=\"" << ly
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << xml_escape(label) << "</text>\n";
  }
  out << "</svg>\n";
}

void emit_curves(std::span<const UnmaskingCurve> curves, CurveFormat format,
                 const std::filesystem::path& path) {
  if (curves.empty()) throw UsageError("no curves to write");
  if (format == CurveFormat::csv && curves.size() != 1) {
    throw UsageError("CSV output holds exactly one curve");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  if (format == CurveFormat::csv) {
    write_curve_csv(curves.front(), out);
  } else {
    write_curves_svg(curves, out);
  }
  if (!out) throw DataError("failed writing " + path.string());
}

}  // namespace newsstyle
