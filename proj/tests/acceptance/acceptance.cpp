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

// Acceptance runner. Prints one line per criterion:
//   criterion <n> PASS|FAIL|SKIPPED: <detail>
// and exits 3 when any criterion fails.

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "newsstyle/corpus.hpp"
#include "newsstyle/error.hpp"
#include "newsstyle/experiment_output.hpp"
#include "newsstyle/experiments.hpp"
#include "newsstyle/features.hpp"
#include "newsstyle/synthetic.hpp"
#include "newsstyle/unmasking.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace newsstyle;

namespace {

// Tolerances.
constexpr double kFormulaTolerance = 1e-9;
constexpr double kSyllableAgreement = 0.90;
constexpr double kSameSetTolerance = 0.07;
constexpr double kPlantedStart = 0.95;
constexpr double kPlantedDrop = 0.6;
constexpr std::size_t kPlantedDropWithin = 2;
constexpr double kReproductionBand = 0.05;

enum class Verdict { pass, fail, skipped };

struct Outcome {
  Verdict verdict = Verdict::pass;
  std::string detail;
};

Outcome pass(std::string detail) { return {Verdict::pass, std::move(detail)}; }
Outcome fail(std::string detail) { return {Verdict::fail, std::move(detail)}; }
Outcome skipped(std::string detail) { return {Verdict::skipped, std::move(detail)}; }

std::string fmt(double v, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

// Collects failures of one criterion.
struct Failures {
  std::vector<std::string> items;
  void add(std::string s) { items.push_back(std::move(s)); }
  bool empty() const { return items.empty(); }
  std::string joined(std::size_t limit = 6) const {
    std::string out;
    for (std::size_t i = 0; i < items.size() && i < limit; ++i) out += (i ? "; " : "") + items[i];
    if (items.size() > limit) out += "; ... " + std::to_string(items.size() - limit) + " more";
    return out;
  }
};

// -- 1 ------------------------------------------------------------------------

Outcome formula_oracles() {
  const auto fixture = testing::read_json(testing::fixture("readability_oracle.json"));
  Failures failures;
  double worst = 0.0;
  std::size_t docs = 0;
  for (const auto& d : fixture["documents"]) {
    ++docs;
    const auto& c = d["counts"];
    ReadabilityCounts counts;
    counts.characters = c["characters"];
    counts.words = c["words"];
    counts.sentences = c["sentences"];
    counts.syllables = c["syllables"];
    counts.long_words = c["long_words"];
    counts.complex_words = c["complex_words"];
    counts.mini_words = c["mini_words"];
    const auto paragraphs = d["paragraphs"].get<std::vector<std::string>>();
    const ReadabilityScores from_counts = readability_scores(counts);
    const ReadabilityScores from_text = readability_scores(Tokenizer::standard().tokenize(paragraphs));
    for (std::size_t i = 0; i < kReadabilityCount; ++i) {
      const double expected = d["scores"][std::string(kReadabilityNames[i])];
      for (const double got : {from_counts[i], from_text[i]}) {
        const double error = std::abs(got - expected);
        worst = std::max(worst, error);
        if (!(error <= kFormulaTolerance)) {
          failures.add(d["id"].get<std::string>() + " " + std::string(kReadabilityNames[i]) + " " +
                       fmt(got, 9) + " vs " + fmt(expected, 9));
        }
      }
    }
  }
  if (docs != 20) failures.add("fixture has " + std::to_string(docs) + " documents, expected 20");

  std::ifstream words(testing::fixture("syllables_cmudict_200.tsv"));
  std::size_t total = 0;
  std::size_t agree = 0;
  for (std::string line; std::getline(words, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    ++total;
    if (count_syllables(line.substr(0, tab)) == std::stoi(line.substr(tab + 1))) ++agree;
  }
  const double rate = total ? static_cast<double>(agree) / static_cast<double>(total) : 0.0;
  if (total != 200) failures.add("syllable list has " + std::to_string(total) + " words");
  if (rate < kSyllableAgreement) failures.add("syllable agreement " + fmt(rate, 3));
  const std::string detail = "10 scores x " + std::to_string(docs) + " documents, max error " +
                             fmt(worst, 12) + "; syllables " + std::to_string(agree) + "/" +
                             std::to_string(total);
  return failures.empty() ? pass(detail) : fail(detail + "; " + failures.joined());
}

// -- 2 ------------------------------------------------------------------------

Outcome feature_selection() {
  // 100 synthetic articles with four planted words at the thresholds.
  Corpus corpus = make_synthetic_corpus({.articles_per_publisher = 12, .seed = 20});
  Rng rng(77);
  rng.shuffle(std::span<Article>(corpus));
  corpus.resize(100);
  std::map<Orientation, std::vector<std::size_t>> by_orientation;
  for (std::size_t i = 0; i < corpus.size(); ++i) by_orientation[corpus[i].orientation].push_back(i);
  auto plant = [&](const std::string& word, Orientation o, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      corpus[by_orientation[o][i]].paragraphs.back() += " " + word + ".";
    }
  };
  plant("zanthor", Orientation::left, 5);       // 10 documents, two categories: kept
  plant("zanthor", Orientation::right, 5);
  plant("quillop", Orientation::left, 5);       // 9 documents: dropped
  plant("quillop", Orientation::mainstream, 4);
  plant("vembrik", Orientation::mainstream, 30);  // one category: dropped
  plant("trosset", Orientation::left, 1);       // 10 documents, edge of both rules: kept
  plant("trosset", Orientation::mainstream, 9);

  ExtractionConfig config;
  config.families.fill(true);
  const FeatureResources resources = FeatureResources::standard();
  std::vector<RawProfile> raw;
  FeatureSpace space;
  std::vector<DocumentProfile> profiles;
  std::vector<std::string> categories;
  for (const Article& a : corpus) {
    raw.push_back(extract_profile(a, config, resources));
    profiles.push_back(intern_profile(raw.back(), space));
    categories.emplace_back(to_string(a.orientation));
  }
  std::vector<const DocumentProfile*> docs;
  for (const auto& p : profiles) docs.push_back(&p);
  const FeatureVocabulary v = build_vocabulary(docs, categories, space);

  // Brute force over string ids.
  const std::vector<std::string> names = {"left", "mainstream", "right"};
  std::map<std::string, std::vector<std::size_t>> presence;
  std::map<std::string, std::pair<double, double>> moments;
  for (std::size_t d = 0; d < raw.size(); ++d) {
    const auto c = static_cast<std::size_t>(
        std::find(names.begin(), names.end(), categories[d]) - names.begin());
    for (const auto& [id, value] : raw[d].values) {
      auto& p = presence[id];
      if (p.empty()) p.assign(3, 0);
      ++p[c];
      moments[id].first += value;
      moments[id].second += value * value;
    }
  }
  std::map<std::string, VocabularyEntry> expected;
  for (const auto& [id, p] : presence) {
    const FeatureFamily family = *family_of(id);
    std::size_t df = 0;
    std::size_t cats = 0;
    for (const std::size_t n : p) {
      df += n;
      cats += n > 0 ? 1 : 0;
    }
    VocabularyEntry e;
    e.id = id;
    e.family = family;
    e.document_frequency = df;
    e.category_presence = p;
    if (is_scalar_family(family)) {
      e.mean = moments[id].first / 100.0;
      const double var = std::max(0.0, moments[id].second / 100.0 - e.mean * e.mean);
      e.scale = var > 0.0 ? std::sqrt(var) : 1.0;
    } else if (df < 10 || cats < 2) {
      continue;
    }
    expected.emplace(id, e);
  }

  Failures failures;
  if (v.size() != expected.size()) {
    failures.add("vocabulary has " + std::to_string(v.size()) + " entries, brute force " +
                 std::to_string(expected.size()));
  }
  for (const VocabularyEntry& e : v.entries()) {
    const auto it = expected.find(e.id);
    if (it == expected.end()) {
      failures.add("unexpected " + e.id);
      continue;
    }
    const VocabularyEntry& x = it->second;
    if (e.family != x.family || e.document_frequency != x.document_frequency ||
        e.category_presence != x.category_presence) {
      failures.add("counts differ for " + e.id);
    }
    if (std::abs(e.mean - x.mean) > 1e-12 * std::max(1.0, std::abs(x.mean)) ||
        std::abs(e.scale - x.scale) > 1e-12 * std::max(1.0, std::abs(x.scale))) {
      failures.add("standardization differs for " + e.id);
    }
  }
  for (const auto& [word, keep] : std::vector<std::pair<std::string, bool>>{
           {"bow:zanthor", true}, {"bow:quillop", false}, {"bow:vembrik", false}, {"bow:trosset", true}}) {
    if (v.index_of(word).has_value() != keep) failures.add(word + (keep ? " missing" : " kept"));
  }
  const std::string detail = "100 documents, " + std::to_string(presence.size()) + " candidates, " +
                             std::to_string(v.size()) + " selected";
  return failures.empty() ? pass(detail + ", identical to brute force")
                          : fail(detail + "; " + failures.joined());
}

// -- 3 ------------------------------------------------------------------------

// Published baseline row: accuracy, then precision, recall and F1 per class
// in table column order. NaN marks a cell printed as "-".
struct PublishedRow {
  std::string table;
  std::string name;
  std::vector<std::string> classes;
  std::vector<double> cells;
};

constexpr double kDash = std::numeric_limits<double>::quiet_NaN();

const std::vector<PublishedRow>& published_rows() {
  static const std::vector<PublishedRow> rows = {
      {"hyperpartisan", "All-hyp.", {"hyperpartisan", "mainstream"}, {0.49, 0.49, kDash, 1.00, 0.0, 0.66, kDash}},
      {"hyperpartisan", "All-main.", {"hyperpartisan", "mainstream"}, {0.51, kDash, 0.51, 0.0, 1.00, kDash, 0.68}},
      {"orientation", "All-left", {"left", "right", "mainstream"},
       {0.16, 0.16, kDash, kDash, 1.00, 0.0, 0.0, 0.27, kDash, kDash}},
      {"orientation", "All-right", {"left", "right", "mainstream"},
       {0.33, kDash, 0.33, kDash, 0.0, 1.00, 0.0, kDash, 0.50, kDash}},
      {"orientation", "All-main.", {"left", "right", "mainstream"},
       {0.51, kDash, kDash, 0.51, 0.0, 0.0, 1.00, kDash, kDash, 0.68}},
      {"veracity", "All-fake", {"fake", "real"}, {0.39, 0.39, kDash, 1.00, 0.0, 0.56, kDash}},
      {"veracity", "All-real", {"fake", "real"}, {0.61, kDash, 0.61, 0.0, 1.00, kDash, 0.76}},
      {"satire", "All-sat.", {"satire", "real"}, {0.50, 0.50, kDash, 1.00, 0.0, 0.67, kDash}},
      {"satire", "All-real", {"satire", "real"}, {0.50, kDash, 0.50, 0.0, 1.00, kDash, 0.67}},
  };
  return rows;
}

std::vector<double> row_cells(const EvaluationReport& r, const std::vector<std::string>& classes) {
  auto value = [](const std::optional<double>& v) { return v ? *v : kDash; };
  std::vector<double> cells = {r.accuracy};
  for (const auto& c : classes) cells.push_back(value(r.metrics(c).precision));
  for (const auto& c : classes) cells.push_back(value(r.metrics(c).recall));
  for (const auto& c : classes) cells.push_back(value(r.metrics(c).f1));
  return cells;
}

std::string cell_text(double v) { return std::isnan(v) ? "-" : fmt(v, 2); }

Outcome baseline_analytics(std::size_t threads) {
  ExperimentSpec spec;
  spec.seed = 1;
  spec.config.models = {FeatureModel::topic};
  spec.config.forest.trees = 4;
  ExperimentContext context(testing::fact_checked_shaped_corpus(1), make_synthetic_satire_corpus(180, 1),
                            FeatureResources::standard(), threads);
  std::map<std::string, std::vector<BaselineRow>> by_table;
  std::vector<Check> checks;
  auto collect = [&](const std::string& table, const ClassificationResult& r) {
    by_table[table] = r.baselines;
    checks.insert(checks.end(), r.checks.begin(), r.checks.end());
  };
  spec.task = Task::hyperpartisan_binary;
  collect("hyperpartisan", run_hyperpartisan_binary(context, spec));
  spec.task = Task::orientation_3class;
  collect("orientation", run_orientation(context, spec).classification);
  spec.task = Task::veracity_generic;
  collect("veracity", *run_veracity(context, spec, true, false).generic);
  spec.task = Task::satire;
  collect("satire", run_satire(context, spec));

  Failures failures;
  std::size_t cells = 0;
  std::size_t matched = 0;
  for (const PublishedRow& row : published_rows()) {
    const auto& rows = by_table[row.table];
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const BaselineRow& b) { return b.name == row.name; });
    if (it == rows.end()) {
      failures.add(row.table + " " + row.name + " missing");
      continue;
    }
    const std::vector<double> got = row_cells(it->report, row.classes);
    for (std::size_t i = 0; i < row.cells.size(); ++i) {
      ++cells;
      const double rounded = std::isnan(got[i]) ? kDash : std::round(got[i] * 100.0) / 100.0;
      const bool same = (std::isnan(rounded) && std::isnan(row.cells[i])) ||
                        (!std::isnan(rounded) && !std::isnan(row.cells[i]) &&
                         std::abs(rounded - row.cells[i]) < 1e-9);
      if (same) {
        ++matched;
      } else {
        failures.add(row.table + " " + row.name + " cell " + std::to_string(i + 1) + ": computed " +
                     (std::isnan(got[i]) ? "-" : fmt(got[i], 4)) + ", published " + cell_text(row.cells[i]));
      }
    }
  }
  for (const Check& c : checks) {
    if (c.name.rfind("baseline", 0) == 0 && !c.passed) failures.add(c.name + ": " + c.detail);
  }
  const std::string detail = std::to_string(matched) + "/" + std::to_string(cells) + " published cells match";
  return failures.empty() ? pass(detail) : fail(detail + "; " + failures.joined());
}

// -- 4 ------------------------------------------------------------------------

UnmaskingConfig sanity_config() {
  UnmaskingConfig c;
  c.docs_per_side = 100;
  c.runs = 5;
  c.vocabulary_size = 100;
  c.eliminate_per_side = 3;
  c.iterations = 10;
  c.cv_folds = 10;
  c.seed = 2026;
  return c;
}

std::vector<WordBag> with_markers(std::vector<WordBag> bags, const std::vector<std::string>& markers) {
  for (WordBag& bag : bags) {
    for (const std::string& m : markers) ++bag.counts[m];
    bag.total += markers.size();
  }
  return bags;
}

Outcome unmasking_sanity(std::size_t threads) {
  Failures failures;
  const UnmaskingConfig config = sanity_config();

  // (a) two independent samples of one document distribution. Literal copies
  // on both sides put each test document's twin in training under the other
  // label, which pushes accuracy below chance; reported for information.
  const auto same_a = testing::random_bags(31, 150, 120, 80);
  const auto same_b = testing::random_bags(34, 150, 120, 80);
  const UnmaskingCurve a = unmask_pair(same_a, same_b, config, "A", "A'", threads);
  if (std::abs(a.mean[0] - 0.5) > kSameSetTolerance) {
    failures.add("(a) iteration-0 accuracy " + fmt(a.mean[0]));
  }
  const UnmaskingCurve copies = unmask_pair(same_a, same_a, config, "A", "A", threads);

  // (b) disjoint planted markers on otherwise identically distributed sides
  const auto markers_a = testing::marker_words("alphamark", 6);
  const auto markers_b = testing::marker_words("betamark", 6);
  const auto side_a = with_markers(testing::random_bags(32, 150, 120, 80), markers_a);
  const auto side_b = with_markers(testing::random_bags(33, 150, 120, 80), markers_b);
  const UnmaskingCurve b = unmask_pair(side_a, side_b, config, "A", "B", threads);
  if (b.mean[0] < kPlantedStart) failures.add("(b) start " + fmt(b.mean[0]));
  if (b.mean[kPlantedDropWithin] > kPlantedDrop) {
    failures.add("(b) accuracy after " + std::to_string(kPlantedDropWithin) + " iterations " +
                 fmt(b.mean[kPlantedDropWithin]));
  }
  std::set<std::string> planted(markers_a.begin(), markers_a.end());
  planted.insert(markers_b.begin(), markers_b.end());
  for (std::size_t r = 0; r < b.eliminated.size(); ++r) {
    std::set<std::string> first;
    for (std::size_t i = 0; i < kPlantedDropWithin; ++i) first.insert(b.eliminated[r][i].begin(), b.eliminated[r][i].end());
    if (first != planted) failures.add("(b) run " + std::to_string(r + 1) + " eliminated other features");
  }

  // (c) reruns, also with another thread count
  const UnmaskingCurve again = unmask_pair(side_a, side_b, config, "A", "B", threads);
  const UnmaskingCurve serial = unmask_pair(side_a, side_b, config, "A", "B", 1);
  std::ostringstream x, y, z;
  write_curve_csv(b, x);
  write_curve_csv(again, y);
  write_curve_csv(serial, z);
  if (x.str() != y.str() || x.str() != z.str() || b.eliminated != again.eliminated ||
      b.eliminated != serial.eliminated) {
    failures.add("(c) curves differ between reruns");
  }
  const std::string detail = "(a) start " + fmt(a.mean[0]) + " (literal copies " + fmt(copies.mean[0]) +
                             "); (b) start " + fmt(b.mean[0]) +
                             ", after " + std::to_string(kPlantedDropWithin) + " iterations " +
                             fmt(b.mean[kPlantedDropWithin]) + ", markers eliminated first; (c) identical";
  return failures.empty() ? pass(detail) : fail(failures.joined());
}

// -- 5 and 6 ------------------------------------------------------------------

void within(Failures& f, const std::string& what, std::optional<double> got, double target) {
  if (!got) {
    f.add(what + " undefined");
  } else if (std::abs(*got - target) > kReproductionBand) {
    f.add(what + " " + fmt(*got) + " outside " + fmt(target, 2) + " +- " + fmt(kReproductionBand, 2));
  }
}

Outcome corpus_reproduction(std::size_t threads, std::string& summary) {
  const char* path = std::getenv("NEWSSTYLE_CORPUS");
  if (path == nullptr || !fs::exists(path)) {
    return skipped("set NEWSSTYLE_CORPUS to the reconstructed fact-checked corpus (JSONL)");
  }
  Corpus corpus = load_corpus(path, CorpusFormat::jsonl);
  Failures failures;
  const CorpusStats stats = corpus_statistics(corpus);
  if (stats.total.articles != 1627) failures.add("total " + std::to_string(stats.total.articles));
  const std::map<Orientation, std::array<std::size_t, 4>> ratings = [] {
    std::map<Orientation, std::array<std::size_t, 4>> m;
    for (const auto& p : testing::kFactCheckedLayout) {
      for (std::size_t r = 0; r < 4; ++r) m[p.orientation][r] += p.ratings[r];
    }
    return m;
  }();
  for (const auto& [orientation, expected] : ratings) {
    const StatsRow* row = stats.orientation_row(orientation);
    const std::array<std::size_t, 4> got = {row ? row->rating_counts[0] : 0, row ? row->rating_counts[1] : 0,
                                            row ? row->rating_counts[2] : 0, row ? row->rating_counts[3] : 0};
    if (got != expected) failures.add(std::string(to_string(orientation)) + " rating counts differ");
  }

  ExperimentContext context(std::move(corpus), std::nullopt, FeatureResources::standard(), threads);
  ExperimentSpec spec;
  spec.seed = 1;
  spec.task = Task::hyperpartisan_binary;
  const ClassificationResult hyp = run_hyperpartisan_binary(context, spec);
  const AveragedReport* style = hyp.report_for(FeatureModel::style);
  const AveragedReport* topic = hyp.report_for(FeatureModel::topic);
  within(failures, "hyperpartisan style accuracy", style->accuracy, 0.75);
  within(failures, "hyperpartisan recall", style->metrics("hyperpartisan").recall, 0.89);
  if (!(style->accuracy > topic->accuracy)) failures.add("hyperpartisan style accuracy not above topic");

  spec.task = Task::orientation_3class;
  const OrientationResult orientation = run_orientation(context, spec);
  within(failures, "orientation style accuracy",
         orientation.classification.report_for(FeatureModel::style)->accuracy, 0.60);

  spec.task = Task::veracity_orientation_specific;
  const VeracityResult veracity = run_veracity(context, spec, false, true);
  within(failures, "orientation-specific fake F1",
         veracity.orientation_specific->report_for(FeatureModel::style)->metrics("fake").f1, 0.46);

  spec.task = Task::unmask_orientations;
  const UnmaskingSuiteResult unmasking = run_unmasking_suite(context, spec, false);
  if (!(unmasking.slopes[0] < unmasking.slopes[1] && unmasking.slopes[0] < unmasking.slopes[2])) {
    failures.add("left-right slope " + fmt(unmasking.slopes[0]) + " not below " + fmt(unmasking.slopes[1]) +
                 " and " + fmt(unmasking.slopes[2]));
  }
  summary = "hyperpartisan style accuracy " + fmt(style->accuracy) + ", topic " + fmt(topic->accuracy);
  return failures.empty() ? pass(summary) : fail(failures.joined(10));
}

Outcome satire_reproduction(std::size_t threads) {
  const char* path = std::getenv("NEWSSTYLE_SATIRE_CORPUS");
  if (path == nullptr || !fs::exists(path)) {
    return skipped("set NEWSSTYLE_SATIRE_CORPUS to the 180+180 satire and real set (JSONL)");
  }
  ExperimentContext context(Corpus{}, load_corpus(path, CorpusFormat::jsonl), FeatureResources::standard(),
                            threads);
  ExperimentSpec spec;
  spec.seed = 1;
  spec.task = Task::satire;
  const ClassificationResult r = run_satire(context, spec);
  const AveragedReport* style = r.report_for(FeatureModel::style);
  const AveragedReport* topic = r.report_for(FeatureModel::topic);
  Failures failures;
  within(failures, "satire style accuracy", style->accuracy, 0.82);
  within(failures, "satire F1", style->metrics("satire").f1, 0.81);
  if (!(style->accuracy > topic->accuracy)) failures.add("style accuracy not above topic");
  const std::string detail = "style accuracy " + fmt(style->accuracy) + ", topic " + fmt(topic->accuracy);
  return failures.empty() ? pass(detail) : fail(detail + "; " + failures.joined());
}

// -- 7 and 8: through the command line tool ----------------------------------

int run_command(const std::string& command) {
  const int status = std::system((command + " >/dev/null 2>&1").c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

struct CliSetup {
  fs::path cli;
  fs::path dir;
  std::string base;  // tool plus global options shared by every run
};

CliSetup prepare_cli(const fs::path& cli, const fs::path& work) {
  CliSetup s{cli, work, {}};
  fs::remove_all(work);
  fs::create_directories(work);
  const int code = run_command(quoted(cli) + " --out-dir " + quoted(work) + " --seed 8 export synthetic" +
                               " --articles-per-publisher 12 --satire-per-class 60");
  if (code != 0) throw std::runtime_error("synthetic export exited " + std::to_string(code));
  std::ofstream(work / "config.json") << R"({
  "forest": {"trees": 24},
  "unmasking": {"docs_per_side": 30, "runs": 3, "vocabulary_size": 80, "iterations": 6, "cv_folds": 5},
  "satire_per_class": 60
})";
  s.base = quoted(cli) + " --corpus " + quoted(work / "corpus.jsonl") + " --satire-corpus " +
           quoted(work / "satire.jsonl") + " --config " + quoted(work / "config.json") + " --seed 5";
  return s;
}

std::map<std::string, std::string> directory_bytes(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    files[entry.path().filename().string()] = testing::read_file(entry.path());
  }
  return files;
}

Outcome determinism(const CliSetup& s) {
  Failures failures;
  std::size_t compared = 0;
  for (const Task task : all_tasks()) {
    const std::string name(to_string(task));
    std::vector<std::map<std::string, std::string>> outputs;
    for (const auto& [label, threads] : std::vector<std::pair<std::string, int>>{{"a", 4}, {"b", 4}, {"c", 1}}) {
      const fs::path out = s.dir / ("determinism_" + label) / name;
      const int code = run_command(s.base + " --threads " + std::to_string(threads) + " --out-dir " +
                                   quoted(out) + " --format csv,json,svg experiment " + name);
      if (code != 0) {
        failures.add(name + " exited " + std::to_string(code));
        break;
      }
      outputs.push_back(directory_bytes(out));
    }
    if (outputs.size() != 3) continue;
    if (outputs[0] != outputs[1]) failures.add(name + ": two runs with 4 threads differ");
    if (outputs[0] != outputs[2]) failures.add(name + ": 1 and 4 threads differ");
    compared += outputs[0].size();
  }
  const std::string detail = std::to_string(all_tasks().size()) + " tasks, " + std::to_string(compared) +
                             " files byte-identical over 2 runs with 4 threads and 1 run with 1 thread";
  return failures.empty() ? pass(detail) : fail(failures.joined());
}

Outcome leakage_guard(const CliSetup& s, std::size_t threads) {
  Failures failures;
  // Every fit is audited.
  ExperimentContext context(load_corpus(s.dir / "corpus.jsonl", CorpusFormat::jsonl),
                            load_corpus(s.dir / "satire.jsonl", CorpusFormat::jsonl),
                            FeatureResources::standard(), threads);
  std::size_t audited = 0;
  for (const Task task : all_tasks()) {
    if (task == Task::unmask_orientations || task == Task::unmask_satire) continue;
    ExperimentSpec spec;
    spec.task = task;
    spec.config.forest.trees = 8;
    spec.config.satire_per_class = 60;
    const std::size_t vocab_before = context.guard().vocabulary_checks();
    const std::size_t publisher_before = context.guard().publisher_checks();
    run_experiment(context, spec);
    const std::size_t vocab = context.guard().vocabulary_checks() - vocab_before;
    const std::size_t publisher = context.guard().publisher_checks() - publisher_before;
    if (vocab == 0) failures.add(std::string(to_string(task)) + " made no vocabulary checks");
    if (task != Task::satire && publisher == 0) {
      failures.add(std::string(to_string(task)) + " made no publisher checks");
    }
    audited += vocab;
  }
  // An injected leak stops every classification task with exit code 3.
  std::size_t caught = 0;
  for (const Task task : all_tasks()) {
    if (task == Task::unmask_orientations || task == Task::unmask_satire) continue;
    const std::string name(to_string(task));
    const int code = run_command(s.base + " --out-dir " + quoted(s.dir / "leak" / name) + " experiment " +
                                 name + " --inject-test-leak");
    if (code == kExitAssertion) {
      ++caught;
    } else {
      failures.add(name + " with an injected leak exited " + std::to_string(code));
    }
  }
  const std::string detail = std::to_string(audited) + " vocabulary fits audited; injected leak exits 3 in " +
                             std::to_string(caught) + "/6 classification tasks";
  return failures.empty() ? pass(detail) : fail(failures.joined());
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "PASS";
    case Verdict::fail:
      return "FAIL";
    case Verdict::skipped:
      return "SKIPPED";
  }
  return "FAIL";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"newsstyle acceptance criteria"};
  std::string cli;
  std::string work_dir = (fs::temp_directory_path() / "newsstyle_acceptance").string();
  std::size_t threads = 4;
  app.add_option("--cli", cli, "Path to the newsstyle executable")->required();
  app.add_option("--work-dir", work_dir, "Scratch directory");
  app.add_option("--threads", threads, "Worker threads for in-process runs");
  CLI11_PARSE(app, argc, argv);

  std::optional<CliSetup> setup;
  std::string setup_error;
  try {
    setup = prepare_cli(cli, work_dir);
  } catch (const std::exception& e) {
    setup_error = e.what();
  }
  std::string corpus_summary;
  const std::vector<std::function<Outcome()>> criteria = {
      [] { return formula_oracles(); },
      [] { return feature_selection(); },
      [&] { return baseline_analytics(threads); },
      [&] { return unmasking_sanity(threads); },
      [&] { return corpus_reproduction(threads, corpus_summary); },
      [&] { return satire_reproduction(threads); },
      [&] { return setup ? determinism(*setup) : fail("setup failed: " + setup_error); },
      [&] { return setup ? leakage_guard(*setup, threads) : fail("setup failed: " + setup_error); },
  };
  bool failed = false;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i]();
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    failed |= outcome.verdict == Verdict::fail;
    std::cout << "criterion " << (i + 1) << ' ' << verdict_name(outcome.verdict) << ": " << outcome.detail
              << std::endl;
  }
  return failed ? kExitAssertion : kExitOk;
}
