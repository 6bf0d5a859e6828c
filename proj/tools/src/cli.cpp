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

#include "newsstyle/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "newsstyle/buzzfeed.hpp"
#include "newsstyle/corpus.hpp"
#include "newsstyle/csv.hpp"
#include "newsstyle/error.hpp"
#include "newsstyle/experiment_output.hpp"
#include "newsstyle/experiments.hpp"
#include "newsstyle/forest.hpp"
#include "newsstyle/linear.hpp"
#include "newsstyle/model_io.hpp"
#include "newsstyle/parallel.hpp"
#include "newsstyle/synthetic.hpp"
#include "newsstyle/unmasking.hpp"

namespace newsstyle {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Globals {
  std::string corpus;
  std::string corpus_format = "jsonl";
  std::string archive_dir;
  std::string satire_corpus;
  std::uint64_t seed = 1;
  std::string config;
  std::string out_dir;
  std::vector<std::string> formats;
  std::size_t threads = 0;
  std::string dictionary;
  bool strict = false;
};

Corpus load(const std::string& path, const Globals& g) {
  LoadOptions options;
  if (!g.archive_dir.empty()) options.archive_dir = g.archive_dir;
  return load_corpus(path, g.corpus_format == "buzzfeed_csv" ? CorpusFormat::buzzfeed_csv
                                                             : CorpusFormat::jsonl,
                     options);
}

Corpus require_corpus(const Globals& g) {
  if (g.corpus.empty()) throw UsageError("--corpus is required");
  return load(g.corpus, g);
}

std::optional<Corpus> optional_satire(const Globals& g) {
  if (g.satire_corpus.empty()) return std::nullopt;
  return load_corpus(g.satire_corpus, CorpusFormat::jsonl);
}

ExperimentConfig load_config(const Globals& g) {
  if (g.config.empty()) return {};
  std::ifstream in(g.config, std::ios::binary);
  if (!in) throw DataError("cannot open config '" + g.config + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("config '" + g.config + "' is not valid JSON: " + e.what());
  }
  return ExperimentConfig::from_json(j);
}

// Holds an optional custom dictionary alive for the lifetime of a command.
struct Resources {
  Dictionaries dictionary;
  FeatureResources features = FeatureResources::standard();

  explicit Resources(const Globals& g) {
    if (!g.dictionary.empty()) {
      dictionary = Dictionaries::load(g.dictionary);
      features.dictionaries = &dictionary;
    }
  }
};

std::vector<OutputFormat> output_formats(const Globals& g) {
  std::vector<OutputFormat> out;
  for (const std::string& f : g.formats) {
    if (f == "csv") out.push_back(OutputFormat::csv);
    if (f == "json") out.push_back(OutputFormat::json);
    if (f == "svg") out.push_back(OutputFormat::svg);
  }
  if (out.empty()) out.push_back(OutputFormat::csv);
  return out;
}

bool wants(const Globals& g, std::string_view format) {
  return std::find(g.formats.begin(), g.formats.end(), format) != g.formats.end();
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw DataError("cannot write '" + path.string() + "'");
}

// -- convert ---------------------------------------------------------------------

struct ConvertArgs {
  std::string input;
  std::string output;
};

int run_convert(const Globals& g, const ConvertArgs& a, std::ostream& out, std::ostream& err) {
  ConversionReport report;
  const fs::path archive = g.archive_dir.empty() ? fs::path(a.input).parent_path() / "articles"
                                                 : fs::path(g.archive_dir);
  const Corpus corpus = convert_buzzfeed(a.input, archive, &report);
  std::ostringstream jsonl;
  write_jsonl(corpus, jsonl);
  if (a.output.empty()) {
    out << jsonl.str();
  } else {
    write_text(a.output, jsonl.str());
  }
  err << "records " << report.records << ", converted " << report.converted
      << ", missing archive " << report.missing_archive << ", without text "
      << report.without_text << "\n";
  return kExitOk;
}

// -- stats -----------------------------------------------------------------------

int run_stats(const Globals& g, std::ostream& out) {
  const CorpusStats stats = corpus_statistics(require_corpus(g));
  std::ostringstream csv;
  write_stats_csv(stats, csv);
  const std::string json_text = to_json(stats).dump(2) + "\n";
  if (g.out_dir.empty()) {
    out << (wants(g, "json") ? json_text : csv.str());
    return kExitOk;
  }
  if (wants(g, "json")) write_text(fs::path(g.out_dir) / "stats.json", json_text);
  if (!wants(g, "json") || wants(g, "csv")) write_text(fs::path(g.out_dir) / "stats.csv", csv.str());
  return kExitOk;
}

// -- unmask ----------------------------------------------------------------------

struct UnmaskArgs {
  std::string side_a;
  std::string side_b;
};

// Selector "key:value" with key orientation, veracity, rating or publisher.
bool selected(const Article& a, std::string_view selector) {
  const auto colon = selector.find(':');
  if (colon == std::string_view::npos) {
    throw UsageError("side selector '" + std::string(selector) + "' must look like key:value");
  }
  const std::string_view key = selector.substr(0, colon);
  const std::string_view value = selector.substr(colon + 1);
  if (key == "orientation") {
    if (!parse_orientation(value)) throw UsageError("unknown orientation '" + std::string(value) + "'");
    return to_string(a.orientation) == value;
  }
  if (key == "rating") {
    if (!parse_rating(value)) throw UsageError("unknown rating '" + std::string(value) + "'");
    return to_string(a.rating) == value;
  }
  if (key == "veracity") {
    if (value != "fake" && value != "real") throw UsageError("veracity must be fake or real");
    if (a.orientation == Orientation::satire || a.rating == Rating::unrated) return false;
    return to_string(operationalize_veracity(a)) == value;
  }
  if (key == "publisher") return a.publisher == value;
  throw UsageError("unknown selector key '" + std::string(key) + "'");
}

int run_unmask(const Globals& g, const UnmaskArgs& a, std::ostream& out) {
  const ExperimentConfig config = load_config(g);
  ExperimentContext context(require_corpus(g), optional_satire(g), Resources(g).features, g.threads);
  const auto& bags = context.word_bags();
  std::vector<WordBag> side_a;
  std::vector<WordBag> side_b;
  for (std::size_t i = 0; i < context.pool_size(); ++i) {
    if (selected(context.pool_article(i), a.side_a)) side_a.push_back(bags[i]);
    if (selected(context.pool_article(i), a.side_b)) side_b.push_back(bags[i]);
  }
  if (side_a.empty() || side_b.empty()) {
    throw DataError("no documents match side " + (side_a.empty() ? a.side_a : a.side_b));
  }
  UnmaskingConfig unmasking = config.unmasking;
  unmasking.seed = g.seed;
  auto label = [](const std::string& s) { return s.substr(s.find(':') + 1); };
  const UnmaskingCurve curve =
      unmask_pair(side_a, side_b, unmasking, label(a.side_a), label(a.side_b), context.threads());
  const std::vector<UnmaskingCurve> curves = {curve};
  if (g.out_dir.empty()) {
    if (wants(g, "svg")) {
      write_curves_svg(curves, out);
    } else if (wants(g, "json")) {
      out << to_json(curve).dump(2) << "\n";
    } else {
      write_curve_csv(curve, out);
    }
    return kExitOk;
  }
  const fs::path stem = fs::path(g.out_dir) / ("unmask." + curve.label_a + "_vs_" + curve.label_b);
  fs::create_directories(g.out_dir);
  for (const OutputFormat f : output_formats(g)) {
    if (f == OutputFormat::csv) emit_curves(curves, CurveFormat::csv, stem.string() + ".csv");
    if (f == OutputFormat::svg) emit_curves(curves, CurveFormat::svg, stem.string() + ".svg");
    if (f == OutputFormat::json) write_text(stem.string() + ".json", to_json(curve).dump(2) + "\n");
  }
  return kExitOk;
}

// -- experiment ------------------------------------------------------------------

struct ExperimentArgs {
  std::string task;
  bool inject_leak = false;
};

int run_experiment_command(const Globals& g, const ExperimentArgs& a, std::ostream& out,
                           std::ostream& err) {
  const auto task = parse_task(a.task);
  if (!task) throw UsageError("unknown task '" + a.task + "'");
  ExperimentSpec spec;
  spec.task = *task;
  spec.seed = g.seed;
  spec.config = load_config(g);
  spec.inject_test_leak = a.inject_leak;

  const Resources resources(g);
  ExperimentContext context(require_corpus(g), optional_satire(g), resources.features, g.threads);
  const ExperimentResult result = run_experiment(context, spec);

  Provenance provenance;
  provenance.tool_version = NEWSSTYLE_VERSION;
  provenance.inputs.emplace_back("corpus", g.corpus);
  if (!g.satire_corpus.empty()) provenance.inputs.emplace_back("satire_corpus", g.satire_corpus);
  if (!g.config.empty()) provenance.inputs.emplace_back("config", g.config);
  if (!g.dictionary.empty()) provenance.inputs.emplace_back("dictionary", g.dictionary);
  provenance.leakage_vocabulary_checks = context.guard().vocabulary_checks();
  provenance.leakage_publisher_checks = context.guard().publisher_checks();

  const fs::path out_dir = g.out_dir.empty() ? fs::path("results") : fs::path(g.out_dir);
  for (const auto& path : write_experiment(result, spec, provenance, out_dir, output_formats(g))) {
    out << "wrote " << path.string() << "\n";
  }
  for (const Check& c : result.checks) {
    out << (c.passed ? "PASS  " : "FAIL  ") << c.name << " (" << c.detail << ")\n";
  }
  if (g.strict && !result.all_checks_passed()) {
    err << "error: checks failed\n";
    return kExitAssertion;
  }
  return kExitOk;
}

// -- train / predict -------------------------------------------------------------

struct TrainArgs {
  std::string task;
  std::string model = "style";
  std::string classifier = "forest";
  std::string output;
  std::string vocabulary_output;
};

fs::path vocabulary_path_for(const std::string& model_path) {
  fs::path p(model_path);
  p.replace_extension(".vocabulary.json");
  return p;
}

int run_train(const Globals& g, const TrainArgs& a, std::ostream& out) {
  const auto task = parse_task(a.task);
  if (!task) throw UsageError("unknown task '" + a.task + "'");
  const auto model = parse_feature_model(a.model);
  if (!model) throw UsageError("unknown feature model '" + a.model + "'");
  const ExperimentConfig config = load_config(g);

  Corpus corpus = require_corpus(g);
  if (auto satire = optional_satire(g)) {
    corpus.insert(corpus.end(), satire->begin(), satire->end());
  }
  Corpus selected;
  std::vector<std::string> labels;
  for (Article& article : corpus) {
    if (auto label = task_label(*task, article)) {
      labels.push_back(std::move(*label));
      selected.push_back(std::move(article));
    }
  }
  if (selected.empty()) throw DataError("no articles are labelled for task " + a.task);

  const Resources resources(g);
  ExtractionConfig extraction = ExtractionConfig::for_model(*model);
  extraction.min_n = config.min_n;
  extraction.max_n = config.max_n;
  FeatureSpace space;
  const auto profiles = extract_profiles(selected, extraction, resources.features, space, g.threads);
  std::vector<const DocumentProfile*> docs;
  for (const auto& p : profiles) docs.push_back(&p);
  const FeatureVocabulary vocabulary = build_vocabulary(docs, labels, space, config.selection);
  const Vectorizer vectorizer(vocabulary, space);
  std::vector<FeatureVector> x;
  for (const auto& p : profiles) x.push_back(vectorizer(p));

  ModelFile file;
  file.task = a.task;
  file.feature_model = a.model;
  file.vocabulary_checksum = vocabulary.checksum();
  if (a.classifier == "forest") {
    ForestConfig forest = config.forest;
    forest.seed = g.seed;
    ForestModel trained = train_forest(x, labels, forest, g.threads);
    file.classes = trained.classes;
    file.model = std::move(trained);
  } else {
    const std::set<std::string> classes(labels.begin(), labels.end());
    file.classes.assign(classes.begin(), classes.end());
    if (file.classes.size() != 2) throw DataError("the linear classifier needs exactly two classes");
    std::vector<int> y;
    for (const std::string& l : labels) y.push_back(l == file.classes[0] ? 1 : -1);
    LinearConfig linear = config.linear;
    linear.seed = g.seed;
    file.model = train_linear(x, y, linear);
  }
  const fs::path vocab_path =
      a.vocabulary_output.empty() ? vocabulary_path_for(a.output) : fs::path(a.vocabulary_output);
  if (fs::path(a.output).has_parent_path()) fs::create_directories(fs::path(a.output).parent_path());
  save_model(a.output, file);
  vocabulary.save(vocab_path);
  out << "trained " << a.classifier << " on " << selected.size() << " articles, "
      << vocabulary.size() << " features\n";
  out << "wrote " << a.output << "\nwrote " << vocab_path.string() << "\n";
  return kExitOk;
}

struct PredictArgs {
  std::string model;
  std::string vocabulary;
  std::string output;
};

int run_predict(const Globals& g, const PredictArgs& a, std::ostream& out) {
  const ModelFile file = load_model(a.model);
  const FeatureVocabulary vocabulary =
      FeatureVocabulary::load(a.vocabulary.empty() ? vocabulary_path_for(a.model) : fs::path(a.vocabulary));
  require_matching_vocabulary(file, vocabulary);
  const auto model = parse_feature_model(file.feature_model);
  if (!model) throw DataError("model names unknown feature model '" + file.feature_model + "'");
  const ExperimentConfig config = load_config(g);
  ExtractionConfig extraction = ExtractionConfig::for_model(*model);
  extraction.min_n = config.min_n;
  extraction.max_n = config.max_n;

  const Corpus corpus = require_corpus(g);
  const Resources resources(g);
  std::vector<std::string> predictions(corpus.size());
  parallel_for(
      corpus.size(),
      [&](std::size_t i) {
        const RawProfile raw = extract_profile(corpus[i], extraction, resources.features);
        predictions[i] = predict_label(file, vectorize(raw, vocabulary));
      },
      g.threads);
  std::ostringstream table;
  table << "id,prediction\n";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    table << csv::escape(corpus[i].id) << "," << csv::escape(predictions[i]) << "\n";
  }
  if (a.output.empty()) {
    out << table.str();
  } else {
    write_text(a.output, table.str());
  }
  return kExitOk;
}

// -- export ----------------------------------------------------------------------

struct ExportArgs {
  std::string kind;
  std::string model = "style";
  std::string label_task = "orientation_3class";
  std::size_t articles_per_publisher = 20;
  double style_strength = 1.0;
  std::size_t satire_per_class = 180;
};

// features: vocabulary built over the whole corpus plus one sparse vector per
// article. synthetic: a generated corpus and satire set.
int run_export(const Globals& g, const ExportArgs& a, std::ostream& out) {
  const fs::path dir = g.out_dir.empty() ? fs::path(".") : fs::path(g.out_dir);
  fs::create_directories(dir);
  if (a.kind == "synthetic") {
    SyntheticCorpusConfig config;
    config.articles_per_publisher = a.articles_per_publisher;
    config.style_strength = a.style_strength;
    config.seed = g.seed;
    std::ostringstream main_text;
    write_jsonl(make_synthetic_corpus(config), main_text);
    std::ostringstream satire_text;
    write_jsonl(make_synthetic_satire_corpus(a.satire_per_class, g.seed), satire_text);
    write_text(dir / "corpus.jsonl", main_text.str());
    write_text(dir / "satire.jsonl", satire_text.str());
    out << "wrote " << (dir / "corpus.jsonl").string() << "\nwrote "
        << (dir / "satire.jsonl").string() << "\n";
    return kExitOk;
  }

  const auto model = parse_feature_model(a.model);
  if (!model) throw UsageError("unknown feature model '" + a.model + "'");
  const auto task = parse_task(a.label_task);
  if (!task) throw UsageError("unknown task '" + a.label_task + "'");
  const ExperimentConfig config = load_config(g);
  const Corpus corpus = require_corpus(g);
  Corpus selected;
  std::vector<std::string> labels;
  for (const Article& article : corpus) {
    if (auto label = task_label(*task, article)) {
      labels.push_back(std::move(*label));
      selected.push_back(article);
    }
  }
  const Resources resources(g);
  ExtractionConfig extraction = ExtractionConfig::for_model(*model);
  extraction.min_n = config.min_n;
  extraction.max_n = config.max_n;
  FeatureSpace space;
  const auto profiles = extract_profiles(selected, extraction, resources.features, space, g.threads);
  std::vector<const DocumentProfile*> docs;
  for (const auto& p : profiles) docs.push_back(&p);
  const FeatureVocabulary vocabulary = build_vocabulary(docs, labels, space, config.selection);
  const Vectorizer vectorizer(vocabulary, space);
  std::ostringstream vectors;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const FeatureVector v = vectorizer(profiles[i]);
    vectors << json{{"id", selected[i].id}, {"label", labels[i]}, {"indices", v.indices},
                    {"values", v.values}}
                   .dump()
            << "\n";
  }
  vocabulary.save(dir / "vocabulary.json");
  write_text(dir / "vectors.jsonl", vectors.str());
  out << "wrote " << (dir / "vocabulary.json").string() << "\nwrote "
      << (dir / "vectors.jsonl").string() << "\n";
  return kExitOk;
}

}  // namespace

int cli_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Style-based analysis of hyperpartisan and fake news", "newsstyle"};
  app.set_version_flag("--version", NEWSSTYLE_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  app.failure_message(CLI::FailureMessage::help);

  Globals g;
  app.add_option("--corpus", g.corpus, "Main corpus (JSONL, or the annotation CSV)");
  app.add_option("--corpus-format", g.corpus_format, "jsonl or buzzfeed_csv")
      ->check(CLI::IsMember({"jsonl", "buzzfeed_csv"}));
  app.add_option("--archive-dir", g.archive_dir, "Archived article pages for buzzfeed_csv input");
  app.add_option("--satire-corpus", g.satire_corpus, "Satire and real articles (JSONL)");
  app.add_option("--seed", g.seed, "Master seed");
  app.add_option("--config", g.config, "JSON file of experiment config overrides");
  app.add_option("--out-dir", g.out_dir, "Directory for result files");
  app.add_option("--format", g.formats, "Output formats: csv, json, svg")
      ->delimiter(',')
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  app.add_option("--threads", g.threads, "Worker threads (0: all cores)");
  app.add_option("--dictionary", g.dictionary, "General Inquirer style CSV to replace the sample");
  app.add_flag("--strict", g.strict, "Exit 3 when a result check fails");

  ConvertArgs convert_args;
  auto* convert = app.add_subcommand("convert", "Convert the annotation CSV and archived pages to JSONL");
  convert->add_option("--input", convert_args.input, "Annotation CSV")->required();
  convert->add_option("--output", convert_args.output, "JSONL output (default: stdout)");

  auto* stats = app.add_subcommand("stats", "Corpus statistics by orientation and publisher");

  UnmaskArgs unmask_args;
  auto* unmask = app.add_subcommand("unmask", "Unmasking curve for two document sets");
  unmask->add_option("--side-a", unmask_args.side_a, "Selector key:value (orientation, veracity, rating, publisher)")
      ->required();
  unmask->add_option("--side-b", unmask_args.side_b, "Selector for the second side")->required();

  ExperimentArgs experiment_args;
  auto* experiment = app.add_subcommand("experiment", "Run one experiment and write its results");
  std::vector<std::string> task_names;
  for (const Task t : all_tasks()) task_names.emplace_back(to_string(t));
  experiment->add_option("task", experiment_args.task, "Experiment task")
      ->required()
      ->check(CLI::IsMember(task_names));
  experiment->add_flag("--inject-test-leak", experiment_args.inject_leak,
                       "Feed one test document to vocabulary construction (guard audit)");

  TrainArgs train_args;
  auto* train = app.add_subcommand("train", "Train a classifier on a whole corpus");
  train->add_option("--task", train_args.task, "Labelling task")->required();
  train->add_option("--model", train_args.model, "Feature model: style or topic")
      ->check(CLI::IsMember({"style", "topic"}));
  train->add_option("--classifier", train_args.classifier, "forest or linear")
      ->check(CLI::IsMember({"forest", "linear"}));
  train->add_option("--output", train_args.output, "Model file")->required();
  train->add_option("--vocabulary-output", train_args.vocabulary_output,
                    "Vocabulary file (default: <model>.vocabulary.json)");

  PredictArgs predict_args;
  auto* predict = app.add_subcommand("predict", "Label articles with a trained model");
  predict->add_option("--model", predict_args.model, "Model file")->required();
  predict->add_option("--vocabulary", predict_args.vocabulary, "Vocabulary file");
  predict->add_option("--output", predict_args.output, "CSV output (default: stdout)");

  ExportArgs export_args;
  auto* export_cmd = app.add_subcommand("export", "Export feature vectors or a synthetic corpus");
  export_cmd->add_option("kind", export_args.kind, "features or synthetic")
      ->required()
      ->check(CLI::IsMember({"features", "synthetic"}));
  export_cmd->add_option("--model", export_args.model, "Feature model for features")
      ->check(CLI::IsMember({"style", "topic"}));
  export_cmd->add_option("--label-task", export_args.label_task, "Task whose labels categorize documents");
  export_cmd->add_option("--articles-per-publisher", export_args.articles_per_publisher);
  export_cmd->add_option("--style-strength", export_args.style_strength);
  export_cmd->add_option("--satire-per-class", export_args.satire_per_class);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*convert) return run_convert(g, convert_args, out, err);
    if (*stats) return run_stats(g, out);
    if (*unmask) return run_unmask(g, unmask_args, out);
    if (*experiment) return run_experiment_command(g, experiment_args, out, err);
    if (*train) return run_train(g, train_args, out);
    if (*predict) return run_predict(g, predict_args, out);
    if (*export_cmd) return run_export(g, export_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "error: " << e.what() << "\n";
    return kExitAssertion;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace newsstyle
