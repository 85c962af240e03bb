// Copyright 2026 The stylemine Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "stylemine/apply/apply.hpp"
#include "stylemine/apply/repository.hpp"
#include "stylemine/bench/defects.hpp"
#include "stylemine/bench/report.hpp"
#include "stylemine/cli/annotate.hpp"
#include "stylemine/cli/config.hpp"
#include "stylemine/cli/model_file.hpp"
#include "stylemine/cli/server.hpp"
#include "stylemine/cli/train.hpp"
#include "stylemine/errors.hpp"
#include "stylemine/feedback/feedback.hpp"
#include "stylemine/rules/rules.hpp"

namespace fs = std::filesystem;
using namespace stylemine;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitSuggestions = 1;
constexpr int kExitError = 2;

/// Flags that override the repository config file.
struct ConfigFlags {
  cli::ConfigOverrides values;
  std::string config_file;

  void add_to(CLI::App& app, bool training) {
    app.add_option("--config", config_file, "Config file (default: <repo>/.stylemine.yml)");
    app.add_option("--confidence", values.confidence_threshold, "Rule confidence threshold");
    app.add_option("--min-support", values.min_support, "Rule support threshold");
    if (!training) return;
    app.add_option("--label-threshold", values.min_label_occurrences,
                   "Minimum occurrences of a label");
    app.add_option("--trees", values.n_trees, "Number of trees");
    app.add_option("--min-leaf", values.min_samples_leaf, "Minimum samples per leaf");
    app.add_option("--byte-cap", values.training_byte_cap, "Training corpus byte cap");
    app.add_option("--max-line-length", values.max_line_length, "Drop files with longer lines");
    app.add_option("--top-k", values.feature_top_k, "Selected features");
    app.add_option("--jaccard", values.jaccard_threshold, "Attribute pruning threshold");
    app.add_option("--seed", values.seed, "Random seed");
    app.add_option("--search-budget", values.search_budget,
                   "Hyper-parameter candidates (0 disables the search)");
    app.add_option("--folds", values.search_folds, "Cross-validation folds");
    app.add_option("--search-samples", values.search_max_samples,
                   "Row subsample used by the search");
  }

  cli::RunConfig resolve(const fs::path& repo) const {
    const auto path = config_file.empty() ? repo / cli::kConfigFileName : fs::path(config_file);
    return cli::resolve_config(cli::load_config_file(path), values);
  }
};

std::unique_ptr<apply::Repository> open_repository(const fs::path& root) {
  if (fs::exists(root / ".git")) return std::make_unique<apply::GitRepository>(root);
  return std::make_unique<apply::DirectoryRepository>(root);
}

std::string default_revision(const fs::path& root) {
  return fs::exists(root / ".git") ? "HEAD" : apply::kWorkingTree;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Error("cannot write " + path);
}

std::vector<cli::SourceFile> directory_files(const fs::path& root) {
  return cli::collect_files(apply::DirectoryRepository(root), apply::kWorkingTree);
}

apply::AnalysisOptions analysis_options(const cli::RunConfig& config,
                                        const fs::path& model_path) {
  apply::AnalysisOptions options;
  options.min_confidence = config.confidence_threshold;
  options.min_support = config.min_support;
  options.blacklist = config.blacklist;
  const auto automatic =
      feedback::FeedbackLedger::load(feedback::ledger_path(model_path)).automatic_blacklist();
  options.blacklist.insert(automatic.hashes.begin(), automatic.hashes.end());
  return options;
}

// ---- verbs -----------------------------------------------------------------

struct TrainArgs {
  std::string repo = ".";
  std::string revision;
  std::string output = "model.smdl";
  ConfigFlags flags;
};

int run_train(const TrainArgs& a) {
  const fs::path root(a.repo);
  const auto config = a.flags.resolve(root);
  const auto repo = open_repository(root);
  const auto revision = a.revision.empty() ? default_revision(root) : a.revision;
  auto files = cli::collect_files(*repo, revision);
  spdlog::info("training on {} files at {}", files.size(), revision);
  auto result = cli::train_model(std::move(files), config);
  for (const auto& s : result.skipped) spdlog::debug("skipped {}: {}", s.path, s.reason);
  const cli::ModelFile file{std::move(result.model), result.info};
  cli::save_model(file, a.output);
  std::cout << "rules: " << file.model.rules.rules.size() << "\n"
            << "average rule length: " << file.model.rules.average_length() << "\n"
            << "labels: " << file.model.vocabulary.size() << "\n"
            << "files: " << result.info.n_files << " (" << result.skipped.size()
            << " skipped), samples: " << result.info.n_samples << "\n"
            << "parameters: " << result.info.params.text() << "\n"
            << "seconds: " << result.seconds << "\n"
            << "model: " << a.output << " sha256 " << cli::model_digest(file) << "\n";
  return kExitClean;
}

struct AnalyzeArgs {
  std::string model;
  std::string repo = ".";
  std::string base;
  std::string head = apply::kWorkingTree;
  std::string format = "text";
  std::string output;
  ConfigFlags flags;
};

int run_analyze(const AnalyzeArgs& a) {
  const fs::path root(a.repo);
  const auto model = cli::load_model(a.model);
  const auto config = a.flags.resolve(root);
  const auto repo = open_repository(root);
  repo->check_revision(a.base);
  repo->check_revision(a.head);
  const auto changeset = repo->diff(a.base, a.head);
  const auto report =
      apply::analyze_changeset(model.model, *repo, changeset, analysis_options(config, a.model));
  for (const auto& s : report.skipped) spdlog::warn("skipped {}: {}", s.path, s.reason);
  const auto text = a.format == "json" ? apply::format_json(report.suggestions) + "\n"
                                       : apply::format_text(report.suggestions);
  if (!report.suggestions.empty() || a.format == "json") write_output(a.output, text);
  return report.suggestions.empty() ? kExitClean : kExitSuggestions;
}

struct ExportArgs {
  std::string model;
  std::string file;
  std::string output;
  std::optional<double> confidence;
  std::optional<std::uint64_t> support;
  std::string config_file;
};

int run_export(const ExportArgs& a) {
  const auto model = cli::load_model(a.model);
  cli::ConfigOverrides file_overrides;
  if (!a.config_file.empty()) file_overrides = cli::load_config_file(a.config_file);
  const auto config = cli::resolve_config(file_overrides, {});
  cli::AnnotationOptions options;
  options.min_confidence = a.confidence.value_or(config.confidence_threshold);
  options.min_support = a.support.value_or(config.min_support);
  options.blacklist = config.blacklist;
  const auto doc = cli::annotate(model.model, a.file, read_file(a.file), options);
  write_output(a.output, cli::to_json(doc) + "\n");
  return kExitClean;
}

struct ServeArgs {
  std::string model;
  std::string root = ".";
  std::string assets;
  std::string host = "127.0.0.1";
  int port = 8080;
};

cli::AnnotationServer* g_server = nullptr;

int run_serve(const ServeArgs& a) {
  cli::ServerOptions options;
  options.corpus_root = a.root;
  options.assets = a.assets;
  options.host = a.host;
  options.port = a.port;
  cli::AnnotationServer server(cli::load_model(a.model), options);
  const int port = server.bind();
  g_server = &server;
  std::signal(SIGINT, [](int) {
    if (g_server) g_server->stop();
  });
  std::signal(SIGTERM, [](int) {
    if (g_server) g_server->stop();
  });
  spdlog::info("serving {} on http://{}:{}", a.root, a.host, port);
  server.run();
  g_server = nullptr;
  return kExitClean;
}

struct BenchArgs {
  std::string corpus;
  std::string name;
  std::string csv;
  std::string curve_csv;
  std::size_t defects = 80;
  std::vector<std::uint32_t> leaves{20, 80, 200, 500};
  ConfigFlags flags;
};

int run_bench_model(const BenchArgs& a) {
  const auto config = a.flags.resolve(a.corpus);
  const auto name = a.name.empty() ? fs::path(a.corpus).filename().string() : a.name;
  const auto row = bench::style_modeling_row(name, directory_files(a.corpus), config);
  write_output(a.csv, bench::table_csv({row}));
  return kExitClean;
}

int run_bench_defects(const BenchArgs& a) {
  const auto config = a.flags.resolve(a.corpus);
  const auto files = directory_files(a.corpus);
  const auto trained = cli::train_model(files, config);
  bench::DefectSpec spec;
  spec.seed = config.seed;
  const std::size_t quarter = a.defects / 4;
  spec.counts = {{bench::DefectKind::Whitespace, a.defects - 3 * quarter},
                 {bench::DefectKind::Newline, quarter},
                 {bench::DefectKind::Indentation, quarter},
                 {bench::DefectKind::Quote, quarter}};
  const auto set = bench::seed_defects(files, spec);
  apply::AnalysisOptions options;
  options.min_confidence = config.confidence_threshold;
  options.min_support = config.min_support;
  const auto curve = bench::defect_fixing_curve(trained.model, set.defects, options);
  spdlog::info("{} defects seeded, {} files without a site", set.defects.size(),
               set.skipped.size());
  write_output(a.csv, bench::curve_csv(curve));
  return kExitClean;
}

int run_bench_sweep(const BenchArgs& a) {
  const auto config = a.flags.resolve(a.corpus);
  auto [train, validation] = bench::split_corpus(directory_files(a.corpus), 0.8, config.seed);
  const auto rows = bench::leaf_size_sweep(train, validation, a.leaves, config);
  write_output(a.csv, bench::sweep_csv(rows));
  return kExitClean;
}

struct FeedbackArgs {
  std::string model;
  std::string hash;
  std::uint64_t made = 0;
  std::uint64_t merged = 0;
};

int run_feedback_record(const FeedbackArgs& a) {
  const auto path = feedback::ledger_path(a.model);
  auto ledger = feedback::FeedbackLedger::load(path);
  const auto hash = rules::parse_hash(a.hash);
  ledger.record(hash, a.made, a.merged);
  ledger.save(path);
  const auto& entry = ledger.entries().at(hash);
  std::cout << rules::hash_hex(hash) << ": " << entry.suggestions_merged << "/"
            << entry.suggestions_made << " merged"
            << (feedback::should_blacklist(entry) ? ", automatically blacklisted" : "") << "\n";
  return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mines formatting rules from a JavaScript code base and suggests fixes."};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Debug logging");

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Train a model on a repository revision");
  train_cmd->add_option("--repo", train.repo, "Repository or directory");
  train_cmd->add_option("--revision", train.revision, "Revision (default: HEAD or WORKTREE)");
  train_cmd->add_option("-o,--output", train.output, "Model file");
  train.flags.add_to(*train_cmd, true);

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Suggest fixes for changed lines");
  analyze_cmd->add_option("-m,--model", analyze.model, "Model file")->required();
  analyze_cmd->add_option("--repo", analyze.repo, "Repository or directory");
  analyze_cmd->add_option("--base", analyze.base, "Base revision")->required();
  analyze_cmd->add_option("--head", analyze.head, "Head revision or WORKTREE");
  analyze_cmd->add_option("--format", analyze.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("-o,--output", analyze.output, "Output file");
  analyze.flags.add_to(*analyze_cmd, false);

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Benchmarks");
  bench_cmd->require_subcommand(1);
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--corpus", bench_args.corpus, "Directory of JavaScript files")->required();
    cmd->add_option("--csv", bench_args.csv, "CSV output (default: stdout)");
    bench_args.flags.add_to(*cmd, true);
  };
  auto* bench_model = bench_cmd->add_subcommand("model", "Style-modeling table row");
  add_common(bench_model);
  bench_model->add_option("--name", bench_args.name, "Repository name in the table");
  auto* bench_defects = bench_cmd->add_subcommand("defects", "Seeded-defect fixing curve");
  add_common(bench_defects);
  bench_defects->add_option("--count", bench_args.defects, "Defects to seed");
  auto* bench_sweep = bench_cmd->add_subcommand("sweep", "Leaf-size sweep");
  add_common(bench_sweep);
  bench_sweep->add_option("--leaves", bench_args.leaves, "Leaf sizes")->delimiter(',');

  ExportArgs export_args;
  auto* export_cmd = app.add_subcommand("export", "Annotation document for one file");
  export_cmd->add_option("-m,--model", export_args.model, "Model file")->required();
  export_cmd->add_option("file", export_args.file, "JavaScript file")->required();
  export_cmd->add_option("--confidence", export_args.confidence, "Confidence threshold");
  export_cmd->add_option("--support", export_args.support, "Support threshold");
  export_cmd->add_option("--config", export_args.config_file, "Config file with a blacklist");
  export_cmd->add_option("-o,--output", export_args.output, "Output file");

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Serve annotations to the visualizer");
  serve_cmd->add_option("-m,--model", serve.model, "Model file")->required();
  serve_cmd->add_option("--root", serve.root, "Corpus root");
  serve_cmd->add_option("--assets", serve.assets, "Static visualizer files");
  serve_cmd->add_option("--host", serve.host, "Listen address");
  serve_cmd->add_option("--port", serve.port, "Port (0 picks a free one)");

  FeedbackArgs fb;
  auto* feedback_cmd = app.add_subcommand("feedback", "Suggestion feedback");
  feedback_cmd->require_subcommand(1);
  auto* record_cmd = feedback_cmd->add_subcommand("record", "Record suggestion outcomes");
  record_cmd->add_option("-m,--model", fb.model, "Model file")->required();
  record_cmd->add_option("--hash", fb.hash, "Rule hash")->required();
  record_cmd->add_option("--made", fb.made, "Suggestions made")->required();
  record_cmd->add_option("--merged", fb.merged, "Suggestions merged")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitClean : kExitError;
  }
  spdlog::set_level(verbose ? spdlog::level::debug : spdlog::level::info);
  spdlog::set_pattern("%^%l%$: %v");

  try {
    if (*train_cmd) return run_train(train);
    if (*analyze_cmd) return run_analyze(analyze);
    if (*bench_model) return run_bench_model(bench_args);
    if (*bench_defects) return run_bench_defects(bench_args);
    if (*bench_sweep) return run_bench_sweep(bench_args);
    if (*export_cmd) return run_export(export_args);
    if (*serve_cmd) return run_serve(serve);
    if (*record_cmd) return run_feedback_record(fb);
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitError;
  }
  return kExitError;
}
