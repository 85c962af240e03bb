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


// Acceptance gate: one PASS/FAIL line per primary criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <unistd.h>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "stylemine/apply/apply.hpp"
#include "stylemine/apply/repository.hpp"
#include "stylemine/bench/defects.hpp"
#include "stylemine/bench/eval.hpp"
#include "stylemine/bench/generator.hpp"
#include "stylemine/bench/report.hpp"
#include "stylemine/cli/model_file.hpp"
#include "stylemine/cli/train.hpp"
#include "stylemine/errors.hpp"
#include "stylemine/features/anova.hpp"
#include "stylemine/forest/random.hpp"
#include "stylemine/rules/rules.hpp"
#include "stylemine/syntax/parser.hpp"
#include "stylemine/syntax/tree_ops.hpp"

namespace {

using namespace stylemine;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Tolerances.
constexpr std::size_t kMinRoundTripFiles = 200;
constexpr double kRoundTripSeconds = 30.0;
constexpr double kStylePrecision = 0.95;
constexpr double kStylePredRate = 0.85;
constexpr double kStageSeconds = 600.0;
constexpr std::size_t kMinDefects = 50;
constexpr std::size_t kDefects = 80;
constexpr double kFixPrecision = 0.90;
constexpr double kFixPredRate = 0.50;
constexpr std::size_t kOracleSamples = 10000;
constexpr std::size_t kRandomRules = 1000;
constexpr double kPruningPrecisionDrop = 0.001;
constexpr int kAnovaMatrices = 20;
constexpr std::uint32_t kEmptyRuleHash = 0xc2ede373u;

int failures = 0;

void report(const char* name, bool pass, const std::string& detail) {
  std::printf("%s %s: %s\n", pass ? "PASS" : "FAIL", name, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

fs::path corpus_root() { return fs::path(STYLEMINE_DATA_DIR) / "corpus" / "jquery-3.7.1"; }

std::vector<cli::SourceFile> jquery_files() {
  return cli::collect_files(apply::DirectoryRepository(corpus_root()), apply::kWorkingTree);
}

/// Training rows of a model rebuilt from the corpus it was trained on.
struct TrainingData {
  std::vector<features::Sample> samples;
  forest::Dataset data;
};

TrainingData training_data(const std::vector<cli::SourceFile>& files, const cli::RunConfig& config,
                           const apply::Model& model) {
  const auto corpus = cli::prepare_corpus(files, config);
  TrainingData out;
  for (std::size_t i = 0; i < corpus.streams.size(); ++i) {
    auto s = features::extract_samples(corpus.streams[i], model.vocabulary, model.scheme,
                                       static_cast<std::uint32_t>(i));
    std::move(s.begin(), s.end(), std::back_inserter(out.samples));
  }
  out.data = forest::make_dataset(out.samples, model.scheme.selected(), model.scheme.width(),
                                  model.vocabulary.size());
  return out;
}

void round_trip() {
  const auto start = Clock::now();
  auto files = jquery_files();
  for (auto& f : bench::generate_corpus(100, 2026)) files.push_back(std::move(f));
  std::size_t exact = 0;
  std::string first_failure;
  for (const auto& f : files) {
    try {
      if (syntax::tokenize(f.content).reconstruct() == f.content) {
        ++exact;
        continue;
      }
    } catch (const Error& e) {
      if (first_failure.empty()) first_failure = f.path + ": " + e.what();
      continue;
    }
    if (first_failure.empty()) first_failure = f.path;
  }
  const double t = seconds_since(start);
  report("round-trip",
         files.size() >= kMinRoundTripFiles && exact == files.size() && t < kRoundTripSeconds,
         fmt::format("{}/{} files byte-exact in {:.1f}s{}", exact, files.size(), t,
                     first_failure.empty() ? "" : " (first failure " + first_failure + ")"));
}

void style_modeling(const cli::RunConfig& config) {
  const auto start = Clock::now();
  const auto row = bench::style_modeling_row("jquery", jquery_files(), config);
  const double t = seconds_since(start);
  const auto& m = row.metrics;
  report("style-modeling",
         m.precision >= kStylePrecision && m.pred_rate >= kStylePredRate && t < kStageSeconds,
         fmt::format("precision {:.4f} (>= {}), PredR {:.4f} (>= {}), recall {:.4f}, {} rules, "
                     "{:.0f}s",
                     m.precision, kStylePrecision, m.pred_rate, kStylePredRate, m.recall,
                     m.n_rules, t));
}

std::vector<bench::Defect> seeded_defects(const std::vector<cli::SourceFile>& files,
                                          std::uint64_t seed) {
  bench::DefectSpec spec;
  spec.seed = seed;
  const std::size_t quarter = kDefects / 4;
  spec.counts = {{bench::DefectKind::Whitespace, kDefects - 3 * quarter},
                 {bench::DefectKind::Newline, quarter},
                 {bench::DefectKind::Indentation, quarter},
                 {bench::DefectKind::Quote, quarter}};
  return bench::seed_defects(files, spec).defects;
}

void defect_fixing(const apply::Model& model, const std::vector<bench::Defect>& defects,
                   const cli::RunConfig& config, double training_seconds) {
  const auto start = Clock::now();
  apply::AnalysisOptions options;
  options.min_confidence = config.confidence_threshold;
  const auto curve = bench::defect_fixing_curve(model, defects, options);
  const auto& end = curve.back();
  const double t = training_seconds + seconds_since(start);
  report("defect-fixing",
         defects.size() >= kMinDefects && end.precision >= kFixPrecision &&
             end.pred_rate >= kFixPredRate && t < kStageSeconds,
         fmt::format("{} defects, {} proposed, {} correct: precision {:.4f} (>= {}), PredR {:.4f} "
                     "(>= {}) with {} rules, {:.0f}s",
                     defects.size(), end.proposed, end.correct, end.precision, kFixPrecision,
                     end.pred_rate, kFixPredRate, end.n_rules, t));
}

void forest_vs_rules(const apply::Model& model, const TrainingData& td,
                     const rules::RuleSet& raw) {
  const auto& scheme = model.scheme;
  const auto& forest = *model.forest;
  std::vector<std::vector<const rules::Rule*>> by_tree(forest.trees.size());
  for (const auto& r : raw.rules) by_tree[r.tree].push_back(&r);
  const std::size_t n = std::min(kOracleSamples, td.samples.size());
  std::size_t violations = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = rules::dense(td.samples[i].x, scheme.width());
    for (std::size_t t = 0; t < forest.trees.size(); ++t) {
      const auto& leaf = forest.trees[t].nodes[forest.trees[t].leaf_for(x)];
      const auto predicted = static_cast<std::uint32_t>(
          std::max_element(leaf.counts.begin(), leaf.counts.end()) - leaf.counts.begin());
      std::size_t fired = 0;
      bool agrees = true;
      for (const auto* r : by_tree[t]) {
        if (!r->fires(scheme, x)) continue;
        ++fired;
        agrees = agrees && r->label == predicted;
      }
      violations += fired != 1 || !agrees;
    }
  }
  report("forest-vs-rules", n >= kOracleSamples && violations == 0,
         fmt::format("{} violations over {} samples x {} trees ({} raw rules)", violations, n,
                     forest.trees.size(), raw.rules.size()));
}

void transform_safety(const apply::Model& model, const TrainingData& td, const rules::RuleSet& raw,
                      const cli::RunConfig& config) {
  const auto& scheme = model.scheme;
  const rules::SampleIndex index(td.data, scheme);

  // Random rules assembled from the clauses the forest produced. Every other
  // rule draws from a single attribute group so that merges happen.
  std::vector<rules::Clause> pool;
  std::map<rules::AttributeGroup, std::vector<rules::Clause>> by_group;
  for (const auto& r : raw.rules) {
    for (const auto& c : r.clauses) {
      pool.push_back(c);
      by_group[c.group()].push_back(c);
    }
  }
  forest::Rng rng(7);
  std::vector<rules::Rule> originals;
  std::vector<rules::Rule> merged;
  for (std::size_t i = 0; i < kRandomRules; ++i) {
    const auto& source = i % 2 ? pool : by_group[pool[rng.below(pool.size())].group()];
    rules::Rule r;
    const auto n = 1 + rng.below(12);
    for (std::uint64_t c = 0; c < n; ++c) r.clauses.push_back(source[rng.below(source.size())]);
    r.label = static_cast<std::uint32_t>(rng.below(model.vocabulary.size()));
    merged.push_back(rules::merge_clauses(r));
    originals.push_back(std::move(r));
  }
  std::size_t merge_violations = 0;
  std::size_t dead = 0;
  for (std::size_t i = 0; i < kRandomRules; ++i) {
    const auto before = index.fired(originals[i]);
    if (merged[i].dead) {
      ++dead;
      merge_violations += before.any();
    } else {
      merge_violations += index.fired(merged[i]) != before;
    }
  }
  // Direct clause evaluation on dense rows, independent of the index.
  const std::size_t n = std::min(kOracleSamples, td.samples.size());
  for (std::size_t s = 0; s < n; ++s) {
    const auto x = rules::dense(td.samples[s].x, scheme.width());
    for (std::size_t i = 0; i < kRandomRules; ++i) {
      const bool a = originals[i].fires(scheme, x);
      const bool b = !merged[i].dead && merged[i].fires(scheme, x);
      merge_violations += a != b;
    }
  }

  std::size_t prune_violations = 0;
  std::size_t pruned_clauses = 0;
  for (const auto& r : raw.rules) {
    const auto m = rules::merge_clauses(r);
    if (m.dead) continue;
    const auto p = rules::prune_attributes(m, index);
    pruned_clauses += m.clauses.size() - p.clauses.size();
    prune_violations += !index.fired(m).is_subset_of(index.fired(p));
  }

  const auto once = rules::dedupe(model.rules, scheme);
  const auto twice = rules::dedupe(once, scheme);
  bool idempotent = once.rules.size() == model.rules.rules.size() &&
                    twice.rules.size() == once.rules.size();
  for (std::size_t i = 0; idempotent && i < once.rules.size(); ++i) {
    idempotent = rules::canonical_string(once.rules[i], scheme) ==
                 rules::canonical_string(twice.rules[i], scheme);
  }

  const rules::PostprocessOptions base{config.confidence_threshold, config.jaccard_threshold, false};
  auto with_pruning = base;
  with_pruning.prune = true;
  const auto unpruned = rules::postprocess(raw, index, base);
  const auto pruned = rules::postprocess(raw, index, with_pruning);
  const auto [c0, n0] = rules::training_precision(unpruned, index);
  const auto [c1, n1] = rules::training_precision(pruned, index);
  const double p0 = n0 ? static_cast<double>(c0) / static_cast<double>(n0) : 1.0;
  const double p1 = n1 ? static_cast<double>(c1) / static_cast<double>(n1) : 1.0;
  const double drop = p0 - p1;

  report("transform-safety",
         merge_violations == 0 && dead < kRandomRules && prune_violations == 0 && idempotent &&
             drop <= kPruningPrecisionDrop,
         fmt::format("merge: {} violations over {} random rules ({} dead); prune: {} fired-set "
                     "shrinks, {} clauses removed; dedupe idempotent: {}; training precision "
                     "{:.4f} -> {:.4f} after pruning (drop {:.4f}, allowed {}), avg length "
                     "{:.2f} -> {:.2f}",
                     merge_violations, kRandomRules, dead, prune_violations, pruned_clauses,
                     idempotent ? "yes" : "no", p0, p1, drop, kPruningPrecisionDrop,
                     unpruned.average_length(), pruned.average_length()));
}

/// Textbook one-way ANOVA in long double.
long double reference_f(const std::vector<double>& x, const std::vector<int>& y) {
  std::map<int, std::vector<long double>> groups;
  for (std::size_t i = 0; i < x.size(); ++i) groups[y[i]].push_back(x[i]);
  long double grand = 0;
  for (const double v : x) grand += v;
  grand /= static_cast<long double>(x.size());
  long double ssb = 0;
  long double ssw = 0;
  for (const auto& [label, values] : groups) {
    long double mean = 0;
    for (const auto v : values) mean += v;
    mean /= static_cast<long double>(values.size());
    ssb += static_cast<long double>(values.size()) * (mean - grand) * (mean - grand);
    for (const auto v : values) ssw += (v - mean) * (v - mean);
  }
  const auto k = static_cast<long double>(groups.size());
  const auto n = static_cast<long double>(x.size());
  if (ssw == 0) return ssb == 0 ? 0.0L : INFINITY;
  return (ssb / (k - 1)) / (ssw / (n - k));
}

void anova_selection() {
  forest::Rng rng(41);
  int matched = 0;
  for (int round = 0; round < kAnovaMatrices; ++round) {
    const int n = 50;
    const int d = 30;
    const auto k = static_cast<std::size_t>(1 + rng.below(d - 1));
    Eigen::MatrixXd dense(n, d);
    Eigen::VectorXi y(n);
    std::vector<int> yv(n);
    for (int i = 0; i < n; ++i) yv[i] = y[i] = static_cast<int>(rng.below(4));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < d; ++j) dense(i, j) = rng.uniform() < 0.6 ? 0.0 : rng.uniform() * 5;
    }
    const Eigen::SparseMatrix<double> sparse = dense.sparseView();
    const Eigen::VectorXd scores = features::anova_f(sparse, y);
    std::vector<bool> all_zero(d);
    for (int j = 0; j < d; ++j) all_zero[j] = dense.col(j).isZero(0);
    const auto got = features::top_k(scores, all_zero, k);

    std::vector<std::pair<long double, int>> ranked;
    for (int j = 0; j < d; ++j) {
      std::vector<double> col(dense.col(j).data(), dense.col(j).data() + n);
      ranked.emplace_back(all_zero[j] ? -1.0L : reference_f(col, yv), j);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    std::set<std::uint32_t> expected;
    for (std::size_t i = 0; i < k; ++i) expected.insert(static_cast<std::uint32_t>(ranked[i].second));
    matched += std::set<std::uint32_t>(got.begin(), got.end()) == expected;
  }
  report("anova-selection", matched == kAnovaMatrices,
         fmt::format("{}/{} random 50x30 matrices give the oracle's top-k set", matched,
                     kAnovaMatrices));
}

/// True when the verified fix for `y_hat` at the gap after the `n`-th token
/// spelled `after` is dropped.
bool rejected(const std::string& source, std::string_view after, const char* y_hat) {
  const auto stream = syntax::tokenize(source);
  std::size_t gap = 0;
  for (std::size_t i = 0; i + 1 < stream.tokens.size(); ++i) {
    if (stream.tokens[i].is_semantic() && stream.tokens[i].value == after) {
      gap = i + 1;
      break;
    }
  }
  apply::Prediction p;
  p.gap = gap;
  p.position = stream.tokens[gap].start;
  for (const auto& g : features::label_gaps(stream)) {
    if (g.token == gap) p.y = g.label;
  }
  p.y_hat = features::CompoundLabel::parse(y_hat);
  p.confidence = 1.0;
  const auto fixes = apply::generate_fixes(stream, {p});
  return !fixes.empty() && apply::verify_ast_safety(stream, fixes).empty();
}

void ast_safety(const apply::Model& model, const std::vector<bench::Defect>& defects) {
  std::size_t suggestions = 0;
  std::size_t unsafe = 0;
  for (const auto& d : defects) {
    const auto original = syntax::parse_file(d.mutated);
    const auto all = apply::suggest(model, d.path, d.mutated, std::nullopt);
    suggestions += all.size();
    auto check = [&](const std::vector<apply::Suggestion>& s) {
      try {
        unsafe += !syntax::structurally_equal(
            syntax::parse_file(apply::apply_suggestions(d.mutated, s)), original);
      } catch (const Error&) {
        ++unsafe;
      }
    };
    check(all);
    for (const auto& s : all) check({s});
  }
  const bool return_value =
      rejected("function f( value ) {\n\treturn value;\n}\n", "return", "NOOP");
  const bool call_padding = rejected("if ( isArray( value ) ) {\n}\n", "isArray", "SPACE");
  report("ast-safety", unsafe == 0 && return_value && call_padding,
         fmt::format("{} unsafe outcomes over {} suggestions on {} defect files; "
                     "`return value` -> `returnvalue` rejected: {}; space inserted in "
                     "`isArray( value )` call rejected: {}{}",
                     unsafe, suggestions, defects.size(), return_value ? "yes" : "no",
                     call_padding ? "yes" : "no",
                     call_padding ? "" : " (trees are equal once positions are excluded)"));
}

void determinism(const cli::TrainResult& a, const cli::TrainResult& b) {
  const fs::path dir = fs::temp_directory_path() / fmt::format("stylemine-acceptance-{}", ::getpid());
  fs::create_directories(dir);
  cli::save_model({a.model, a.info}, dir / "a.smdl");
  cli::save_model({b.model, b.info}, dir / "b.smdl");
  auto read = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const bool identical = read(dir / "a.smdl") == read(dir / "b.smdl");
  const auto size = fs::file_size(dir / "a.smdl");
  fs::remove_all(dir);

  rules::Rule empty;
  const features::FeatureScheme scheme;
  const bool pinned = rules::hash_rule(empty, scheme) == kEmptyRuleHash &&
                      rules::fnv1a32("") == 0x811c9dc5u && rules::fnv1a32("a") == 0xe40c292cu &&
                      rules::fnv1a32("foobar") == 0xbf9cf968u;
  bool rehash = true;
  std::set<std::uint32_t> hashes;
  for (const auto& r : a.model.rules.rules) {
    rehash = rehash && r.hash == rules::hash_rule(r, a.model.scheme);
    hashes.insert(r.hash);
  }
  const bool injective = hashes.size() == a.model.rules.rules.size();
  report("determinism", identical && pinned && rehash && injective,
         fmt::format("model files identical: {} ({} bytes, sha256 {}); pinned hash vectors: {}; "
                     "stored hashes recompute: {}; hashes distinct: {}",
                     identical ? "yes" : "no", size,
                     cli::model_digest({a.model, a.info}).substr(0, 16), pinned ? "yes" : "no",
                     rehash ? "yes" : "no", injective ? "yes" : "no"));
}

void leaf_sweep(const cli::RunConfig& config) {
  auto [train, validation] = bench::split_corpus(jquery_files(), 0.8, config.seed);
  const auto rows = bench::leaf_size_sweep(train, validation, {20, 80, 200, 500}, config);
  std::vector<double> counts;
  std::vector<double> lengths;
  std::string table;
  for (const auto& r : rows) {
    counts.push_back(static_cast<double>(r.n_rules));
    lengths.push_back(r.avg_rule_length);
    table += fmt::format(" [{}: {} rules, length {:.2f}, precision {:.3f}, PredR {:.3f}]",
                         r.min_samples_leaf, r.n_rules, r.avg_rule_length, r.precision,
                         r.pred_rate);
  }
  report("leaf-sweep", bench::non_increasing(counts) && bench::non_increasing(lengths),
         "min_samples_leaf" + table);
}

/// The searched model predicts a break after the brace of `{return value;}`.
void running_example(const apply::Model& model) {
  const std::string source =
      "function classesToArray( value ) {\n"
      "\tif ( isArray( value ) ) {return value;}\n"
      "\treturn [];\n"
      "}\n";
  std::string found = "no prediction";
  for (const auto& p : apply::analyze_file(model, source).predictions) {
    if (p.position.line == 2 && p.position.column == 27) {
      found = p.y.to_string() + " -> " + p.y_hat->to_string() +
              fmt::format(" (confidence {:.3f}, support {})", p.confidence, p.support);
    }
  }
  std::printf("INFO isArray snippet `{` -> `return`: %s\n", found.c_str());
}

}  // namespace

int main() {
  spdlog::set_level(spdlog::level::warn);
  const cli::RunConfig config;

  round_trip();
  anova_selection();
  style_modeling(config);

  const auto files = jquery_files();
  const auto start = Clock::now();
  const auto first = cli::train_model(files, config);
  const double training_seconds = seconds_since(start);
  const auto& model = first.model;
  running_example(model);

  const auto defects = seeded_defects(files, config.seed);
  defect_fixing(model, defects, config, training_seconds);
  ast_safety(model, defects);

  const auto td = training_data(files, config, model);
  const rules::SampleIndex index(td.data, model.scheme);
  const auto raw = rules::extract_rules(*model.forest, index);
  forest_vs_rules(model, td, raw);
  transform_safety(model, td, raw, config);

  determinism(first, cli::train_model(files, config));
  leaf_sweep(config);

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
