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


#include <doctest.h>

#include <numeric>

#include "fixtures.hpp"
#include "stylemine/bench/defects.hpp"
#include "stylemine/bench/eval.hpp"
#include "stylemine/bench/generator.hpp"
#include "stylemine/bench/report.hpp"
#include "stylemine/errors.hpp"
#include "stylemine/syntax/parser.hpp"
#include "stylemine/syntax/tree_ops.hpp"

using namespace stylemine;
using namespace stylemine::bench;

namespace {

std::size_t bytes(const std::vector<cli::SourceFile>& files) {
  std::size_t n = 0;
  for (const auto& f : files) n += f.content.size();
  return n;
}

}  // namespace

TEST_CASE("corpus split") {
  CHECK_THROWS_AS(split_corpus({{"a.js", "a"}}), TooFewFiles);
  const auto [one, two] = split_corpus({{"a.js", "aaaa"}, {"b.js", "bbbb"}});
  CHECK(one.size() == 1);
  CHECK(two.size() == 1);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto files = generate_corpus(25, seed);
    const auto [train, test] = split_corpus(files, 0.8, seed);
    CHECK(train.size() + test.size() == files.size());
    CHECK_FALSE(test.empty());
    std::set<std::string> paths;
    for (const auto& f : train) paths.insert(f.path);
    for (const auto& f : test) CHECK_FALSE(paths.count(f.path));
    std::size_t largest = 0;
    for (const auto& f : files) largest = std::max(largest, f.content.size());
    const double total = static_cast<double>(bytes(files));
    CHECK(bytes(train) >= 0.8 * total);
    CHECK(static_cast<double>(bytes(train)) < 0.8 * total + static_cast<double>(largest));
    const auto again = split_corpus(files, 0.8, seed);
    CHECK(again.first.size() == train.size());
    CHECK(again.first.front().path == train.front().path);
  }
}

TEST_CASE("metrics") {
  SUBCASE("prediction rate") {
    std::vector<PredictionRecord> records(1000);
    for (std::size_t i = 0; i < records.size(); ++i) records[i].y_hat = i < 951 ? 0 : -1;
    const auto m = metrics_from_records(records, {"NOOP"});
    CHECK(m.pred_rate == doctest::Approx(0.951));
    CHECK(m.precision == 1.0);
    CHECK(m.recall == doctest::Approx(0.951));
    CHECK(m.n_predictions == 951);
  }
  SUBCASE("abstaining model") {
    const auto m = metrics_from_records(std::vector<PredictionRecord>(10), {"NOOP"});
    CHECK(m.pred_rate == 0.0);
    CHECK(m.precision == 1.0);
    CHECK(m.precision_undefined);
  }
  SUBCASE("recomputation from the log") {
    std::vector<PredictionRecord> records;
    std::size_t predicted = 0;
    std::size_t correct = 0;
    for (std::uint32_t i = 0; i < 300; ++i) {
      PredictionRecord r;
      r.y = i % 3;
      r.y_hat = i % 5 == 0 ? -1 : static_cast<std::int32_t>((i * 7) % 3);
      predicted += r.y_hat >= 0;
      correct += r.y_hat == static_cast<std::int32_t>(r.y);
      records.push_back(r);
    }
    const auto m = metrics_from_records(records, {"A", "B", "C"});
    CHECK(m.n_predictions == predicted);
    CHECK(m.n_correct == correct);
    CHECK(m.precision == doctest::Approx(double(correct) / predicted));
    CHECK(m.recall == doctest::Approx(double(correct) / 300));
    CHECK(m.f1 == doctest::Approx(2 * m.precision * m.recall / (m.precision + m.recall)));
    REQUIRE(m.per_label.size() == 3);
    std::size_t support = 0;
    for (const auto& l : m.per_label) support += l.support;
    CHECK(support == 300);
  }
  SUBCASE("replaying observed labels") {
    const auto& model = testing::synthetic_model().model;
    std::vector<PredictionRecord> log;
    style_modeling_eval(model, generate_corpus(3, 55), {}, &log);
    for (auto& r : log) r.y_hat = static_cast<std::int32_t>(r.y);
    std::vector<std::string> names;
    for (const auto& l : model.vocabulary.labels()) names.push_back(l.to_string());
    const auto m = metrics_from_records(log, names);
    CHECK(m.precision == 1.0);
    CHECK(m.recall == 1.0);
  }
}

TEST_CASE("style modeling on generated code") {
  const auto& model = testing::synthetic_model().model;
  std::vector<PredictionRecord> log;
  const auto m = style_modeling_eval(model, generate_corpus(10, 4242), {}, &log);
  CHECK(m.n_samples == log.size());
  CHECK(m.precision >= 0.97);
  CHECK(m.pred_rate >= 0.9);
  CHECK(m.pred_rate == doctest::Approx(double(m.n_predictions) / m.n_samples));
  CHECK(m.avg_rule_length > 0);
}

TEST_CASE("defect seeding") {
  const auto files = generate_corpus(12, 6);
  for (std::size_t k = 0; k < 4; ++k) {
    const auto kind = static_cast<DefectKind>(k);
    for (std::size_t i = 0; i < files.size(); ++i) {
      Defect d;
      try {
        d = seed_defect(files[i], kind, i);
      } catch (const NoEligibleSite&) {
        continue;
      }
      CHECK(d.mutated != d.original);
      CHECK(syntax::structurally_equal(syntax::parse_file(d.mutated), syntax::parse_file(d.original)));
      std::string restored = d.mutated;
      restored.replace(d.begin, d.end - d.begin, d.restore);
      CHECK(restored == d.original);
      CHECK_FALSE(d.changed_lines.empty());
    }
  }
  SUBCASE("quote swap") {
    const cli::SourceFile f{"q.js", "var s = \"string\";\n"};
    const auto d = seed_defect(f, DefectKind::Quote, 0);
    CHECK(d.mutated == "var s = 'string';\n");
  }
  SUBCASE("one-statement block collapses") {
    const cli::SourceFile f{"c.js", testing::kIsArraySnippetClean};
    bool collapsed = false;
    for (std::uint64_t seed = 0; seed < 40 && !collapsed; ++seed) {
      const auto d = seed_defect(f, DefectKind::Newline, seed);
      collapsed = d.mutated.find("{return value;") != std::string::npos;
    }
    CHECK(collapsed);
  }
  SUBCASE("no site") {
    CHECK_THROWS_AS(seed_defect({"e.js", "x;\n"}, DefectKind::Quote, 0), NoEligibleSite);
  }
  SUBCASE("batches") {
    DefectSpec spec;
    spec.counts = {{DefectKind::Whitespace, 4}, {DefectKind::Quote, 3}};
    spec.seed = 5;
    const auto set = seed_defects(files, spec);
    CHECK(set.defects.size() == 7);
    std::set<std::string> paths;
    for (const auto& d : set.defects) paths.insert(d.path);
    CHECK(paths.size() == 7);
    const auto again = seed_defects(files, spec);
    for (std::size_t i = 0; i < set.defects.size(); ++i) CHECK(again.defects[i].mutated == set.defects[i].mutated);
  }
}

TEST_CASE("defect fixing curve") {
  const auto& model = testing::synthetic_model().model;
  DefectSpec spec;
  spec.counts = {{DefectKind::Whitespace, 8}, {DefectKind::Newline, 6}, {DefectKind::Indentation, 2},
                 {DefectKind::Quote, 4}};
  spec.seed = 1;
  const auto defects = seed_defects(generate_corpus(30, 808), spec).defects;
  REQUIRE(defects.size() == 20);
  const auto curve = defect_fixing_curve(model, defects);
  REQUIRE(curve.size() >= 2);
  CHECK(curve.front().n_rules == 0);
  CHECK(curve.front().proposed == 0);
  CHECK(curve.front().pred_rate == 0.0);
  for (std::size_t i = 1; i < curve.size(); ++i) {
    CHECK(curve[i].n_rules >= curve[i - 1].n_rules);
    CHECK(curve[i].min_confidence <= curve[i - 1].min_confidence);
    CHECK(curve[i].pred_rate <= curve.back().pred_rate);
    CHECK(curve[i].correct <= curve[i].proposed);
  }
  CHECK(curve.back().precision >= 0.75);
  CHECK(curve.back().pred_rate >= 0.5);
  const auto csv = curve_csv(curve);
  CHECK(csv.rfind("rules,min_confidence,proposed,correct,precision,pred_rate\n", 0) == 0);
}

TEST_CASE("generator") {
  const auto a = generate_corpus(5, 9);
  const auto b = generate_corpus(5, 9);
  const auto c = generate_corpus(5, 10);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].content == b[i].content);
    CHECK(syntax::parses(a[i].content));
  }
  CHECK(a[0].content != c[0].content);
  GeneratorStyle spaces;
  spaces.tabs = false;
  spaces.indent_width = 2;
  spaces.quote = '\'';
  for (const auto& f : generate_corpus(5, 9, spaces)) {
    CHECK(f.content.find('\t') == std::string::npos);
    CHECK(syntax::parses(f.content));
  }
}

TEST_CASE("leaf size sweep") {
  const auto [train, validation] = split_corpus(generate_corpus(40, 3), 0.8, 0);
  cli::RunConfig config;
  const auto rows = leaf_size_sweep(train, validation, {20, 80, 200, 500}, config);
  REQUIRE(rows.size() == 4);
  std::vector<double> counts;
  std::vector<double> lengths;
  for (const auto& r : rows) {
    counts.push_back(static_cast<double>(r.n_rules));
    lengths.push_back(r.avg_rule_length);
  }
  CHECK(non_increasing(counts));
  CHECK(non_increasing(lengths));
  CHECK(sweep_csv(rows).find("min_samples_leaf") != std::string::npos);

  CHECK(non_increasing({3, 3, 2, 1}));
  CHECK_FALSE(non_increasing({3, 4}));
  CHECK(non_increasing({}));
}
