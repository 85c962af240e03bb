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


#include "stylemine/bench/eval.hpp"

#include <algorithm>

#include "stylemine/errors.hpp"
#include "stylemine/forest/random.hpp"

namespace stylemine::bench {
namespace {

double ratio(std::size_t a, std::size_t b, double if_zero) {
  return b == 0 ? if_zero : static_cast<double>(a) / static_cast<double>(b);
}

double harmonic(double p, double r) { return p + r == 0.0 ? 0.0 : 2 * p * r / (p + r); }

}  // namespace

std::pair<std::vector<cli::SourceFile>, std::vector<cli::SourceFile>> split_corpus(
    std::vector<cli::SourceFile> files, double train_fraction, std::uint64_t seed) {
  if (files.size() < 2) throw TooFewFiles("a split needs at least two files");
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.path < b.path; });
  forest::Rng rng(seed);
  rng.shuffle(files);
  double total = 0;
  for (const auto& f : files) total += static_cast<double>(f.content.size());
  std::vector<cli::SourceFile> train;
  std::vector<cli::SourceFile> test;
  double taken = 0;
  for (auto& f : files) {
    if (taken < train_fraction * total || train.empty()) {
      taken += static_cast<double>(f.content.size());
      train.push_back(std::move(f));
    } else {
      test.push_back(std::move(f));
    }
  }
  if (test.empty()) {
    test.push_back(std::move(train.back()));
    train.pop_back();
  }
  return {std::move(train), std::move(test)};
}

EvalMetrics metrics_from_records(const std::vector<PredictionRecord>& records,
                                 const std::vector<std::string>& label_names) {
  EvalMetrics m;
  m.n_samples = records.size();
  std::vector<LabelMetrics> per(label_names.size());
  for (std::size_t i = 0; i < per.size(); ++i) per[i].label = label_names[i];
  for (const auto& r : records) {
    ++per[r.y].support;
    if (r.y_hat < 0) continue;
    ++m.n_predictions;
    ++per[static_cast<std::size_t>(r.y_hat)].predicted;
    if (static_cast<std::uint32_t>(r.y_hat) == r.y) {
      ++m.n_correct;
      ++per[r.y].correct;
    }
  }
  m.precision_undefined = m.n_predictions == 0;
  m.precision = ratio(m.n_correct, m.n_predictions, 1.0);
  m.recall = ratio(m.n_correct, m.n_samples, 0.0);
  m.f1 = harmonic(m.precision, m.recall);
  m.pred_rate = ratio(m.n_predictions, m.n_samples, 0.0);
  for (auto& l : per) {
    l.precision = ratio(l.correct, l.predicted, 1.0);
    l.recall = ratio(l.correct, l.support, 0.0);
    l.f1 = harmonic(l.precision, l.recall);
    if (m.n_samples > 0) {
      const double w = static_cast<double>(l.support) / static_cast<double>(m.n_samples);
      m.weighted_precision += w * l.precision;
      m.weighted_recall += w * l.recall;
      m.weighted_f1 += w * l.f1;
    }
  }
  m.per_label = std::move(per);
  return m;
}

EvalMetrics style_modeling_eval(const apply::Model& model, const std::vector<cli::SourceFile>& files,
                                const apply::AnalysisOptions& options,
                                std::vector<PredictionRecord>* records) {
  rules::RuleSet active;
  const rules::Matcher gate(model.rules, model.scheme, options.min_confidence,
                            options.min_support, options.blacklist);
  for (const auto& r : model.rules.rules) {
    if (gate.enabled(r)) active.rules.push_back(r);
  }
  std::stable_sort(active.rules.begin(), active.rules.end(), rules::higher_priority);
  if (options.rule_limit && active.rules.size() > *options.rule_limit) {
    active.rules.resize(*options.rule_limit);
  }
  const rules::Matcher matcher(active, model.scheme);

  std::vector<PredictionRecord> log;
  for (std::uint32_t f = 0; f < files.size(); ++f) {
    syntax::TokenStream stream;
    try {
      stream = syntax::tokenize(files[f].content);
    } catch (const Error&) {
      continue;
    }
    for (const auto& s : features::extract_samples(stream, model.vocabulary, model.scheme, f)) {
      PredictionRecord r{f, s.gap, s.y, -1};
      if (const auto m = matcher.match(rules::dense(s.x, model.scheme.width()))) {
        r.y_hat = static_cast<std::int32_t>(m->label);
      }
      log.push_back(r);
    }
  }
  std::vector<std::string> names;
  for (const auto& l : model.vocabulary.labels()) names.push_back(l.to_string());
  auto m = metrics_from_records(log, names);
  m.n_rules = active.rules.size();
  m.avg_rule_length = active.average_length();
  if (records != nullptr) *records = std::move(log);
  return m;
}

}  // namespace stylemine::bench
