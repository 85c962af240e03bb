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


#include "stylemine/bench/report.hpp"

#include <fmt/format.h>

namespace stylemine::bench {
namespace {

/// Quotes a CSV field when it holds a separator, quote or newline.
std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

TableRow style_modeling_row(const std::string& repository, std::vector<cli::SourceFile> files,
                            const cli::RunConfig& config) {
  auto [train, validation] = split_corpus(std::move(files), 0.8, config.seed);
  const auto trained = cli::train_model(std::move(train), config);
  apply::AnalysisOptions options;
  options.min_confidence = config.confidence_threshold;
  options.min_support = config.min_support;
  options.blacklist = config.blacklist;
  TableRow row;
  row.repository = repository;
  row.metrics = style_modeling_eval(trained.model, validation, options);
  row.train_samples = trained.info.n_samples;
  row.unique_labels = trained.model.vocabulary.size();
  row.training_seconds = trained.seconds;
  return row;
}

std::vector<SweepRow> leaf_size_sweep(const std::vector<cli::SourceFile>& train,
                                      const std::vector<cli::SourceFile>& validation,
                                      const std::vector<std::uint32_t>& leaf_sizes,
                                      cli::RunConfig config) {
  config.search_budget = 0;
  apply::AnalysisOptions options;
  options.min_confidence = config.confidence_threshold;
  options.min_support = config.min_support;
  std::vector<SweepRow> rows;
  for (const auto leaf : leaf_sizes) {
    config.min_samples_leaf = leaf;
    const auto trained = cli::train_model(train, config);
    const auto m = style_modeling_eval(trained.model, validation, options);
    rows.push_back({leaf, m.precision, m.pred_rate, trained.model.rules.rules.size(),
                    trained.model.rules.average_length()});
  }
  return rows;
}

bool non_increasing(const std::vector<double>& values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[i - 1]) return false;
  }
  return true;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::string out =
      "repository,precision,pred_rate,recall,f1,train_samples,unique_labels,rules,"
      "avg_rule_length,training_seconds\n";
  for (const auto& r : rows) {
    const auto& m = r.metrics;
    out += fmt::format("{},{:.4f},{:.4f},{:.4f},{:.4f},{},{},{},{:.2f},{:.1f}\n",
                       csv_field(r.repository), m.precision, m.pred_rate, m.recall, m.f1,
                       r.train_samples, r.unique_labels, m.n_rules, m.avg_rule_length,
                       r.training_seconds);
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "min_samples_leaf,precision,pred_rate,rules,avg_rule_length\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{:.4f},{:.4f},{},{:.2f}\n", r.min_samples_leaf, r.precision,
                       r.pred_rate, r.n_rules, r.avg_rule_length);
  }
  return out;
}

std::string curve_csv(const std::vector<CurvePoint>& points) {
  std::string out = "rules,min_confidence,proposed,correct,precision,pred_rate\n";
  for (const auto& p : points) {
    out += fmt::format("{},{:.4f},{},{},{:.4f},{:.4f}\n", p.n_rules, p.min_confidence,
                       p.proposed, p.correct, p.precision, p.pred_rate);
  }
  return out;
}

}  // namespace stylemine::bench
