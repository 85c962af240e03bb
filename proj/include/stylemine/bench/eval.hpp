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


#ifndef STYLEMINE_BENCH_EVAL_HPP
#define STYLEMINE_BENCH_EVAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stylemine/apply/model.hpp"
#include "stylemine/cli/train.hpp"

namespace stylemine::bench {

/// Shuffles by seed and assigns files to the training side until it holds at
/// least `train_fraction` of all bytes. Throws TooFewFiles for fewer than two
/// files. Both sides are non-empty.
std::pair<std::vector<cli::SourceFile>, std::vector<cli::SourceFile>> split_corpus(
    std::vector<cli::SourceFile> files, double train_fraction = 0.8, std::uint64_t seed = 0);

struct LabelMetrics {
  std::string label;
  std::size_t support = 0;  // samples carrying the label
  std::size_t predicted = 0;
  std::size_t correct = 0;
  double precision = 1.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct EvalMetrics {
  double precision = 1.0;
  double recall = 0.0;
  double f1 = 0.0;
  double pred_rate = 0.0;
  std::size_t n_samples = 0;
  std::size_t n_predictions = 0;
  std::size_t n_correct = 0;
  std::size_t n_rules = 0;
  double avg_rule_length = 0.0;
  /// No predictions were made; precision is 1 by convention.
  bool precision_undefined = false;
  std::vector<LabelMetrics> per_label;
  /// Support-weighted means of the per-label values.
  double weighted_precision = 0.0;
  double weighted_recall = 0.0;
  double weighted_f1 = 0.0;
};

/// One entry per evaluated sample.
struct PredictionRecord {
  std::uint32_t file = 0;
  std::uint32_t gap = 0;
  std::uint32_t y = 0;
  std::int32_t y_hat = -1;  // -1 when no rule fired
};

/// precision = correct / predictions, recall = correct / samples,
/// PredR = predictions / samples.
EvalMetrics metrics_from_records(const std::vector<PredictionRecord>& records,
                                 const std::vector<std::string>& label_names);

/// Scores the model on every in-vocabulary gap of `files`. Files that fail
/// to parse are skipped. `records` receives the raw prediction log.
EvalMetrics style_modeling_eval(const apply::Model& model, const std::vector<cli::SourceFile>& files,
                                const apply::AnalysisOptions& options = {},
                                std::vector<PredictionRecord>* records = nullptr);

}  // namespace stylemine::bench

#endif  // STYLEMINE_BENCH_EVAL_HPP
