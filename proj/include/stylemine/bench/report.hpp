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


#ifndef STYLEMINE_BENCH_REPORT_HPP
#define STYLEMINE_BENCH_REPORT_HPP

#include <string>
#include <vector>

#include "stylemine/bench/defects.hpp"
#include "stylemine/bench/eval.hpp"
#include "stylemine/cli/config.hpp"
#include "stylemine/cli/train.hpp"

namespace stylemine::bench {

/// One row of the style-modeling table.
struct TableRow {
  std::string repository;
  EvalMetrics metrics;
  std::size_t train_samples = 0;
  std::size_t unique_labels = 0;
  double training_seconds = 0.0;
};

/// Trains on an 80/20 byte split of `files` and scores the held-out part.
TableRow style_modeling_row(const std::string& repository, std::vector<cli::SourceFile> files,
                            const cli::RunConfig& config);

struct SweepRow {
  std::uint32_t min_samples_leaf = 0;
  double precision = 0.0;
  double pred_rate = 0.0;
  std::size_t n_rules = 0;
  double avg_rule_length = 0.0;
};

/// Trains one forest per leaf size with every other parameter fixed and no
/// search, and scores each on `validation`.
std::vector<SweepRow> leaf_size_sweep(const std::vector<cli::SourceFile>& train,
                                      const std::vector<cli::SourceFile>& validation,
                                      const std::vector<std::uint32_t>& leaf_sizes,
                                      cli::RunConfig config);

/// True when `values` never rise from one entry to the next.
bool non_increasing(const std::vector<double>& values);

std::string table_csv(const std::vector<TableRow>& rows);
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string curve_csv(const std::vector<CurvePoint>& points);

}  // namespace stylemine::bench

#endif  // STYLEMINE_BENCH_REPORT_HPP
