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


#include "stylemine/forest/search.hpp"

#include <algorithm>
#include <numeric>

namespace stylemine::forest {

SearchSpace SearchSpace::standard() {
  SearchSpace s;
  for (std::uint32_t d = 5; d <= 25; ++d) s.max_depths.push_back(d);
  s.max_depths.push_back(0);
  s.max_features = {MaxFeatures{MaxFeatures::Kind::Sqrt, 1.0},
                    MaxFeatures{MaxFeatures::Kind::Fraction, 0.3},
                    MaxFeatures{MaxFeatures::Kind::Fraction, 0.5},
                    MaxFeatures{MaxFeatures::Kind::Fraction, 1.0}};
  return s;
}

SearchSpace SearchSpace::with_leaf(std::uint32_t min_samples_leaf) {
  SearchSpace s = standard();
  s.min_samples_leaf = {min_samples_leaf};
  return s;
}

HyperParams RandomSearch::propose(Rng& rng, const std::vector<Trial>&) {
  HyperParams p;
  p.model_kind = rng.pick(space_.model_kinds);
  p.max_depth = rng.pick(space_.max_depths);
  p.max_features = rng.pick(space_.max_features);
  p.min_samples_split = rng.pick(space_.min_samples_split);
  p.min_samples_leaf = rng.pick(space_.min_samples_leaf);
  p.n_trees = space_.n_trees;
  return p.normalized();
}

std::vector<std::vector<std::uint32_t>> stratified_folds(const std::vector<std::uint32_t>& y,
                                                         std::size_t folds, Rng& rng) {
  std::vector<std::vector<std::uint32_t>> out(folds);
  const std::uint32_t classes = y.empty() ? 0 : *std::max_element(y.begin(), y.end()) + 1;
  std::vector<std::vector<std::uint32_t>> by_class(classes);
  for (std::uint32_t i = 0; i < y.size(); ++i) by_class[y[i]].push_back(i);
  std::size_t next = 0;
  for (auto& rows : by_class) {
    rng.shuffle(rows);
    for (const auto r : rows) {
      out[next].push_back(r);
      next = (next + 1) % folds;
    }
  }
  for (auto& f : out) std::sort(f.begin(), f.end());
  return out;
}

double cross_val_accuracy(const Dataset& data, const HyperParams& params, std::size_t folds,
                          std::uint64_t seed) {
  Rng rng(seed);
  const auto parts = stratified_folds(data.y, folds, rng);
  std::vector<std::size_t> class_rows(data.n_classes, 0);
  for (const auto y : data.y) ++class_rows[y];
  double total = 0.0;
  std::size_t scored_folds = 0;
  for (std::size_t k = 0; k < folds; ++k) {
    std::vector<std::uint32_t> train;
    for (std::size_t j = 0; j < folds; ++j) {
      if (j != k) train.insert(train.end(), parts[j].begin(), parts[j].end());
    }
    std::sort(train.begin(), train.end());
    if (train.empty() || parts[k].empty()) continue;
    const Dataset fit = subset(data, train);
    const Forest model = train_forest(fit, params, seed + 1000 * (k + 1));
    std::size_t correct = 0;
    std::size_t scored = 0;
    for (const auto r : parts[k]) {
      if (class_rows[data.y[r]] < folds) continue;
      ++scored;
      if (argmax(predict_proba_row(model, data, r)) == data.y[r]) ++correct;
    }
    if (scored == 0) continue;
    total += static_cast<double>(correct) / static_cast<double>(scored);
    ++scored_folds;
  }
  return scored_folds == 0 ? 0.0 : total / static_cast<double>(scored_folds);
}

SearchResult optimize_hyperparams(const Dataset& data, SearchStrategy& strategy,
                                  const SearchOptions& options) {
  Rng rng(options.seed);
  const Dataset* used = &data;
  Dataset sampled;
  if (options.max_samples > 0 && data.rows() > options.max_samples) {
    std::vector<std::uint32_t> rows(data.rows());
    std::iota(rows.begin(), rows.end(), 0u);
    rng.shuffle(rows);
    rows.resize(options.max_samples);
    std::sort(rows.begin(), rows.end());
    sampled = subset(data, rows);
    used = &sampled;
  }
  SearchResult result;
  for (std::size_t i = 0; i < options.budget; ++i) {
    const HyperParams p = strategy.propose(rng, result.trials);
    const double score = cross_val_accuracy(*used, p, options.folds, options.seed + i);
    result.trials.push_back({p, score});
    if (i == 0 || score > result.best_score) {
      result.best = p;
      result.best_score = score;
    }
  }
  return result;
}

}  // namespace stylemine::forest
