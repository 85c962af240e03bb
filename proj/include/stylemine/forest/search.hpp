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


#ifndef STYLEMINE_FOREST_SEARCH_HPP
#define STYLEMINE_FOREST_SEARCH_HPP

#include <memory>
#include <vector>

#include "stylemine/forest/forest.hpp"
#include "stylemine/forest/random.hpp"

namespace stylemine::forest {

struct SearchSpace {
  std::vector<ModelKind> model_kinds{ModelKind::SingleTree, ModelKind::Forest};
  std::vector<std::uint32_t> max_depths;  // 0 means unlimited
  std::vector<MaxFeatures> max_features;
  std::vector<std::uint32_t> min_samples_split{2, 10, 50, 160};
  std::vector<std::uint32_t> min_samples_leaf{20, 80, 200};
  std::uint32_t n_trees = 10;

  /// Depth 5..25 or unlimited, sqrt/0.3/0.5/1.0 features, the split and
  /// leaf grids above.
  static SearchSpace standard();
  /// The standard space with min_samples_leaf fixed.
  static SearchSpace with_leaf(std::uint32_t min_samples_leaf);
};

struct Trial {
  HyperParams params;
  double score = 0.0;
};

class SearchStrategy {
 public:
  virtual ~SearchStrategy() = default;
  virtual HyperParams propose(Rng& rng, const std::vector<Trial>& history) = 0;
};

/// Uniform draws from each dimension of the space.
class RandomSearch final : public SearchStrategy {
 public:
  explicit RandomSearch(SearchSpace space) : space_(std::move(space)) {}
  HyperParams propose(Rng& rng, const std::vector<Trial>& history) override;

 private:
  SearchSpace space_;
};

struct SearchOptions {
  std::size_t budget = 100;
  std::size_t folds = 3;
  std::uint64_t seed = 0;
  /// Rows drawn for the search; 0 uses every row.
  std::size_t max_samples = 10000;
};

struct SearchResult {
  HyperParams best;
  double best_score = 0.0;
  std::vector<Trial> trials;
};

/// Row indices of each fold. Every class is shuffled and dealt round-robin,
/// so per-class fold sizes differ by at most one.
std::vector<std::vector<std::uint32_t>> stratified_folds(const std::vector<std::uint32_t>& y,
                                                         std::size_t folds, Rng& rng);

/// Mean held-out accuracy. Classes with fewer rows than folds are not scored.
double cross_val_accuracy(const Dataset& data, const HyperParams& params, std::size_t folds,
                          std::uint64_t seed);

/// Evaluates `budget` candidates; the first candidate with the best score wins.
SearchResult optimize_hyperparams(const Dataset& data, SearchStrategy& strategy,
                                  const SearchOptions& options = {});

}  // namespace stylemine::forest

#endif  // STYLEMINE_FOREST_SEARCH_HPP
