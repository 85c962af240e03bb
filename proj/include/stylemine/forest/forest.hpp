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


#ifndef STYLEMINE_FOREST_FOREST_HPP
#define STYLEMINE_FOREST_FOREST_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "stylemine/features/scheme.hpp"

namespace stylemine::forest {

/// Dense training matrix over the selected features. Rows are samples.
struct Dataset {
  Eigen::MatrixXf x;
  std::vector<std::uint32_t> y;
  std::size_t n_classes = 0;
  /// Scheme key index of every column.
  std::vector<std::uint32_t> keys;

  std::size_t rows() const { return y.size(); }
  std::size_t cols() const { return keys.size(); }
};

/// Gathers the selected columns of `samples` (all columns when `selected`
/// is empty).
Dataset make_dataset(const std::vector<features::Sample>& samples,
                     const std::vector<std::uint32_t>& selected, std::size_t width,
                     std::size_t n_classes);
Dataset subset(const Dataset& data, const std::vector<std::uint32_t>& rows);

enum class ModelKind : std::uint8_t { SingleTree, Forest };

struct MaxFeatures {
  enum class Kind : std::uint8_t { Sqrt, Fraction } kind = Kind::Sqrt;
  double fraction = 1.0;

  std::size_t resolve(std::size_t n_features) const;
  std::string text() const;
  friend bool operator==(const MaxFeatures&, const MaxFeatures&) = default;
};

struct HyperParams {
  ModelKind model_kind = ModelKind::Forest;
  std::uint32_t max_depth = 0;  // 0 means unlimited
  MaxFeatures max_features{};
  std::uint32_t min_samples_split = 160;
  std::uint32_t min_samples_leaf = 80;
  std::uint32_t n_trees = 10;

  /// Raises min_samples_split to 2 * min_samples_leaf and fixes trees to 1
  /// for a single tree.
  HyperParams normalized() const;
  std::string text() const;
  friend bool operator==(const HyperParams&, const HyperParams&) = default;
};

struct TreeNode {
  static constexpr std::uint32_t kLeaf = 0xFFFFFFFFu;
  std::uint32_t column = kLeaf;  // dataset column, kLeaf for leaves
  std::uint32_t key = 0;         // scheme key of the column
  double threshold = 0.0;        // x <= threshold goes left
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  std::vector<std::uint32_t> counts;  // leaves only

  bool is_leaf() const { return column == kLeaf; }
};

struct Tree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  /// Bootstrap multiplicity per training row; empty when all rows were used once.
  std::vector<std::uint32_t> bootstrap;

  /// Leaf reached by a dataset row.
  std::uint32_t leaf_for_row(const Dataset& data, std::size_t row) const;
  /// Leaf reached by a full scheme-width vector.
  std::uint32_t leaf_for(const Eigen::VectorXd& x) const;
  std::size_t depth() const;
  std::size_t leaf_count() const;
};

struct Forest {
  std::vector<Tree> trees;
  HyperParams params;
  std::uint64_t seed = 0;
  std::size_t n_classes = 0;
};

Tree train_tree(const Dataset& data, const HyperParams& params, std::uint64_t seed);
/// Each tree sees a bootstrap resample drawn with seed + tree index. A single
/// tree model trains once on the full data.
Forest train_forest(const Dataset& data, const HyperParams& params, std::uint64_t seed);

/// Normalized sum of per-tree leaf distributions.
Eigen::VectorXd predict_proba(const Forest& forest, const Eigen::VectorXd& x);
Eigen::VectorXd predict_proba_row(const Forest& forest, const Dataset& data, std::size_t row);
/// Argmax with the lowest class index winning ties.
std::uint32_t argmax(const Eigen::VectorXd& distribution);
std::uint32_t predict(const Forest& forest, const Eigen::VectorXd& x);

/// Versioned little-endian binary form.
std::string serialize(const Forest& forest);
Forest deserialize(std::string_view bytes);

}  // namespace stylemine::forest

#endif  // STYLEMINE_FOREST_FOREST_HPP
