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


#include "stylemine/forest/forest.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>

#include "stylemine/errors.hpp"
#include "stylemine/forest/random.hpp"

namespace stylemine::forest {
namespace {

// Per-column sorted unique values and the bin code of every cell.
struct Binned {
  std::vector<std::vector<float>> values;
  std::vector<std::uint32_t> codes;  // column-major, rows x cols
  std::size_t rows = 0;

  std::uint32_t code(std::size_t row, std::size_t col) const { return codes[col * rows + row]; }
};

Binned bin(const Dataset& data) {
  Binned b;
  b.rows = data.rows();
  b.values.resize(data.cols());
  b.codes.resize(data.rows() * data.cols());
  std::vector<float> scratch;
  for (std::size_t c = 0; c < data.cols(); ++c) {
    const auto col = data.x.col(static_cast<Eigen::Index>(c));
    scratch.assign(col.data(), col.data() + col.size());
    std::sort(scratch.begin(), scratch.end());
    scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
    b.values[c] = scratch;
    for (std::size_t r = 0; r < data.rows(); ++r) {
      const float v = col[static_cast<Eigen::Index>(r)];
      b.codes[c * b.rows + r] = static_cast<std::uint32_t>(
          std::lower_bound(b.values[c].begin(), b.values[c].end(), v) - b.values[c].begin());
    }
  }
  return b;
}

struct Split {
  bool found = false;
  double score = 0.0;
  std::uint32_t column = 0;
  std::uint32_t bin = 0;  // codes <= bin go left
  double threshold = 0.0;
};

class TreeBuilder {
 public:
  TreeBuilder(const Dataset& data, const Binned& binned, const HyperParams& params, Rng& rng)
      : data_(data), binned_(binned), params_(params), rng_(rng), nc_(data.n_classes) {
    features_.resize(data.cols());
    std::iota(features_.begin(), features_.end(), 0u);
    max_features_ = std::max<std::size_t>(1, params.max_features.resolve(data.cols()));
  }

  Tree build(std::vector<std::uint32_t> rows) {
    Tree tree;
    rows_ = std::move(rows);
    struct Work {
      std::uint32_t node;
      std::size_t begin;
      std::size_t end;
      std::uint32_t depth;
    };
    tree.nodes.emplace_back();
    std::vector<Work> stack{{0, 0, rows_.size(), 0}};
    while (!stack.empty()) {
      const Work w = stack.back();
      stack.pop_back();
      std::vector<std::uint32_t> counts(nc_, 0);
      for (std::size_t i = w.begin; i < w.end; ++i) ++counts[data_.y[rows_[i]]];
      const std::size_t n = w.end - w.begin;
      const bool pure = std::count_if(counts.begin(), counts.end(),
                                      [](std::uint32_t c) { return c > 0; }) <= 1;
      const bool depth_ok = params_.max_depth == 0 || w.depth < params_.max_depth;
      Split split;
      if (!pure && depth_ok && n >= params_.min_samples_split &&
          n >= 2 * static_cast<std::size_t>(params_.min_samples_leaf)) {
        split = best_split(w.begin, w.end, counts);
      }
      if (!split.found) {
        tree.nodes[w.node].counts = std::move(counts);
        continue;
      }
      const auto mid = std::partition(
          rows_.begin() + static_cast<std::ptrdiff_t>(w.begin),
          rows_.begin() + static_cast<std::ptrdiff_t>(w.end),
          [&](std::uint32_t r) { return binned_.code(r, split.column) <= split.bin; });
      const auto m = static_cast<std::size_t>(mid - rows_.begin());
      const auto left = static_cast<std::uint32_t>(tree.nodes.size());
      tree.nodes.emplace_back();
      const auto right = static_cast<std::uint32_t>(tree.nodes.size());
      tree.nodes.emplace_back();
      TreeNode& node = tree.nodes[w.node];
      node.column = split.column;
      node.key = data_.keys[split.column];
      node.threshold = split.threshold;
      node.left = left;
      node.right = right;
      // Right first so the left subtree is expanded first.
      stack.push_back({right, m, w.end, w.depth + 1});
      stack.push_back({left, w.begin, m, w.depth + 1});
    }
    return tree;
  }

 private:
  Split best_split(std::size_t begin, std::size_t end, const std::vector<std::uint32_t>& counts) {
    const double n = static_cast<double>(end - begin);
    double parent = 0.0;
    for (const auto c : counts) parent += static_cast<double>(c) * c;
    parent /= n;
    Split best;
    best.score = parent + 1e-9 * n;
    rng_.shuffle(features_);
    std::size_t evaluated = 0;
    for (std::size_t i = 0; i < features_.size() && evaluated < max_features_; ++i) {
      const std::uint32_t f = features_[i];
      if (binned_.values[f].size() < 2) continue;
      if (evaluate(f, begin, end, counts, best)) ++evaluated;
    }
    return best;
  }

  // Returns false when the column is constant on the node.
  bool evaluate(std::uint32_t f, std::size_t begin, std::size_t end,
                const std::vector<std::uint32_t>& counts, Split& best) {
    const std::size_t n = end - begin;
    const std::size_t nb = binned_.values[f].size();
    bins_.clear();
    bin_ids_.clear();
    const bool compact = nb > std::max<std::size_t>(64, n);
    if (!compact) {
      hist_.assign(nb * nc_, 0);
      touched_.assign(nb, 0);
      for (std::size_t i = begin; i < end; ++i) {
        const auto r = rows_[i];
        const auto b = binned_.code(r, f);
        ++hist_[b * nc_ + data_.y[r]];
        touched_[b] = 1;
      }
      for (std::uint32_t b = 0; b < nb; ++b) {
        if (touched_[b]) bins_.push_back(b);
      }
    } else {
      pairs_.clear();
      for (std::size_t i = begin; i < end; ++i) {
        const auto r = rows_[i];
        pairs_.emplace_back(binned_.code(r, f), data_.y[r]);
      }
      std::sort(pairs_.begin(), pairs_.end());
      hist_.assign(n * nc_, 0);
      for (const auto& [b, y] : pairs_) {
        if (bin_ids_.empty() || bin_ids_.back() != b) {
          bins_.push_back(static_cast<std::uint32_t>(bins_.size()));
          bin_ids_.push_back(b);
        }
        ++hist_[bins_.back() * nc_ + y];
      }
    }
    if (bins_.size() < 2) return false;

    std::vector<double> left(nc_, 0.0);
    double left_n = 0.0;
    double left_sq = 0.0;
    double right_sq = 0.0;
    for (const auto c : counts) right_sq += static_cast<double>(c) * c;
    std::vector<double> right(counts.begin(), counts.end());
    double right_n = static_cast<double>(n);
    const double min_leaf = params_.min_samples_leaf;
    for (std::size_t k = 0; k + 1 < bins_.size(); ++k) {
      const std::uint32_t slot = bins_[k];
      for (std::size_t c = 0; c < nc_; ++c) {
        const double h = hist_[slot * nc_ + c];
        if (h == 0) continue;
        left_sq += 2 * left[c] * h + h * h;
        right_sq += -2 * right[c] * h + h * h;
        left[c] += h;
        right[c] -= h;
        left_n += h;
        right_n -= h;
      }
      if (left_n < min_leaf) continue;
      if (right_n < min_leaf) break;
      const double score = left_sq / left_n + right_sq / right_n;
      if (score > best.score) {
        const std::uint32_t lo = compact ? bin_ids_[k] : slot;
        const std::uint32_t hi = compact ? bin_ids_[k + 1] : bins_[k + 1];
        best.found = true;
        best.score = score;
        best.column = f;
        best.bin = lo;
        best.threshold = (static_cast<double>(binned_.values[f][lo]) +
                          static_cast<double>(binned_.values[f][hi])) / 2.0;
      }
    }
    return true;
  }

  const Dataset& data_;
  const Binned& binned_;
  const HyperParams& params_;
  Rng& rng_;
  std::size_t nc_;
  std::size_t max_features_ = 1;
  std::vector<std::uint32_t> features_;
  std::vector<std::uint32_t> rows_;
  std::vector<std::uint32_t> hist_;
  std::vector<std::uint8_t> touched_;
  std::vector<std::uint32_t> bins_;
  std::vector<std::uint32_t> bin_ids_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;
};

Tree train_binned(const Dataset& data, const Binned& binned, const HyperParams& params,
                  std::uint64_t seed, bool bootstrap) {
  Rng rng(seed);
  std::vector<std::uint32_t> rows;
  std::vector<std::uint32_t> multiplicity;
  const auto n = data.rows();
  if (bootstrap) {
    multiplicity.assign(n, 0);
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ++multiplicity[rng.below(n)];
    for (std::uint32_t r = 0; r < n; ++r) rows.insert(rows.end(), multiplicity[r], r);
  } else {
    rows.resize(n);
    std::iota(rows.begin(), rows.end(), 0u);
  }
  TreeBuilder builder(data, binned, params, rng);
  Tree tree = builder.build(std::move(rows));
  tree.bootstrap = std::move(multiplicity);
  return tree;
}

template <typename Value>
std::uint32_t descend(const Tree& tree, Value&& value) {
  std::uint32_t id = 0;
  while (!tree.nodes[id].is_leaf()) {
    const auto& node = tree.nodes[id];
    id = value(node) <= node.threshold ? node.left : node.right;
  }
  return id;
}

void add_distribution(const TreeNode& leaf, Eigen::VectorXd& acc) {
  double total = 0;
  for (const auto c : leaf.counts) total += c;
  if (total == 0) return;
  for (std::size_t k = 0; k < leaf.counts.size(); ++k) {
    acc[static_cast<Eigen::Index>(k)] += leaf.counts[k] / total;
  }
}

}  // namespace

Dataset make_dataset(const std::vector<features::Sample>& samples,
                     const std::vector<std::uint32_t>& selected, std::size_t width,
                     std::size_t n_classes) {
  Dataset d;
  d.n_classes = n_classes;
  if (selected.empty()) {
    d.keys.resize(width);
    std::iota(d.keys.begin(), d.keys.end(), 0u);
  } else {
    d.keys = selected;
  }
  std::vector<std::int32_t> column_of(width, -1);
  for (std::size_t c = 0; c < d.keys.size(); ++c) column_of[d.keys[c]] = static_cast<std::int32_t>(c);
  d.x = Eigen::MatrixXf::Zero(static_cast<Eigen::Index>(samples.size()),
                              static_cast<Eigen::Index>(d.keys.size()));
  d.y.resize(samples.size());
  for (std::size_t r = 0; r < samples.size(); ++r) {
    d.y[r] = samples[r].y;
    for (features::SparseRow::InnerIterator it(samples[r].x); it; ++it) {
      const auto c = column_of[static_cast<std::size_t>(it.index())];
      if (c >= 0) d.x(static_cast<Eigen::Index>(r), c) = static_cast<float>(it.value());
    }
  }
  return d;
}

Dataset subset(const Dataset& data, const std::vector<std::uint32_t>& rows) {
  Dataset d;
  d.n_classes = data.n_classes;
  d.keys = data.keys;
  d.x.resize(static_cast<Eigen::Index>(rows.size()), data.x.cols());
  d.y.resize(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    d.x.row(static_cast<Eigen::Index>(i)) = data.x.row(rows[i]);
    d.y[i] = data.y[rows[i]];
  }
  return d;
}

std::size_t MaxFeatures::resolve(std::size_t n_features) const {
  if (kind == Kind::Sqrt) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(n_features))));
  }
  return std::max<std::size_t>(1, static_cast<std::size_t>(fraction * static_cast<double>(n_features)));
}

std::string MaxFeatures::text() const {
  if (kind == Kind::Sqrt) return "sqrt";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", fraction);
  return buf;
}

HyperParams HyperParams::normalized() const {
  HyperParams p = *this;
  p.min_samples_leaf = std::max<std::uint32_t>(1, p.min_samples_leaf);
  p.min_samples_split = std::max<std::uint32_t>({2, p.min_samples_split, 2 * p.min_samples_leaf});
  if (p.model_kind == ModelKind::SingleTree) p.n_trees = 1;
  p.n_trees = std::max<std::uint32_t>(1, p.n_trees);
  return p;
}

std::string HyperParams::text() const {
  return std::string(model_kind == ModelKind::Forest ? "forest" : "tree") +
         " trees=" + std::to_string(n_trees) +
         " depth=" + (max_depth == 0 ? std::string("none") : std::to_string(max_depth)) +
         " max_features=" + max_features.text() +
         " min_split=" + std::to_string(min_samples_split) +
         " min_leaf=" + std::to_string(min_samples_leaf);
}

std::uint32_t Tree::leaf_for_row(const Dataset& data, std::size_t row) const {
  return descend(*this, [&](const TreeNode& n) {
    return static_cast<double>(data.x(static_cast<Eigen::Index>(row), n.column));
  });
}

std::uint32_t Tree::leaf_for(const Eigen::VectorXd& x) const {
  return descend(*this, [&](const TreeNode& n) { return x[n.key]; });
}

std::size_t Tree::depth() const {
  std::size_t best = 0;
  std::vector<std::pair<std::uint32_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    const auto [id, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    if (!nodes[id].is_leaf()) {
      stack.emplace_back(nodes[id].left, d + 1);
      stack.emplace_back(nodes[id].right, d + 1);
    }
  }
  return best;
}

std::size_t Tree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const TreeNode& n) { return n.is_leaf(); }));
}

Tree train_tree(const Dataset& data, const HyperParams& params, std::uint64_t seed) {
  const Binned binned = bin(data);
  return train_binned(data, binned, params.normalized(), seed, false);
}

Forest train_forest(const Dataset& data, const HyperParams& params, std::uint64_t seed) {
  Forest forest;
  forest.params = params.normalized();
  forest.seed = seed;
  forest.n_classes = data.n_classes;
  const Binned binned = bin(data);
  const bool bootstrap = forest.params.model_kind == ModelKind::Forest;
  for (std::uint32_t t = 0; t < forest.params.n_trees; ++t) {
    forest.trees.push_back(train_binned(data, binned, forest.params, seed + t, bootstrap));
  }
  return forest;
}

Eigen::VectorXd predict_proba(const Forest& forest, const Eigen::VectorXd& x) {
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(forest.n_classes));
  for (const auto& tree : forest.trees) add_distribution(tree.nodes[tree.leaf_for(x)], acc);
  if (!forest.trees.empty()) acc /= static_cast<double>(forest.trees.size());
  return acc;
}

Eigen::VectorXd predict_proba_row(const Forest& forest, const Dataset& data, std::size_t row) {
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(forest.n_classes));
  for (const auto& tree : forest.trees) {
    add_distribution(tree.nodes[tree.leaf_for_row(data, row)], acc);
  }
  if (!forest.trees.empty()) acc /= static_cast<double>(forest.trees.size());
  return acc;
}

std::uint32_t argmax(const Eigen::VectorXd& distribution) {
  std::uint32_t best = 0;
  for (Eigen::Index i = 1; i < distribution.size(); ++i) {
    if (distribution[i] > distribution[best]) best = static_cast<std::uint32_t>(i);
  }
  return best;
}

std::uint32_t predict(const Forest& forest, const Eigen::VectorXd& x) {
  return argmax(predict_proba(forest, x));
}

// ---- serialization ---------------------------------------------------------

namespace {

constexpr std::uint32_t kForestFormat = 1;

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void f64(double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    u64(bits);
  }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}
  std::uint8_t u8() {
    if (pos_ >= in_.size()) throw Error("truncated forest data");
    return static_cast<std::uint8_t>(in_[pos_++]);
  }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(u8()) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(u8()) << (8 * i);
    return v;
  }
  double f64() {
    const std::uint64_t bits = u64();
    double v;
    std::memcpy(&v, &bits, sizeof v);
    return v;
  }

 private:
  std::string_view in_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize(const Forest& forest) {
  Writer w;
  w.u32(kForestFormat);
  w.u64(forest.seed);
  w.u32(static_cast<std::uint32_t>(forest.n_classes));
  const HyperParams& p = forest.params;
  w.u8(static_cast<std::uint8_t>(p.model_kind));
  w.u32(p.max_depth);
  w.u8(static_cast<std::uint8_t>(p.max_features.kind));
  w.f64(p.max_features.fraction);
  w.u32(p.min_samples_split);
  w.u32(p.min_samples_leaf);
  w.u32(p.n_trees);
  w.u32(static_cast<std::uint32_t>(forest.trees.size()));
  for (const auto& tree : forest.trees) {
    w.u32(static_cast<std::uint32_t>(tree.nodes.size()));
    for (const auto& n : tree.nodes) {
      if (n.is_leaf()) {
        w.u8(1);
        w.u32(static_cast<std::uint32_t>(n.counts.size()));
        for (const auto c : n.counts) w.u32(c);
      } else {
        w.u8(0);
        w.u32(n.column);
        w.u32(n.key);
        w.f64(n.threshold);
        w.u32(n.left);
        w.u32(n.right);
      }
    }
  }
  return w.take();
}

Forest deserialize(std::string_view bytes) {
  Reader r(bytes);
  if (r.u32() != kForestFormat) throw IncompatibleModelVersion("unsupported forest format");
  Forest f;
  f.seed = r.u64();
  f.n_classes = r.u32();
  HyperParams& p = f.params;
  p.model_kind = static_cast<ModelKind>(r.u8());
  p.max_depth = r.u32();
  p.max_features.kind = static_cast<MaxFeatures::Kind>(r.u8());
  p.max_features.fraction = r.f64();
  p.min_samples_split = r.u32();
  p.min_samples_leaf = r.u32();
  p.n_trees = r.u32();
  const auto n_trees = r.u32();
  for (std::uint32_t t = 0; t < n_trees; ++t) {
    Tree tree;
    const auto n_nodes = r.u32();
    tree.nodes.resize(n_nodes);
    for (auto& n : tree.nodes) {
      if (r.u8() == 1) {
        n.counts.resize(r.u32());
        for (auto& c : n.counts) c = r.u32();
      } else {
        n.column = r.u32();
        n.key = r.u32();
        n.threshold = r.f64();
        n.left = r.u32();
        n.right = r.u32();
        if (n.left >= n_nodes || n.right >= n_nodes) throw Error("corrupt forest data");
      }
    }
    f.trees.push_back(std::move(tree));
  }
  return f;
}

}  // namespace stylemine::forest
