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

#include <set>

#include "stylemine/forest/forest.hpp"
#include "stylemine/forest/random.hpp"
#include "stylemine/forest/search.hpp"

using namespace stylemine;
using namespace stylemine::forest;

namespace {

Dataset make_data(const std::vector<std::vector<float>>& rows, std::vector<std::uint32_t> y,
                  std::size_t n_classes) {
  Dataset d;
  d.x.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      d.x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  d.y = std::move(y);
  d.n_classes = n_classes;
  for (std::size_t j = 0; j < rows.front().size(); ++j) d.keys.push_back(static_cast<std::uint32_t>(j));
  return d;
}

/// Three noisy classes over four features, values on a small integer grid.
Dataset three_class_data(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<float>> rows;
  std::vector<std::uint32_t> y;
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = static_cast<std::uint32_t>(rng.below(3));
    std::vector<float> r(4);
    r[0] = static_cast<float>(c * 3 + rng.below(5));
    r[1] = static_cast<float>(rng.below(10));
    r[2] = static_cast<float>((c == 2 ? 5 : 0) + rng.below(6));
    r[3] = static_cast<float>(rng.below(2));
    rows.push_back(r);
    y.push_back(c);
  }
  return make_data(rows, y, 3);
}

HyperParams exact_params() {
  HyperParams p;
  p.model_kind = ModelKind::SingleTree;
  p.max_features = {MaxFeatures::Kind::Fraction, 1.0};
  p.min_samples_split = 2;
  p.min_samples_leaf = 1;
  return p.normalized();
}

double accuracy_tree(const Tree& tree, const Dataset& d) {
  std::size_t ok = 0;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    const auto& leaf = tree.nodes[tree.leaf_for_row(d, i)];
    const auto best = std::max_element(leaf.counts.begin(), leaf.counts.end()) - leaf.counts.begin();
    if (static_cast<std::uint32_t>(best) == d.y[i]) ++ok;
  }
  return static_cast<double>(ok) / d.rows();
}

/// Majority-vote hits of rows with the given mask.
std::size_t best_hits(const Dataset& d, const std::vector<std::size_t>& rows) {
  std::vector<std::size_t> c(d.n_classes, 0);
  for (const auto r : rows) ++c[d.y[r]];
  return rows.empty() ? 0 : *std::max_element(c.begin(), c.end());
}

std::vector<float> midpoints(const Dataset& d, Eigen::Index col) {
  std::set<float> values;
  for (Eigen::Index i = 0; i < d.x.rows(); ++i) values.insert(d.x(i, col));
  std::vector<float> out;
  for (auto it = values.begin(); std::next(it) != values.end(); ++it) out.push_back((*it + *std::next(it)) / 2);
  return out;
}

/// Accuracy of the best tree of depth at most two, by exhaustive search.
double exhaustive_depth2(const Dataset& d) {
  std::vector<std::size_t> all(d.rows());
  std::iota(all.begin(), all.end(), 0);
  auto best_depth1 = [&](const std::vector<std::size_t>& rows) {
    std::size_t best = best_hits(d, rows);
    for (Eigen::Index c = 0; c < d.x.cols(); ++c) {
      for (const float t : midpoints(d, c)) {
        std::vector<std::size_t> l;
        std::vector<std::size_t> r;
        for (const auto i : rows) (d.x(static_cast<Eigen::Index>(i), c) <= t ? l : r).push_back(i);
        best = std::max(best, best_hits(d, l) + best_hits(d, r));
      }
    }
    return best;
  };
  std::size_t best = best_depth1(all);
  for (Eigen::Index c = 0; c < d.x.cols(); ++c) {
    for (const float t : midpoints(d, c)) {
      std::vector<std::size_t> l;
      std::vector<std::size_t> r;
      for (const auto i : all) (d.x(static_cast<Eigen::Index>(i), c) <= t ? l : r).push_back(i);
      best = std::max(best, best_depth1(l) + best_depth1(r));
    }
  }
  return static_cast<double>(best) / d.rows();
}

/// Follows thresholds from the root; independent of Tree::leaf_for.
std::uint32_t walk(const Tree& tree, const Eigen::VectorXd& x) {
  std::uint32_t id = 0;
  while (!tree.nodes[id].is_leaf()) {
    const auto& n = tree.nodes[id];
    id = x[n.key] <= n.threshold ? n.left : n.right;
  }
  return id;
}

}  // namespace

TEST_CASE("decision tree") {
  SUBCASE("one class gives a single leaf") {
    const auto d = make_data({{1}, {2}, {3}}, {1, 1, 1}, 2);
    const auto tree = train_tree(d, exact_params(), 0);
    REQUIRE(tree.nodes.size() == 1);
    CHECK(tree.nodes[0].is_leaf());
  }
  SUBCASE("separable data gives one split and two pure leaves") {
    const auto d = make_data({{0}, {1}, {2}, {7}, {8}, {9}}, {0, 0, 0, 1, 1, 1}, 2);
    const auto tree = train_tree(d, exact_params(), 0);
    REQUIRE(tree.nodes.size() == 3);
    const auto& root = tree.nodes[0];
    CHECK_FALSE(root.is_leaf());
    CHECK(root.threshold > 2.0);
    CHECK(root.threshold < 7.0);
    CHECK(tree.nodes[root.left].counts == std::vector<std::uint32_t>{3, 0});
    CHECK(tree.nodes[root.right].counts == std::vector<std::uint32_t>{0, 3});
  }
  SUBCASE("fits at least as well as the best depth-two tree") {
    const auto d = three_class_data(200, 3);
    const auto tree = train_tree(d, exact_params(), 0);
    CHECK(accuracy_tree(tree, d) >= exhaustive_depth2(d));
  }
  SUBCASE("leaves respect the minimum size") {
    auto p = exact_params();
    p.min_samples_leaf = 15;
    p = p.normalized();
    const auto d = three_class_data(300, 4);
    const auto tree = train_tree(d, p, 0);
    for (const auto& n : tree.nodes) {
      if (!n.is_leaf()) continue;
      std::uint32_t total = 0;
      for (const auto c : n.counts) total += c;
      CHECK(total >= 15);
    }
  }
  SUBCASE("depth limit") {
    auto p = exact_params();
    p.max_depth = 2;
    const auto tree = train_tree(three_class_data(200, 5), p, 0);
    CHECK(tree.depth() <= 2);
  }
}

TEST_CASE("random forest") {
  SUBCASE("one tree on constant data equals a single tree") {
    const auto d = make_data({{4, 4}, {4, 4}, {4, 4}, {4, 4}}, {1, 1, 1, 1}, 2);
    HyperParams p = exact_params();
    p.model_kind = ModelKind::Forest;
    p.n_trees = 1;
    const auto f = train_forest(d, p, 9);
    const auto t = train_tree(d, exact_params(), 9);
    REQUIRE(f.trees.size() == 1);
    REQUIRE(f.trees[0].nodes.size() == t.nodes.size());
    CHECK(f.trees[0].nodes[0].counts == t.nodes[0].counts);
  }
  SUBCASE("forest fits no worse than its average tree") {
    const auto d = three_class_data(300, 6);
    HyperParams p;
    p.min_samples_leaf = 5;
    p.min_samples_split = 10;
    p = p.normalized();
    const auto f = train_forest(d, p, 1);
    double mean = 0;
    for (const auto& t : f.trees) mean += accuracy_tree(t, d);
    mean /= static_cast<double>(f.trees.size());
    std::size_t ok = 0;
    for (std::size_t i = 0; i < d.rows(); ++i) {
      if (argmax(predict_proba_row(f, d, i)) == d.y[i]) ++ok;
    }
    CHECK(static_cast<double>(ok) / d.rows() >= mean);
  }
  SUBCASE("fixed seed is bit-identical") {
    const auto d = three_class_data(200, 7);
    HyperParams p;
    p.min_samples_leaf = 5;
    CHECK(serialize(train_forest(d, p, 3)) == serialize(train_forest(d, p, 3)));
    CHECK(serialize(train_forest(d, p, 3)) != serialize(train_forest(d, p, 4)));
  }
  SUBCASE("serialization round trip") {
    const auto f = train_forest(three_class_data(150, 8), HyperParams{}, 2);
    CHECK(serialize(deserialize(serialize(f))) == serialize(f));
  }
}

TEST_CASE("prediction") {
  SUBCASE("pure leaf") {
    Forest f;
    f.n_classes = 3;
    Tree t;
    TreeNode leaf;
    leaf.counts = {0, 5, 0};
    t.nodes.push_back(leaf);
    f.trees.push_back(t);
    const auto p = predict_proba(f, Eigen::VectorXd::Zero(1));
    CHECK(p[1] == 1.0);
    CHECK(predict(f, Eigen::VectorXd::Zero(1)) == 1);
  }
  SUBCASE("ties go to the lower class") {
    CHECK(argmax((Eigen::VectorXd(3) << 0.25, 0.5, 0.5).finished()) == 1);
    CHECK(argmax((Eigen::VectorXd(2) << 0.5, 0.5).finished()) == 0);
  }
  SUBCASE("matches naive traversal") {
    const auto d = three_class_data(300, 9);
    HyperParams p;
    p.min_samples_leaf = 5;
    const auto f = train_forest(d, p, 0);
    Rng rng(1);
    for (int q = 0; q < 100; ++q) {
      Eigen::VectorXd x(4);
      for (int j = 0; j < 4; ++j) x[j] = static_cast<double>(rng.below(12));
      Eigen::VectorXd expected = Eigen::VectorXd::Zero(3);
      for (const auto& t : f.trees) {
        const auto& leaf = t.nodes[walk(t, x)];
        double total = 0;
        for (const auto c : leaf.counts) total += c;
        for (int c = 0; c < 3; ++c) expected[c] += leaf.counts[c] / total;
      }
      expected /= static_cast<double>(f.trees.size());
      const auto got = predict_proba(f, x);
      for (int c = 0; c < 3; ++c) CHECK(got[c] == doctest::Approx(expected[c]));
    }
  }
}

TEST_CASE("hyper-parameter search") {
  SUBCASE("stratified folds") {
    Rng rng(3);
    std::vector<std::uint32_t> y;
    for (int i = 0; i < 101; ++i) y.push_back(static_cast<std::uint32_t>(rng.below(4)));
    const auto folds = stratified_folds(y, 3, rng);
    REQUIRE(folds.size() == 3);
    std::set<std::uint32_t> seen;
    for (const auto& f : folds) seen.insert(f.begin(), f.end());
    CHECK(seen.size() == y.size());
    for (std::uint32_t c = 0; c < 4; ++c) {
      std::vector<std::size_t> per;
      for (const auto& f : folds) {
        per.push_back(static_cast<std::size_t>(
            std::count_if(f.begin(), f.end(), [&](std::uint32_t r) { return y[r] == c; })));
      }
      CHECK(*std::max_element(per.begin(), per.end()) - *std::min_element(per.begin(), per.end()) <= 1);
    }
  }
  SUBCASE("budget one returns its only candidate") {
    RandomSearch strategy(SearchSpace::standard());
    const auto r = optimize_hyperparams(three_class_data(120, 1), strategy, {1, 3, 0, 0});
    REQUIRE(r.trials.size() == 1);
    CHECK(r.best == r.trials[0].params);
    CHECK(r.best_score == r.trials[0].score);
  }
  SUBCASE("a dominant configuration is selected") {
    // XOR of two features: no depth-one tree beats the majority class.
    Rng rng(2);
    std::vector<std::vector<float>> rows;
    std::vector<std::uint32_t> y;
    for (int i = 0; i < 240; ++i) {
      const auto a = rng.below(2);
      const auto b = rng.below(2);
      rows.push_back({static_cast<float>(a), static_cast<float>(b)});
      y.push_back(static_cast<std::uint32_t>(a ^ b));
    }
    const auto d = make_data(rows, y, 2);
    SearchSpace space;
    space.model_kinds = {ModelKind::SingleTree};
    space.max_depths = {1, 1, 1, 0};
    space.max_features = {{MaxFeatures::Kind::Fraction, 1.0}};
    space.min_samples_split = {2};
    space.min_samples_leaf = {1};
    RandomSearch strategy(space);
    const auto r = optimize_hyperparams(d, strategy, {20, 3, 0, 0});
    CHECK(r.best.max_depth == 0);
    CHECK(r.best_score == doctest::Approx(1.0));
  }
  SUBCASE("leaf-pinned space") {
    const auto space = SearchSpace::with_leaf(80);
    CHECK(space.min_samples_leaf == std::vector<std::uint32_t>{80});
  }
}
