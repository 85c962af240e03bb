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


#ifndef STYLEMINE_FEATURES_ANOVA_HPP
#define STYLEMINE_FEATURES_ANOVA_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "stylemine/errors.hpp"

namespace stylemine::features {

namespace detail {

template <typename Scalar>
Scalar f_from_sums(Scalar ssb, Scalar ssw, Scalar scale, Eigen::Index n, Eigen::Index k) {
  const Scalar eps = std::numeric_limits<Scalar>::epsilon() * 64;
  if (ssb <= eps * std::max(scale, Scalar(1))) ssb = 0;
  if (ssw <= eps * std::max(scale, Scalar(1))) ssw = 0;
  if (ssw == 0) return ssb == 0 ? Scalar(0) : std::numeric_limits<Scalar>::infinity();
  if (n == k) return ssb == 0 ? Scalar(0) : std::numeric_limits<Scalar>::infinity();
  return (ssb / Scalar(k - 1)) / (ssw / Scalar(n - k));
}

template <typename Labels>
Eigen::Index class_count(const Labels& y) {
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < y.size(); ++i) k = std::max<Eigen::Index>(k, y[i] + 1);
  return k;
}

}  // namespace detail

/// One-way ANOVA F of a dense column against integer class labels. Returns 0
/// when neither between- nor within-class variation exists and +infinity
/// when only the between-class part is non-zero. Throws DegenerateInput
/// when fewer than two classes are present.
template <typename Derived, typename LabelDerived>
typename Derived::Scalar anova_f(const Eigen::MatrixBase<Derived>& column,
                                 const Eigen::MatrixBase<LabelDerived>& y) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = column.size();
  const Eigen::Index classes = detail::class_count(y);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> sums = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(classes);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> counts = sums;
  for (Eigen::Index i = 0; i < n; ++i) {
    sums[y[i]] += column[i];
    counts[y[i]] += 1;
  }
  const Eigen::Index present = (counts.array() > 0).count();
  if (present < 2) throw DegenerateInput("ANOVA needs at least two classes");
  const Scalar mean = column.sum() / Scalar(n);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> means =
      (counts.array() > 0).select(sums.array() / counts.array().max(Scalar(1)), Scalar(0));
  Scalar ssb = 0;
  Scalar ssw = 0;
  for (Eigen::Index c = 0; c < classes; ++c) {
    if (counts[c] > 0) ssb += counts[c] * (means[c] - mean) * (means[c] - mean);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const Scalar d = column[i] - means[y[i]];
    ssw += d * d;
  }
  const Scalar scale = (column.array() - mean).square().sum();
  return detail::f_from_sums(ssb, ssw, scale, n, present);
}

/// F statistic of every column of a sparse matrix (rows are samples), from
/// per-class sums so that only stored entries are visited.
template <typename Scalar, int Options, typename LabelDerived>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> anova_f(const Eigen::SparseMatrix<Scalar, Options>& x,
                                                 const Eigen::MatrixBase<LabelDerived>& y) {
  const Eigen::Index n = x.rows();
  const Eigen::Index classes = detail::class_count(y);
  Eigen::VectorXd counts = Eigen::VectorXd::Zero(classes);
  for (Eigen::Index i = 0; i < n; ++i) counts[y[i]] += 1;
  const Eigen::Index present = (counts.array() > 0).count();
  if (present < 2) throw DegenerateInput("ANOVA needs at least two classes");

  const Eigen::Index d = x.cols();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> class_sums =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(classes, d);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> squares = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(d);
  for (Eigen::Index outer = 0; outer < x.outerSize(); ++outer) {
    for (typename Eigen::SparseMatrix<Scalar, Options>::InnerIterator it(x, outer); it; ++it) {
      class_sums(y[it.row()], it.col()) += it.value();
      squares[it.col()] += it.value() * it.value();
    }
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> f(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const Scalar total = class_sums.col(j).sum();
    const Scalar grand = total * total / Scalar(n);
    Scalar between = 0;  // sum over classes of n_k * mean_k^2
    for (Eigen::Index c = 0; c < classes; ++c) {
      if (counts[c] > 0) between += class_sums(c, j) * class_sums(c, j) / Scalar(counts[c]);
    }
    const Scalar ssb = between - grand;
    const Scalar ssw = squares[j] - between;
    f[j] = detail::f_from_sums(ssb, ssw, squares[j] - grand, n, present);
  }
  return f;
}

/// Indices of the `k` highest scores, ascending. Ties go to the lower index;
/// columns flagged in `all_zero` rank after every other column.
template <typename Derived>
std::vector<std::uint32_t> top_k(const Eigen::MatrixBase<Derived>& scores,
                                 const std::vector<bool>& all_zero, std::size_t k) {
  std::vector<std::uint32_t> order(static_cast<std::size_t>(scores.size()));
  std::iota(order.begin(), order.end(), 0u);
  if (order.size() <= k) return order;
  auto better = [&](std::uint32_t a, std::uint32_t b) {
    if (all_zero[a] != all_zero[b]) return !all_zero[a];
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  };
  std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                   better);
  order.resize(k);
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace stylemine::features

#endif  // STYLEMINE_FEATURES_ANOVA_HPP
