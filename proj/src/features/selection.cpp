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


#include "stylemine/features/selection.hpp"

#include <numeric>

#include "stylemine/features/anova.hpp"

namespace stylemine::features {

Eigen::SparseMatrix<double> sample_matrix(const std::vector<Sample>& samples, std::size_t width) {
  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t r = 0; r < samples.size(); ++r) {
    for (SparseRow::InnerIterator it(samples[r].x); it; ++it) {
      triplets.emplace_back(static_cast<int>(r), static_cast<int>(it.index()), it.value());
    }
  }
  Eigen::SparseMatrix<double> m(static_cast<Eigen::Index>(samples.size()),
                                static_cast<Eigen::Index>(width));
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

Eigen::VectorXi sample_labels(const std::vector<Sample>& samples) {
  Eigen::VectorXi y(static_cast<Eigen::Index>(samples.size()));
  for (std::size_t i = 0; i < samples.size(); ++i) y[static_cast<Eigen::Index>(i)] = static_cast<int>(samples[i].y);
  return y;
}

FeatureScheme select_features(const std::vector<Sample>& samples, FeatureScheme scheme,
                              std::size_t k) {
  const std::size_t width = scheme.width();
  if (width <= k) {
    std::vector<std::uint32_t> all(width);
    std::iota(all.begin(), all.end(), 0u);
    scheme.set_selected(std::move(all));
    return scheme;
  }
  const auto x = sample_matrix(samples, width);
  const Eigen::VectorXd f = anova_f(x, sample_labels(samples));
  std::vector<bool> all_zero(width, true);
  for (Eigen::Index j = 0; j < x.outerSize(); ++j) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(x, j); it; ++it) {
      if (it.value() != 0.0) {
        all_zero[static_cast<std::size_t>(j)] = false;
        break;
      }
    }
  }
  scheme.set_selected(top_k(f, all_zero, k));
  return scheme;
}

}  // namespace stylemine::features
