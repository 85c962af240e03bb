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


#ifndef STYLEMINE_FEATURES_SELECTION_HPP
#define STYLEMINE_FEATURES_SELECTION_HPP

#include <Eigen/SparseCore>

#include "stylemine/features/scheme.hpp"

namespace stylemine::features {

inline constexpr std::size_t kDefaultTopK = 500;

/// Rows are samples, columns are scheme keys.
Eigen::SparseMatrix<double> sample_matrix(const std::vector<Sample>& samples, std::size_t width);
Eigen::VectorXi sample_labels(const std::vector<Sample>& samples);

/// Keeps the `k` columns with the highest ANOVA F. Returns the scheme with
/// `selected` populated; all columns are kept when the width is at most `k`.
FeatureScheme select_features(const std::vector<Sample>& samples, FeatureScheme scheme,
                              std::size_t k = kDefaultTopK);

}  // namespace stylemine::features

#endif  // STYLEMINE_FEATURES_SELECTION_HPP
