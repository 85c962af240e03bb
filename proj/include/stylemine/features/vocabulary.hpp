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


#ifndef STYLEMINE_FEATURES_VOCABULARY_HPP
#define STYLEMINE_FEATURES_VOCABULARY_HPP

#include <map>
#include <optional>
#include <vector>

#include "stylemine/features/labels.hpp"

namespace stylemine::features {

inline constexpr std::size_t kDefaultMinOccurrences = 80;

class LabelVocabulary {
 public:
  LabelVocabulary() = default;
  /// Entries are ordered lexicographically by atom sequence.
  LabelVocabulary(const std::map<CompoundLabel, std::size_t>& counts,
                  std::size_t min_occurrences, std::size_t compound_cap = kDefaultCompoundCap);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const CompoundLabel& label(std::size_t index) const { return labels_[index]; }
  const std::vector<CompoundLabel>& labels() const { return labels_; }
  std::size_t frequency(std::size_t index) const { return frequencies_[index]; }
  std::optional<std::size_t> index_of(const CompoundLabel& label) const;
  std::size_t min_occurrences() const { return min_occurrences_; }
  /// Share of counted gaps whose label was retained.
  double retained_mass() const { return retained_mass_; }

  static LabelVocabulary from_entries(std::vector<CompoundLabel> labels,
                                      std::vector<std::size_t> frequencies,
                                      std::size_t min_occurrences, double retained_mass);

 private:
  std::vector<CompoundLabel> labels_;
  std::vector<std::size_t> frequencies_;
  std::map<CompoundLabel, std::size_t> index_;
  std::size_t min_occurrences_ = kDefaultMinOccurrences;
  double retained_mass_ = 0.0;
};

/// Counts gap labels that were not dropped for an unsupported character or a
/// multi-line neighbour.
std::map<CompoundLabel, std::size_t> count_labels(const syntax::TokenStream& stream);

/// Throws EmptyVocabulary when no label reaches `min_occurrences`.
LabelVocabulary build_label_vocabulary(const std::vector<syntax::TokenStream>& streams,
                                       std::size_t min_occurrences = kDefaultMinOccurrences,
                                       std::size_t compound_cap = kDefaultCompoundCap);

}  // namespace stylemine::features

#endif  // STYLEMINE_FEATURES_VOCABULARY_HPP
