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


#include "stylemine/features/vocabulary.hpp"

#include <limits>

#include "stylemine/errors.hpp"

namespace stylemine::features {

LabelVocabulary::LabelVocabulary(const std::map<CompoundLabel, std::size_t>& counts,
                                 std::size_t min_occurrences, std::size_t compound_cap)
    : min_occurrences_(min_occurrences) {
  std::size_t total = 0;
  std::size_t kept = 0;
  for (const auto& [label, count] : counts) {
    total += count;
    if (count < min_occurrences || label.atoms.size() > compound_cap) continue;
    index_.emplace(label, labels_.size());
    labels_.push_back(label);
    frequencies_.push_back(count);
    kept += count;
  }
  retained_mass_ = total == 0 ? 0.0 : static_cast<double>(kept) / static_cast<double>(total);
}

LabelVocabulary LabelVocabulary::from_entries(std::vector<CompoundLabel> labels,
                                              std::vector<std::size_t> frequencies,
                                              std::size_t min_occurrences,
                                              double retained_mass) {
  LabelVocabulary v;
  v.labels_ = std::move(labels);
  v.frequencies_ = std::move(frequencies);
  v.min_occurrences_ = min_occurrences;
  v.retained_mass_ = retained_mass;
  for (std::size_t i = 0; i < v.labels_.size(); ++i) v.index_.emplace(v.labels_[i], i);
  return v;
}

std::optional<std::size_t> LabelVocabulary::index_of(const CompoundLabel& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::map<CompoundLabel, std::size_t> count_labels(const syntax::TokenStream& stream) {
  std::map<CompoundLabel, std::size_t> counts;
  for (const auto& g : label_gaps(stream, std::numeric_limits<std::size_t>::max())) {
    if (g.dropped != DropReason::None) continue;
    ++counts[g.label];
  }
  return counts;
}

LabelVocabulary build_label_vocabulary(const std::vector<syntax::TokenStream>& streams,
                                       std::size_t min_occurrences, std::size_t compound_cap) {
  std::map<CompoundLabel, std::size_t> counts;
  for (const auto& s : streams) {
    for (const auto& [label, n] : count_labels(s)) counts[label] += n;
  }
  LabelVocabulary vocab(counts, min_occurrences, compound_cap);
  if (vocab.empty()) {
    throw EmptyVocabulary("no formatting label occurs at least " +
                          std::to_string(min_occurrences) + " times");
  }
  return vocab;
}

}  // namespace stylemine::features
