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


#ifndef STYLEMINE_FEATURES_SCHEME_HPP
#define STYLEMINE_FEATURES_SCHEME_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "stylemine/features/vocabulary.hpp"
#include "stylemine/syntax/roles.hpp"
#include "stylemine/syntax/token_stream.hpp"

namespace stylemine::features {

enum class SlotKind : std::uint8_t { Left, Right, Parent, Self };

struct Slot {
  SlotKind kind = SlotKind::Self;
  std::uint8_t index = 0;  // 1-based for Left/Right/Parent, 0 for Self

  /// "-1", "+2", "^1" or "0".
  std::string text() const;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

enum class Attribute : std::uint8_t {
  InternalType,
  Reserved,
  Length,
  Roles,
  Label,
  OffsetDiff,
  LineDiff,
  ColumnDiff,
  StartLine,
  StartColumn,
};
inline constexpr std::size_t kAttributeCount = 10;

enum class AttributeKind : std::uint8_t { OneHot, MultiHot, Numeric };

AttributeKind attribute_kind(Attribute attribute);
/// Name used in clause text: internal_type, value, length, roles, label, ...
std::string_view attribute_name(Attribute attribute);
bool is_label_attribute(Attribute attribute);
bool is_position_attribute(Attribute attribute);

struct FeatureKey {
  Slot slot;
  Attribute attribute = Attribute::Length;
  std::int32_t category = -1;  // -1 for numeric attributes

  friend auto operator<=>(const FeatureKey&, const FeatureKey&) = default;
};

struct Window {
  std::uint8_t left = 5;
  std::uint8_t right = 5;
  std::uint8_t parents = 2;
};

using SparseRow = Eigen::SparseVector<double>;

/// Ordered feature keys plus the category alphabets they refer to.
class FeatureScheme {
 public:
  FeatureScheme() = default;
  FeatureScheme(Window window, std::vector<std::string> types, std::vector<std::string> reserved,
                std::vector<std::string> roles, std::vector<std::string> labels);

  /// Collects lexicographic type and reserved-token alphabets from `streams`.
  static FeatureScheme build(const std::vector<syntax::TokenStream>& streams,
                             const LabelVocabulary& vocabulary,
                             const syntax::RoleTaxonomy& taxonomy, Window window = {});

  const Window& window() const { return window_; }
  std::size_t width() const { return keys_.size(); }
  const std::vector<FeatureKey>& keys() const { return keys_; }
  const FeatureKey& key(std::size_t index) const { return keys_[index]; }

  const std::vector<std::string>& types() const { return types_; }
  const std::vector<std::string>& reserved() const { return reserved_; }
  const std::vector<std::string>& roles() const { return roles_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Category names for a one-hot or multi-hot attribute.
  const std::vector<std::string>& alphabet(Attribute attribute) const;

  std::optional<std::int32_t> type_index(std::string_view type) const;
  std::optional<std::int32_t> reserved_index(std::string_view value) const;

  /// First key index of (slot, attribute), or -1 when the slot lacks it.
  std::int32_t base(const Slot& slot, Attribute attribute) const;
  std::size_t slot_count() const { return slots_.size(); }
  const std::vector<Slot>& slots() const { return slots_; }

  /// Indices kept by feature selection, ascending; empty means none ran.
  const std::vector<std::uint32_t>& selected() const { return selected_; }
  void set_selected(std::vector<std::uint32_t> selected) { selected_ = std::move(selected); }

  /// Human-readable key, e.g. "-1.internal_type=Identifier".
  std::string describe(std::size_t index) const;

 private:
  void layout();
  std::size_t slot_position(const Slot& slot) const;

  Window window_;
  std::vector<std::string> types_;
  std::vector<std::string> reserved_;
  std::vector<std::string> roles_;
  std::vector<std::string> labels_;
  std::vector<Slot> slots_;
  std::vector<std::array<std::int32_t, kAttributeCount>> bases_;
  std::vector<FeatureKey> keys_;
  std::vector<std::uint32_t> selected_;
};

struct Sample {
  SparseRow x;
  std::uint32_t y = 0;
  syntax::Position position;
  std::uint32_t file = 0;  // index into SampleSet::files
  std::uint32_t gap = 0;   // token index of the gap in its stream
};

struct SampleSet {
  std::vector<std::string> files;
  std::vector<Sample> samples;
};

/// Features of the format token at `gap` (labels of left format tokens are
/// looked up in `gap_labels`, indexed by token).
SparseRow gap_features(const syntax::TokenStream& stream, std::size_t gap,
                       const FeatureScheme& scheme,
                       const std::vector<std::int32_t>& token_labels);

/// Vocabulary index per token (-1 for semantic tokens and unlabelled gaps).
std::vector<std::int32_t> token_label_indices(const syntax::TokenStream& stream,
                                              const LabelVocabulary& vocabulary,
                                              const std::vector<GapLabel>& gaps);

/// One sample per gap whose label is in the vocabulary.
std::vector<Sample> extract_samples(const syntax::TokenStream& stream,
                                    const LabelVocabulary& vocabulary,
                                    const FeatureScheme& scheme, std::uint32_t file = 0);

}  // namespace stylemine::features

#endif  // STYLEMINE_FEATURES_SCHEME_HPP
