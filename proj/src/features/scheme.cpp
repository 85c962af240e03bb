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


#include "stylemine/features/scheme.hpp"

#include <algorithm>
#include <set>

#include "stylemine/syntax/tree_ops.hpp"

namespace stylemine::features {
namespace {

constexpr std::array<std::string_view, kAttributeCount> kAttributeNames = {
    "internal_type", "value",     "length",     "roles",      "label",
    "diff_offset",   "diff_line", "diff_col",   "start_line", "start_col"};

constexpr std::array<Attribute, 8> kLeftAttributes = {
    Attribute::InternalType, Attribute::Reserved,   Attribute::Length,
    Attribute::Roles,        Attribute::Label,      Attribute::OffsetDiff,
    Attribute::LineDiff,     Attribute::ColumnDiff};
constexpr std::array<Attribute, 4> kRightAttributes = {Attribute::InternalType, Attribute::Reserved,
                                                       Attribute::Length, Attribute::Roles};
constexpr std::array<Attribute, 2> kParentAttributes = {Attribute::InternalType, Attribute::Roles};
constexpr std::array<Attribute, 2> kSelfAttributes = {Attribute::StartLine,
                                                      Attribute::StartColumn};

std::optional<std::int32_t> find_sorted(const std::vector<std::string>& v, std::string_view s) {
  const auto it = std::lower_bound(v.begin(), v.end(), s);
  if (it == v.end() || *it != s) return std::nullopt;
  return static_cast<std::int32_t>(it - v.begin());
}

}  // namespace

std::string Slot::text() const {
  switch (kind) {
    case SlotKind::Left:
      return "-" + std::to_string(index);
    case SlotKind::Right:
      return "+" + std::to_string(index);
    case SlotKind::Parent:
      return "^" + std::to_string(index);
    case SlotKind::Self:
      return "0";
  }
  return "?";
}

AttributeKind attribute_kind(Attribute attribute) {
  switch (attribute) {
    case Attribute::InternalType:
    case Attribute::Reserved:
    case Attribute::Label:
      return AttributeKind::OneHot;
    case Attribute::Roles:
      return AttributeKind::MultiHot;
    default:
      return AttributeKind::Numeric;
  }
}

std::string_view attribute_name(Attribute attribute) {
  return kAttributeNames[static_cast<std::size_t>(attribute)];
}

bool is_label_attribute(Attribute attribute) { return attribute == Attribute::Label; }

bool is_position_attribute(Attribute attribute) {
  return attribute == Attribute::OffsetDiff || attribute == Attribute::LineDiff ||
         attribute == Attribute::ColumnDiff || attribute == Attribute::StartLine ||
         attribute == Attribute::StartColumn;
}

FeatureScheme::FeatureScheme(Window window, std::vector<std::string> types,
                             std::vector<std::string> reserved, std::vector<std::string> roles,
                             std::vector<std::string> labels)
    : window_(window), types_(std::move(types)), reserved_(std::move(reserved)),
      roles_(std::move(roles)), labels_(std::move(labels)) {
  std::sort(types_.begin(), types_.end());
  std::sort(reserved_.begin(), reserved_.end());
  layout();
}

FeatureScheme FeatureScheme::build(const std::vector<syntax::TokenStream>& streams,
                                   const LabelVocabulary& vocabulary,
                                   const syntax::RoleTaxonomy& taxonomy, Window window) {
  std::set<std::string, std::less<>> types;
  std::set<std::string, std::less<>> reserved;
  for (const auto& s : streams) {
    for (std::size_t i = 0; i < s.tree.size(); ++i) {
      const auto& n = s.tree.node(static_cast<syntax::NodeId>(i));
      if (!n.internal_type.empty()) {
        types.insert(n.internal_type);
      } else if (n.leaf) {
        reserved.insert(n.value);
      }
    }
  }
  std::vector<std::string> labels;
  for (const auto& l : vocabulary.labels()) labels.push_back(l.to_string());
  return FeatureScheme(window, {types.begin(), types.end()}, {reserved.begin(), reserved.end()},
                       taxonomy.roles(), std::move(labels));
}

void FeatureScheme::layout() {
  slots_.clear();
  for (std::uint8_t i = 1; i <= window_.left; ++i) slots_.push_back({SlotKind::Left, i});
  for (std::uint8_t i = 1; i <= window_.right; ++i) slots_.push_back({SlotKind::Right, i});
  for (std::uint8_t i = 1; i <= window_.parents; ++i) slots_.push_back({SlotKind::Parent, i});
  slots_.push_back({SlotKind::Self, 0});

  keys_.clear();
  bases_.assign(slots_.size(), {});
  for (auto& b : bases_) b.fill(-1);
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    const Slot slot = slots_[s];
    std::vector<Attribute> attrs;
    switch (slot.kind) {
      case SlotKind::Left:
        attrs.assign(kLeftAttributes.begin(), kLeftAttributes.end());
        break;
      case SlotKind::Right:
        attrs.assign(kRightAttributes.begin(), kRightAttributes.end());
        break;
      case SlotKind::Parent:
        attrs.assign(kParentAttributes.begin(), kParentAttributes.end());
        break;
      case SlotKind::Self:
        attrs.assign(kSelfAttributes.begin(), kSelfAttributes.end());
        break;
    }
    for (const Attribute a : attrs) {
      bases_[s][static_cast<std::size_t>(a)] = static_cast<std::int32_t>(keys_.size());
      if (attribute_kind(a) == AttributeKind::Numeric) {
        keys_.push_back({slot, a, -1});
        continue;
      }
      const auto n = static_cast<std::int32_t>(alphabet(a).size());
      for (std::int32_t c = 0; c < n; ++c) keys_.push_back({slot, a, c});
    }
  }
}

const std::vector<std::string>& FeatureScheme::alphabet(Attribute attribute) const {
  switch (attribute) {
    case Attribute::InternalType:
      return types_;
    case Attribute::Reserved:
      return reserved_;
    case Attribute::Roles:
      return roles_;
    case Attribute::Label:
      return labels_;
    default: {
      static const std::vector<std::string> kEmpty;
      return kEmpty;
    }
  }
}

std::optional<std::int32_t> FeatureScheme::type_index(std::string_view type) const {
  return find_sorted(types_, type);
}

std::optional<std::int32_t> FeatureScheme::reserved_index(std::string_view value) const {
  return find_sorted(reserved_, value);
}

std::size_t FeatureScheme::slot_position(const Slot& slot) const {
  switch (slot.kind) {
    case SlotKind::Left:
      return slot.index - 1u;
    case SlotKind::Right:
      return window_.left + slot.index - 1u;
    case SlotKind::Parent:
      return window_.left + window_.right + slot.index - 1u;
    case SlotKind::Self:
      return slots_.size() - 1;
  }
  return 0;
}

std::int32_t FeatureScheme::base(const Slot& slot, Attribute attribute) const {
  const auto pos = slot_position(slot);
  if (pos >= bases_.size() || !(slots_[pos] == slot)) return -1;
  return bases_[pos][static_cast<std::size_t>(attribute)];
}

std::string FeatureScheme::describe(std::size_t index) const {
  const FeatureKey& k = keys_[index];
  std::string out = k.slot.text() + "." + std::string(attribute_name(k.attribute));
  if (k.category >= 0) out += "=" + alphabet(k.attribute)[static_cast<std::size_t>(k.category)];
  return out;
}

std::vector<std::int32_t> token_label_indices(const syntax::TokenStream& stream,
                                              const LabelVocabulary& vocabulary,
                                              const std::vector<GapLabel>& gaps) {
  std::vector<std::int32_t> out(stream.tokens.size(), -1);
  for (const auto& g : gaps) {
    if (g.dropped != DropReason::None && g.dropped != DropReason::TooLong) continue;
    if (const auto idx = vocabulary.index_of(g.label)) {
      out[g.token] = static_cast<std::int32_t>(*idx);
    }
  }
  return out;
}

SparseRow gap_features(const syntax::TokenStream& stream, std::size_t gap,
                       const FeatureScheme& scheme,
                       const std::vector<std::int32_t>& token_labels) {
  std::vector<std::pair<std::int32_t, double>> entries;
  auto put = [&](const Slot& slot, Attribute a, std::int32_t category, double value) {
    const auto b = scheme.base(slot, a);
    if (b < 0 || value == 0.0) return;
    entries.emplace_back(b + std::max(category, 0), value);
  };
  const auto& tokens = stream.tokens;
  const auto& tree = stream.tree;

  auto node_features = [&](const Slot& slot, syntax::NodeId id) {
    const auto& n = tree.node(id);
    if (!n.internal_type.empty()) {
      if (const auto t = scheme.type_index(n.internal_type)) put(slot, Attribute::InternalType, *t, 1);
    } else if (n.leaf) {
      if (const auto r = scheme.reserved_index(n.value)) put(slot, Attribute::Reserved, *r, 1);
    }
    const auto& roles = scheme.roles();
    for (std::size_t r = 0; r < roles.size() && r < n.roles.size(); ++r) {
      if (n.roles.test(r)) put(slot, Attribute::Roles, static_cast<std::int32_t>(r), 1);
    }
  };

  auto token_features = [&](const Slot& slot, std::size_t ti) {
    const auto& t = tokens[ti];
    if (t.is_semantic()) {
      node_features(slot, t.node);
    } else if (token_labels[ti] >= 0) {
      put(slot, Attribute::Label, token_labels[ti], 1);
    }
    put(slot, Attribute::Length, -1, static_cast<double>(t.value.size()));
    if (slot.kind == SlotKind::Left && ti > 0) {
      const auto& p = tokens[ti - 1];
      put(slot, Attribute::OffsetDiff, -1,
          static_cast<double>(t.start.offset) - static_cast<double>(p.start.offset));
      put(slot, Attribute::LineDiff, -1,
          static_cast<double>(t.start.line) - static_cast<double>(p.start.line));
      put(slot, Attribute::ColumnDiff, -1,
          static_cast<double>(t.start.column) - static_cast<double>(p.start.column));
    }
  };

  const auto& w = scheme.window();
  for (std::uint8_t i = 1; i <= w.left && i <= gap; ++i) {
    token_features({SlotKind::Left, i}, gap - i);
  }
  for (std::uint8_t i = 1; i <= w.right && gap + i < tokens.size(); ++i) {
    token_features({SlotKind::Right, i}, gap + i);
  }

  // Keywords and punctuation are not nodes of their own; the parents hang
  // off the nearest named leaves on either side.
  auto named = [&](std::size_t ti) {
    const auto& t = tokens[ti];
    return t.is_semantic() && !tree.node(t.node).internal_type.empty();
  };
  syntax::NodeId left = syntax::kNoNode;
  syntax::NodeId right = syntax::kNoNode;
  for (std::size_t ti = gap; ti-- > 0;) {
    if (named(ti)) {
      left = tokens[ti].node;
      break;
    }
  }
  for (std::size_t ti = gap + 1; ti < tokens.size(); ++ti) {
    if (named(ti)) {
      right = tokens[ti].node;
      break;
    }
  }
  syntax::NodeId parent = tree.root();
  if (left != syntax::kNoNode && right != syntax::kNoNode) {
    parent = syntax::lowest_common_ancestor(tree, left, right);
  }
  for (std::uint8_t j = 1; j <= w.parents && parent != syntax::kNoNode; ++j) {
    node_features({SlotKind::Parent, j}, parent);
    parent = tree.node(parent).parent;
  }

  const Slot self{SlotKind::Self, 0};
  put(self, Attribute::StartLine, -1, tokens[gap].start.line);
  put(self, Attribute::StartColumn, -1, tokens[gap].start.column);

  std::sort(entries.begin(), entries.end());
  SparseRow x(static_cast<Eigen::Index>(scheme.width()));
  x.reserve(static_cast<Eigen::Index>(entries.size()));
  for (const auto& [i, v] : entries) x.insertBack(i) = v;
  return x;
}

std::vector<Sample> extract_samples(const syntax::TokenStream& stream,
                                    const LabelVocabulary& vocabulary,
                                    const FeatureScheme& scheme, std::uint32_t file) {
  const auto gaps = label_gaps(stream);
  const auto token_labels = token_label_indices(stream, vocabulary, gaps);
  std::vector<Sample> out;
  for (const auto& g : gaps) {
    if (g.dropped != DropReason::None) continue;
    const auto idx = vocabulary.index_of(g.label);
    if (!idx) continue;
    Sample s;
    s.x = gap_features(stream, g.token, scheme, token_labels);
    s.y = static_cast<std::uint32_t>(*idx);
    s.position = stream.tokens[g.token].start;
    s.file = file;
    s.gap = static_cast<std::uint32_t>(g.token);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace stylemine::features
