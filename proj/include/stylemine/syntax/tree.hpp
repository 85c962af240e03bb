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


#ifndef STYLEMINE_SYNTAX_TREE_HPP
#define STYLEMINE_SYNTAX_TREE_HPP

#include <bitset>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace stylemine::syntax {

/// 1-based line and byte column, 0-based byte offset.
struct Position {
  std::uint32_t line = 1;
  std::uint32_t column = 1;
  std::uint32_t offset = 0;

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position& a, const Position& b) {
    return a.offset <=> b.offset;
  }
};

/// Maps byte offsets to (line, column) for one buffer.
class LineIndex {
 public:
  LineIndex() = default;
  explicit LineIndex(std::string_view text);

  Position at(std::uint32_t offset) const;
  std::size_t line_count() const { return starts_.size(); }
  /// Byte offset of the first byte of a 1-based line.
  std::uint32_t line_start(std::uint32_t line) const;
  /// Byte offset one past the last byte of a line, excluding the newline.
  std::uint32_t line_end(std::uint32_t line) const;

 private:
  std::vector<std::uint32_t> starts_;
  std::uint32_t size_ = 0;
};

inline constexpr std::size_t kMaxRoles = 64;
using RoleSet = std::bitset<kMaxRoles>;

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct SyntaxNode {
  /// Parser-native kind. Empty for anonymous leaves (keywords, punctuation).
  std::string internal_type;
  RoleSet roles;
  /// Source text for leaves, empty for inner nodes.
  std::string value;
  Position start;
  Position end;
  bool leaf = false;
  NodeId parent = kNoNode;
  std::vector<NodeId> children;
};

/// Arena-allocated syntax tree. Node 0 is the root when the tree is not empty.
class SyntaxTree {
 public:
  NodeId add(SyntaxNode node);
  void append_child(NodeId parent, NodeId child);

  const SyntaxNode& node(NodeId id) const { return nodes_[id]; }
  SyntaxNode& node(NodeId id) { return nodes_[id]; }
  NodeId root() const { return nodes_.empty() ? kNoNode : root_; }
  void set_root(NodeId id) { root_ = id; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }

  /// Leaves in document order.
  std::vector<NodeId> leaves() const;
  /// Root first, `id` last.
  std::vector<NodeId> path_from_root(NodeId id) const;
  std::size_t depth(NodeId id) const;
  bool is_ancestor(NodeId ancestor, NodeId id) const;

 private:
  std::vector<SyntaxNode> nodes_;
  NodeId root_ = 0;
};

}  // namespace stylemine::syntax

#endif  // STYLEMINE_SYNTAX_TREE_HPP
