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


#include "stylemine/syntax/tree.hpp"

#include <algorithm>

namespace stylemine::syntax {

LineIndex::LineIndex(std::string_view text) : size_(static_cast<std::uint32_t>(text.size())) {
  starts_.push_back(0);
  for (std::uint32_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') starts_.push_back(i + 1);
  }
}

Position LineIndex::at(std::uint32_t offset) const {
  offset = std::min(offset, size_);
  const auto it = std::upper_bound(starts_.begin(), starts_.end(), offset);
  const auto line = static_cast<std::uint32_t>(it - starts_.begin());
  return Position{line, offset - starts_[line - 1] + 1, offset};
}

std::uint32_t LineIndex::line_start(std::uint32_t line) const {
  if (line == 0) return 0;
  if (line > starts_.size()) return size_;
  return starts_[line - 1];
}

std::uint32_t LineIndex::line_end(std::uint32_t line) const {
  if (line == 0) return 0;
  if (line >= starts_.size()) return size_;
  return starts_[line] - 1;
}

NodeId SyntaxTree::add(SyntaxNode node) {
  nodes_.push_back(std::move(node));
  return static_cast<NodeId>(nodes_.size() - 1);
}

void SyntaxTree::append_child(NodeId parent, NodeId child) {
  nodes_[parent].children.push_back(child);
  nodes_[child].parent = parent;
}

std::vector<NodeId> SyntaxTree::leaves() const {
  std::vector<NodeId> out;
  if (empty()) return out;
  std::vector<NodeId> stack{root()};
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    const SyntaxNode& n = nodes_[id];
    if (n.children.empty()) {
      if (n.leaf) out.push_back(id);
      continue;
    }
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::vector<NodeId> SyntaxTree::path_from_root(NodeId id) const {
  std::vector<NodeId> path;
  for (NodeId cur = id; cur != kNoNode; cur = nodes_[cur].parent) path.push_back(cur);
  std::reverse(path.begin(), path.end());
  return path;
}

std::size_t SyntaxTree::depth(NodeId id) const {
  std::size_t d = 0;
  for (NodeId cur = nodes_[id].parent; cur != kNoNode; cur = nodes_[cur].parent) ++d;
  return d;
}

bool SyntaxTree::is_ancestor(NodeId ancestor, NodeId id) const {
  for (NodeId cur = id; cur != kNoNode; cur = nodes_[cur].parent) {
    if (cur == ancestor) return true;
  }
  return false;
}

}  // namespace stylemine::syntax
