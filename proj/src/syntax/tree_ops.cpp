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


#include "stylemine/syntax/tree_ops.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace stylemine::syntax {
namespace {

bool parses_in_isolation(const SyntaxTree& tree, NodeId id, std::string_view source,
                         Language language) {
  const SyntaxNode& n = tree.node(id);
  return parses(source.substr(n.start.offset, n.end.offset - n.start.offset), language);
}

NodeId climb_to_parseable(const SyntaxTree& tree, NodeId id, std::string_view source,
                          Language language) {
  while (id != tree.root() && !parses_in_isolation(tree, id, source, language)) {
    id = tree.node(id).parent;
  }
  return id;
}

}  // namespace

NodeId lowest_common_ancestor(const SyntaxTree& tree, NodeId a, NodeId b) {
  const auto pa = tree.path_from_root(a);
  const auto pb = tree.path_from_root(b);
  NodeId last = pa.front();
  for (std::size_t i = 0; i < pa.size() && i < pb.size(); ++i) {
    if (pa[i] != pb[i]) break;
    last = pa[i];
  }
  return last;
}

NodeId covering_node(const SyntaxTree& tree, std::uint32_t begin, std::uint32_t end) {
  NodeId cur = tree.root();
  while (true) {
    NodeId next = kNoNode;
    for (const NodeId c : tree.node(cur).children) {
      const SyntaxNode& n = tree.node(c);
      if (n.leaf) continue;
      if (n.start.offset <= begin && end <= n.end.offset) {
        next = c;
        break;
      }
    }
    if (next == kNoNode) return cur;
    cur = next;
  }
}

NodeId enclosing_parseable_block(const SyntaxTree& tree, std::string_view source,
                                 std::uint32_t line, Language language) {
  const LineIndex lines(source);
  auto begin = lines.line_start(line);
  auto end = lines.line_end(line);
  while (begin < end && (source[begin] == ' ' || source[begin] == '\t')) ++begin;
  while (end > begin && (source[end - 1] == ' ' || source[end - 1] == '\t')) --end;
  return climb_to_parseable(tree, covering_node(tree, begin, end), source, language);
}

NodeId enclosing_parseable_span(const SyntaxTree& tree, std::string_view source,
                                std::uint32_t begin, std::uint32_t end, Language language) {
  std::uint32_t lo = 0;
  auto hi = static_cast<std::uint32_t>(source.size());
  for (const NodeId id : tree.leaves()) {
    const SyntaxNode& leaf = tree.node(id);
    if (leaf.end.offset <= begin) lo = leaf.start.offset;
    if (leaf.start.offset >= end) {
      hi = leaf.end.offset;
      break;
    }
  }
  return climb_to_parseable(tree, covering_node(tree, lo, hi), source, language);
}

bool structurally_equal(const SyntaxTree& a, NodeId na, const SyntaxTree& b, NodeId nb) {
  std::vector<std::pair<NodeId, NodeId>> stack{{na, nb}};
  while (!stack.empty()) {
    const auto [x, y] = stack.back();
    stack.pop_back();
    const SyntaxNode& u = a.node(x);
    const SyntaxNode& v = b.node(y);
    if (u.internal_type != v.internal_type || u.roles != v.roles || u.value != v.value ||
        u.leaf != v.leaf || u.children.size() != v.children.size()) {
      return false;
    }
    for (std::size_t i = 0; i < u.children.size(); ++i) {
      stack.emplace_back(u.children[i], v.children[i]);
    }
  }
  return true;
}

bool structurally_equal(const SyntaxTree& a, const SyntaxTree& b) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  return structurally_equal(a, a.root(), b, b.root());
}

}  // namespace stylemine::syntax
