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


#ifndef STYLEMINE_SYNTAX_TREE_OPS_HPP
#define STYLEMINE_SYNTAX_TREE_OPS_HPP

#include <cstdint>
#include <string_view>

#include "stylemine/syntax/parser.hpp"
#include "stylemine/syntax/tree.hpp"

namespace stylemine::syntax {

/// Deepest node having both `a` and `b` as descendants (or equal to them).
NodeId lowest_common_ancestor(const SyntaxTree& tree, NodeId a, NodeId b);

/// Deepest inner node whose span contains [begin, end).
NodeId covering_node(const SyntaxTree& tree, std::uint32_t begin, std::uint32_t end);

/// Smallest ancestor of the node covering `line` whose source text parses on
/// its own. Falls back to the root.
NodeId enclosing_parseable_block(const SyntaxTree& tree, std::string_view source,
                                 std::uint32_t line,
                                 Language language = Language::JavaScript);

/// Same as above for a byte range. The range is widened to the nearest leaf on
/// each side, so an edit at a node boundary climbs to a node holding both
/// neighbours.
NodeId enclosing_parseable_span(const SyntaxTree& tree, std::string_view source,
                                std::uint32_t begin, std::uint32_t end,
                                Language language = Language::JavaScript);

/// Compares kinds, roles, leaf values and child order; positions are ignored.
bool structurally_equal(const SyntaxTree& a, NodeId na, const SyntaxTree& b, NodeId nb);
bool structurally_equal(const SyntaxTree& a, const SyntaxTree& b);

}  // namespace stylemine::syntax

#endif  // STYLEMINE_SYNTAX_TREE_OPS_HPP
