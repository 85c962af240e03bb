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


#ifndef STYLEMINE_SYNTAX_TOKEN_STREAM_HPP
#define STYLEMINE_SYNTAX_TOKEN_STREAM_HPP

#include <string>
#include <vector>

#include "stylemine/syntax/tree.hpp"

namespace stylemine::syntax {

enum class TokenKind : std::uint8_t { Semantic, Format };

struct VirtualToken {
  std::string value;
  TokenKind kind = TokenKind::Semantic;
  /// Backing leaf; kNoNode for format tokens.
  NodeId node = kNoNode;
  Position start;
  Position end;

  bool is_format() const { return kind == TokenKind::Format; }
  bool is_semantic() const { return kind == TokenKind::Semantic; }
};

/// Linearized file. Semantic tokens are tree leaves; format tokens hold the
/// bytes between them (whitespace and string quotes). An empty format token
/// sits between every two adjacent semantic tokens, so the two kinds
/// alternate. Leading and trailing format tokens exist only when non-empty.
struct TokenStream {
  std::vector<VirtualToken> tokens;
  std::string source;
  SyntaxTree tree;

  std::string reconstruct() const;
};

/// Throws ReconstructionError if bytes outside leaves are not formatting
/// bytes or the stream does not reproduce `source`.
TokenStream build_token_stream(SyntaxTree tree, std::string source);

/// Parses and linearizes in one step.
TokenStream tokenize(std::string source);

}  // namespace stylemine::syntax

#endif  // STYLEMINE_SYNTAX_TOKEN_STREAM_HPP
