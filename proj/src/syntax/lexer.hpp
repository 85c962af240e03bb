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


#ifndef STYLEMINE_SRC_SYNTAX_LEXER_HPP
#define STYLEMINE_SRC_SYNTAX_LEXER_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace stylemine::syntax::detail {

enum class TokKind : std::uint8_t {
  Identifier,
  Keyword,
  Punct,
  Number,
  String,
  Template,
  Regex,
  PrivateName,
  EndOfFile,
};

struct Token {
  TokKind kind = TokKind::EndOfFile;
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
  bool newline_before = false;
  std::string_view text;

  bool is(TokKind k, std::string_view t) const { return kind == k && text == t; }
  bool punct(std::string_view t) const { return is(TokKind::Punct, t); }
  bool keyword(std::string_view t) const { return is(TokKind::Keyword, t); }
  /// Identifier with the given spelling (contextual keywords such as `of`).
  bool word(std::string_view t) const { return is(TokKind::Identifier, t); }
};

struct Comment {
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
  bool block = false;
};

struct LexResult {
  std::vector<Token> tokens;  // terminated by EndOfFile
  std::vector<Comment> comments;
};

/// Tokenizes JavaScript source. Regex-vs-division is resolved from the
/// previous significant token. Throws ParseError on malformed input.
LexResult lex(std::string_view source);

bool is_reserved_word(std::string_view word);

}  // namespace stylemine::syntax::detail

#endif  // STYLEMINE_SRC_SYNTAX_LEXER_HPP
