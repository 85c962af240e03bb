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


#ifndef STYLEMINE_SYNTAX_PARSER_HPP
#define STYLEMINE_SYNTAX_PARSER_HPP

#include <string_view>

#include "stylemine/syntax/roles.hpp"
#include "stylemine/syntax/tree.hpp"

namespace stylemine::syntax {

enum class Language { JavaScript };

Language language_from_name(std::string_view name);
std::string_view language_name(Language language);

/// Parses a whole file into a concrete syntax tree.
///
/// Every lexical token becomes a leaf: identifiers and literals carry their
/// Babel-style kind (`Identifier`, `StringLiteral`, ...), keywords and
/// punctuation are anonymous leaves with an empty kind. String literal
/// leaves span the text between the quotes; the quote bytes belong to no
/// node. Comments are attached as `CommentLine` / `CommentBlock` leaves under
/// the innermost node that encloses them.
///
/// Throws EncodingError for invalid UTF-8 and ParseError for invalid syntax.
SyntaxTree parse_file(std::string_view content,
                      Language language = Language::JavaScript,
                      const RoleTaxonomy& taxonomy = RoleTaxonomy::javascript());

/// True when `content` parses without error.
bool parses(std::string_view content, Language language = Language::JavaScript);

/// Throws EncodingError when `content` is not valid UTF-8 or contains NUL.
void check_encoding(std::string_view content);

}  // namespace stylemine::syntax

#endif  // STYLEMINE_SYNTAX_PARSER_HPP
