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


#include "stylemine/syntax/token_stream.hpp"

#include "stylemine/errors.hpp"
#include "stylemine/syntax/parser.hpp"

namespace stylemine::syntax {
namespace {

// ASCII whitespace, quotes, and the UTF-8 bytes of NBSP, BOM, LS and PS.
bool is_format_byte(std::string_view s, std::size_t& i) {
  const auto c = static_cast<unsigned char>(s[i]);
  if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v' ||
      c == '"' || c == '\'') {
    ++i;
    return true;
  }
  static constexpr std::string_view kWide[] = {"\xC2\xA0", "\xEF\xBB\xBF", "\xE2\x80\xA8",
                                               "\xE2\x80\xA9"};
  for (auto w : kWide) {
    if (s.substr(i, w.size()) == w) {
      i += w.size();
      return true;
    }
  }
  return false;
}

}  // namespace

std::string TokenStream::reconstruct() const {
  std::string out;
  out.reserve(source.size());
  for (const auto& t : tokens) out += t.value;
  return out;
}

TokenStream build_token_stream(SyntaxTree tree, std::string source) {
  TokenStream stream;
  const LineIndex lines(source);
  const std::string_view src(source);
  auto push_format = [&](std::uint32_t begin, std::uint32_t end) {
    const auto gap = src.substr(begin, end - begin);
    for (std::size_t i = 0; i < gap.size();) {
      if (!is_format_byte(gap, i)) {
        throw ReconstructionError("non-formatting byte outside leaves at offset " +
                                  std::to_string(begin + i));
      }
    }
    stream.tokens.push_back(VirtualToken{std::string(gap), TokenKind::Format, kNoNode,
                                         lines.at(begin), lines.at(end)});
  };

  std::uint32_t cursor = 0;
  bool first = true;
  for (const NodeId id : tree.leaves()) {
    const SyntaxNode& leaf = tree.node(id);
    const auto begin = leaf.start.offset;
    const auto end = leaf.end.offset;
    if (begin < cursor || end < begin || end > source.size()) {
      throw ReconstructionError("leaf out of order at offset " + std::to_string(begin));
    }
    if (!first || begin > cursor) push_format(cursor, begin);
    if (src.substr(begin, end - begin) != leaf.value) {
      throw ReconstructionError("leaf value mismatch at offset " + std::to_string(begin));
    }
    stream.tokens.push_back(
        VirtualToken{leaf.value, TokenKind::Semantic, id, leaf.start, leaf.end});
    cursor = end;
    first = false;
  }
  if (cursor < source.size()) push_format(cursor, static_cast<std::uint32_t>(source.size()));
  stream.source = std::move(source);
  stream.tree = std::move(tree);
  if (stream.reconstruct() != stream.source) {
    throw ReconstructionError("token stream does not reproduce the source");
  }
  return stream;
}

TokenStream tokenize(std::string source) {
  SyntaxTree tree = parse_file(source);
  return build_token_stream(std::move(tree), std::move(source));
}

}  // namespace stylemine::syntax
