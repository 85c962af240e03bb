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


#ifndef STYLEMINE_FEATURES_LABELS_HPP
#define STYLEMINE_FEATURES_LABELS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stylemine/syntax/token_stream.hpp"

namespace stylemine::features {

enum class Atom : std::uint8_t {
  Space,
  Tab,
  Newline,
  SpaceIndentInc,
  SpaceIndentDec,
  TabIndentInc,
  TabIndentDec,
  QuoteSingle,
  QuoteDouble,
  Noop,
};
inline constexpr std::size_t kAtomCount = 10;

std::string_view atom_name(Atom atom);
/// Compact glyph used in text dumps.
std::string_view atom_glyph(Atom atom);
Atom atom_from_name(std::string_view name);

inline constexpr std::size_t kDefaultCompoundCap = 8;

struct CompoundLabel {
  std::vector<Atom> atoms;

  static CompoundLabel noop() { return CompoundLabel{{Atom::Noop}}; }
  bool is_noop() const { return atoms.size() == 1 && atoms.front() == Atom::Noop; }
  /// Names joined by '+', e.g. "NEWLINE+TAB_INDENT_INC".
  std::string to_string() const;
  std::string glyphs() const;
  static CompoundLabel parse(std::string_view text);

  friend bool operator==(const CompoundLabel&, const CompoundLabel&) = default;
  friend auto operator<=>(const CompoundLabel& a, const CompoundLabel& b) {
    return a.atoms <=> b.atoms;
  }
};

/// Leading spaces and tabs of the line containing `offset`.
std::string_view line_indent(std::string_view source, std::uint32_t offset);

/// Classifies the bytes of one gap. `prev_indent` is the indentation of the
/// line where the gap starts; the indentation after the gap's last newline
/// is compared against it. Whitespace on blank lines inside the gap is not
/// represented. Throws UnsupportedCharacter for any other byte.
CompoundLabel classify_gap(std::string_view gap, std::string_view prev_indent);

/// Inverse of classify_gap for the same `prev_indent`. Throws RenderError
/// when a decrease does not match the indentation it removes.
std::string render_label(const CompoundLabel& label, std::string_view prev_indent);

enum class DropReason : std::uint8_t {
  None,
  UnsupportedCharacter,
  MultilineNeighbour,  // next to a comment or template spanning lines
  TooLong,             // more atoms than the compound cap
};

struct GapLabel {
  std::size_t token = 0;  // index into the stream
  CompoundLabel label;    // empty atoms when dropped for UnsupportedCharacter
  DropReason dropped = DropReason::None;
};

/// One entry per format token of the stream, in order.
std::vector<GapLabel> label_gaps(const syntax::TokenStream& stream,
                                 std::size_t compound_cap = kDefaultCompoundCap);

}  // namespace stylemine::features

#endif  // STYLEMINE_FEATURES_LABELS_HPP
