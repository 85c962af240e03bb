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


#include "stylemine/features/labels.hpp"

#include <array>

#include "stylemine/errors.hpp"

namespace stylemine::features {
namespace {

constexpr std::array<std::string_view, kAtomCount> kNames = {
    "SPACE",          "TAB",          "NEWLINE",      "SPACE_INDENT_INC",
    "SPACE_INDENT_DEC", "TAB_INDENT_INC", "TAB_INDENT_DEC", "QUOTE_SINGLE",
    "QUOTE_DOUBLE",   "NOOP"};

constexpr std::array<std::string_view, kAtomCount> kGlyphs = {
    "␣", "⇥", "⏎", "␣⁺", "␣⁻", "⇥⁺", "⇥⁻", "'", "\"", "∅"};

bool is_quote(char c) { return c == '\'' || c == '"'; }

Atom quote_atom(char c) { return c == '\'' ? Atom::QuoteSingle : Atom::QuoteDouble; }

Atom intra_atom(char c, std::size_t offset) {
  if (c == ' ') return Atom::Space;
  if (c == '\t') return Atom::Tab;
  throw UnsupportedCharacter("unsupported formatting byte 0x" +
                             std::to_string(static_cast<unsigned char>(c)) + " at gap offset " +
                             std::to_string(offset));
}

bool is_multiline(const syntax::TokenStream& stream, std::size_t index) {
  if (index >= stream.tokens.size()) return false;
  const auto& t = stream.tokens[index];
  if (!t.is_semantic() || t.start.line == t.end.line) return false;
  const auto& type = stream.tree.node(t.node).internal_type;
  return type == "CommentBlock" || type == "TemplateLiteral" || type == "StringLiteral";
}

}  // namespace

std::string_view atom_name(Atom atom) { return kNames[static_cast<std::size_t>(atom)]; }
std::string_view atom_glyph(Atom atom) { return kGlyphs[static_cast<std::size_t>(atom)]; }

Atom atom_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kAtomCount; ++i) {
    if (kNames[i] == name) return static_cast<Atom>(i);
  }
  throw Error("unknown atomic class: " + std::string(name));
}

std::string CompoundLabel::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += '+';
    out += atom_name(atoms[i]);
  }
  return out;
}

std::string CompoundLabel::glyphs() const {
  std::string out;
  for (const Atom a : atoms) out += atom_glyph(a);
  return out;
}

CompoundLabel CompoundLabel::parse(std::string_view text) {
  CompoundLabel label;
  while (!text.empty()) {
    const auto plus = text.find('+');
    label.atoms.push_back(atom_from_name(text.substr(0, plus)));
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
  }
  return label;
}

std::string_view line_indent(std::string_view source, std::uint32_t offset) {
  std::size_t start = offset;
  while (start > 0 && source[start - 1] != '\n') --start;
  std::size_t end = start;
  while (end < source.size() && (source[end] == ' ' || source[end] == '\t')) ++end;
  return source.substr(start, end - start);
}

CompoundLabel classify_gap(std::string_view gap, std::string_view prev_indent) {
  CompoundLabel label;
  if (gap.empty()) return CompoundLabel::noop();
  std::size_t begin = 0;
  std::size_t end = gap.size();
  std::optional<Atom> trailing;
  if (is_quote(gap.front())) {
    label.atoms.push_back(quote_atom(gap.front()));
    ++begin;
  }
  if (end > begin && is_quote(gap.back())) {
    trailing = quote_atom(gap.back());
    --end;
  }
  const auto body = gap.substr(begin, end - begin);
  const auto first_nl = body.find('\n');
  if (first_nl == std::string_view::npos) {
    for (std::size_t i = 0; i < body.size(); ++i) {
      label.atoms.push_back(intra_atom(body[i], begin + i));
    }
  } else {
    for (std::size_t i = 0; i < first_nl; ++i) {
      label.atoms.push_back(intra_atom(body[i], begin + i));
    }
    const auto last_nl = body.rfind('\n');
    for (std::size_t i = first_nl; i <= last_nl; ++i) {
      if (body[i] == '\n') {
        label.atoms.push_back(Atom::Newline);
      } else {
        intra_atom(body[i], begin + i);  // validates, blank-line whitespace is dropped
      }
    }
    const auto indent = body.substr(last_nl + 1);
    for (std::size_t i = 0; i < indent.size(); ++i) intra_atom(indent[i], begin + last_nl + 1 + i);
    std::size_t common = 0;
    while (common < indent.size() && common < prev_indent.size() &&
           indent[common] == prev_indent[common]) {
      ++common;
    }
    for (std::size_t i = prev_indent.size(); i > common; --i) {
      label.atoms.push_back(prev_indent[i - 1] == '\t' ? Atom::TabIndentDec
                                                       : Atom::SpaceIndentDec);
    }
    for (std::size_t i = common; i < indent.size(); ++i) {
      label.atoms.push_back(indent[i] == '\t' ? Atom::TabIndentInc : Atom::SpaceIndentInc);
    }
  }
  if (trailing) label.atoms.push_back(*trailing);
  return label;
}

std::string render_label(const CompoundLabel& label, std::string_view prev_indent) {
  std::string out;
  std::size_t last_nl = label.atoms.size();
  for (std::size_t i = 0; i < label.atoms.size(); ++i) {
    if (label.atoms[i] == Atom::Newline) last_nl = i;
  }
  std::string indent(prev_indent);
  bool indent_pending = false;
  auto flush_indent = [&] {
    if (indent_pending) out += indent;
    indent_pending = false;
  };
  for (std::size_t i = 0; i < label.atoms.size(); ++i) {
    const Atom a = label.atoms[i];
    switch (a) {
      case Atom::Noop:
        break;
      case Atom::Space:
        flush_indent();
        out += ' ';
        break;
      case Atom::Tab:
        flush_indent();
        out += '\t';
        break;
      case Atom::QuoteSingle:
        flush_indent();
        out += '\'';
        break;
      case Atom::QuoteDouble:
        flush_indent();
        out += '"';
        break;
      case Atom::Newline:
        out += '\n';
        if (i == last_nl) indent_pending = true;
        break;
      case Atom::SpaceIndentInc:
      case Atom::TabIndentInc:
        if (!indent_pending) throw RenderError("indentation change without a newline");
        indent += a == Atom::SpaceIndentInc ? ' ' : '\t';
        break;
      case Atom::SpaceIndentDec:
      case Atom::TabIndentDec: {
        if (!indent_pending) throw RenderError("indentation change without a newline");
        const char want = a == Atom::SpaceIndentDec ? ' ' : '\t';
        if (indent.empty() || indent.back() != want) {
          throw RenderError("indentation decrease exceeds the current indentation");
        }
        indent.pop_back();
        break;
      }
    }
  }
  flush_indent();
  return out;
}

std::vector<GapLabel> label_gaps(const syntax::TokenStream& stream, std::size_t compound_cap) {
  std::vector<GapLabel> out;
  const std::string_view src(stream.source);
  for (std::size_t i = 0; i < stream.tokens.size(); ++i) {
    const auto& t = stream.tokens[i];
    if (!t.is_format()) continue;
    GapLabel g;
    g.token = i;
    if ((i > 0 && is_multiline(stream, i - 1)) || is_multiline(stream, i + 1)) {
      g.dropped = DropReason::MultilineNeighbour;
    }
    try {
      g.label = classify_gap(t.value, line_indent(src, t.start.offset));
      if (g.dropped == DropReason::None && g.label.atoms.size() > compound_cap) {
        g.dropped = DropReason::TooLong;
      }
    } catch (const UnsupportedCharacter&) {
      g.label = {};
      g.dropped = DropReason::UnsupportedCharacter;
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace stylemine::features
