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


#include "lexer.hpp"

#include <array>
#include <cctype>
#include <string>

#include "stylemine/errors.hpp"

namespace stylemine::syntax::detail {
namespace {

constexpr std::array<std::string_view, 36> kReserved = {
    "break",   "case",   "catch",      "class",    "const",  "continue",
    "debugger", "default", "delete",   "do",       "else",   "export",
    "extends", "finally", "for",       "function", "if",     "import",
    "in",      "instanceof", "new",    "return",   "super",  "switch",
    "this",    "throw",  "try",        "typeof",   "var",    "void",
    "while",   "with",   "null",       "true",     "false",  "enum"};

// Longest first so that a linear scan finds the maximal munch.
constexpr std::array<std::string_view, 52> kPunctuators = {
    ">>>=", "...", "===", "!==", "**=", "<<=", ">>=", ">>>", "&&=", "||=",
    "?\?=", "=>",  "==",  "!=",  "<=",  ">=",  "&&",  "||",  "??",  "?.",
    "++",   "--",  "+=",  "-=",  "*=",  "/=",  "%=",  "&=",  "|=",  "^=",
    "**",   "<<",  ">>",  "{",   "}",   "(",   ")",   "[",   "]",   ";",
    ",",    "<",   ">",   "+",   "-",   "*",   "/",   "%",   "&",   "|",
    "^",    "!"};

constexpr std::array<std::string_view, 5> kExtraPunct = {"~", "?", ":", "=", "."};

bool is_id_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '$' ||
         c == '_' || c == '\\' || c >= 0x80;
}

bool is_id_part(unsigned char c) {
  return is_id_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  LexResult run() {
    LexResult out;
    bool newline = false;
    while (true) {
      newline = skip_trivia(out.comments) || newline;
      if (pos_ >= src_.size()) {
        Token eof;
        eof.kind = TokKind::EndOfFile;
        eof.begin = eof.end = static_cast<std::uint32_t>(src_.size());
        eof.newline_before = newline;
        out.tokens.push_back(eof);
        break;
      }
      Token tok = next_token();
      tok.newline_before = newline;
      newline = false;
      tok.text = src_.substr(tok.begin, tok.end - tok.begin);
      track_context(tok);
      out.tokens.push_back(tok);
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("lex error at byte " + std::to_string(pos_) + ": " + what);
  }

  // Returns true when a line terminator was crossed.
  bool skip_trivia(std::vector<Comment>& comments) {
    bool newline = false;
    while (pos_ < src_.size()) {
      const unsigned char c = src_[pos_];
      if (c == '\n' || c == '\r') {
        newline = true;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\v' || c == '\f') {
        ++pos_;
      } else if (c == 0xC2 && pos_ + 1 < src_.size() &&
                 static_cast<unsigned char>(src_[pos_ + 1]) == 0xA0) {
        pos_ += 2;  // U+00A0
      } else if (c == 0xEF && src_.substr(pos_, 3) == "\xEF\xBB\xBF") {
        pos_ += 3;  // BOM
      } else if (c == 0xE2 && (src_.substr(pos_, 3) == "\xE2\x80\xA8" ||
                               src_.substr(pos_, 3) == "\xE2\x80\xA9")) {
        newline = true;
        pos_ += 3;
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        const auto begin = pos_;
        while (pos_ < src_.size() && src_[pos_] != '\n' && src_[pos_] != '\r') ++pos_;
        comments.push_back({static_cast<std::uint32_t>(begin),
                            static_cast<std::uint32_t>(pos_), false});
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '*') {
        const auto begin = pos_;
        const auto close = src_.find("*/", pos_ + 2);
        if (close == std::string_view::npos) fail("unterminated comment");
        if (src_.substr(pos_, close - pos_).find('\n') != std::string_view::npos) {
          newline = true;
        }
        pos_ = close + 2;
        comments.push_back({static_cast<std::uint32_t>(begin),
                            static_cast<std::uint32_t>(pos_), true});
      } else if (c == '#' && pos_ == 0 && src_.size() > 1 && src_[1] == '!') {
        const auto begin = pos_;
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
        comments.push_back({static_cast<std::uint32_t>(begin),
                            static_cast<std::uint32_t>(pos_), false});
      } else {
        break;
      }
    }
    return newline;
  }

  Token make(TokKind kind, std::size_t begin) const {
    Token t;
    t.kind = kind;
    t.begin = static_cast<std::uint32_t>(begin);
    t.end = static_cast<std::uint32_t>(pos_);
    return t;
  }

  Token next_token() {
    const std::size_t begin = pos_;
    const unsigned char c = src_[pos_];
    if (is_id_start(c)) {
      scan_identifier();
      const auto word = src_.substr(begin, pos_ - begin);
      return make(is_reserved_word(word) ? TokKind::Keyword : TokKind::Identifier, begin);
    }
    if (c == '#' && pos_ + 1 < src_.size() && is_id_start(src_[pos_ + 1])) {
      ++pos_;
      scan_identifier();
      return make(TokKind::PrivateName, begin);
    }
    if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
      scan_number();
      return make(TokKind::Number, begin);
    }
    if (c == '"' || c == '\'') {
      scan_string(static_cast<char>(c));
      return make(TokKind::String, begin);
    }
    if (c == '`') {
      scan_template();
      return make(TokKind::Template, begin);
    }
    if (c == '/' && regex_allowed_) {
      scan_regex();
      return make(TokKind::Regex, begin);
    }
    for (auto p : kPunctuators) {
      if (src_.compare(pos_, p.size(), p) == 0) {
        // `?.` followed by a digit is a conditional operator and a number.
        if (p == "?." && pos_ + 2 < src_.size() && is_digit(src_[pos_ + 2])) continue;
        pos_ += p.size();
        return make(TokKind::Punct, begin);
      }
    }
    for (auto p : kExtraPunct) {
      if (src_.compare(pos_, p.size(), p) == 0) {
        pos_ += p.size();
        return make(TokKind::Punct, begin);
      }
    }
    fail("unexpected character");
  }

  void scan_identifier() {
    while (pos_ < src_.size()) {
      const unsigned char c = src_[pos_];
      if (c == '\\') {
        if (pos_ + 1 >= src_.size() || src_[pos_ + 1] != 'u') fail("bad escape in identifier");
        pos_ += 2;
        if (pos_ < src_.size() && src_[pos_] == '{') {
          const auto close = src_.find('}', pos_);
          if (close == std::string_view::npos) fail("bad unicode escape");
          pos_ = close + 1;
        } else {
          pos_ += 4;
        }
        continue;
      }
      if (c >= 0x80) {
        // Non-ASCII whitespace never belongs to an identifier.
        if ((c == 0xC2 && pos_ + 1 < src_.size() &&
             static_cast<unsigned char>(src_[pos_ + 1]) == 0xA0) ||
            src_.substr(pos_, 3) == "\xEF\xBB\xBF" ||
            src_.substr(pos_, 3) == "\xE2\x80\xA8" ||
            src_.substr(pos_, 3) == "\xE2\x80\xA9") {
          break;
        }
      }
      if (!is_id_part(c)) break;
      ++pos_;
    }
    if (pos_ > src_.size()) fail("truncated identifier");
  }

  void scan_number() {
    auto digits = [&](auto pred) {
      while (pos_ < src_.size() && (pred(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    };
    if (src_[pos_] == '0' && pos_ + 1 < src_.size()) {
      const char p = static_cast<char>(src_[pos_ + 1] | 0x20);
      if (p == 'x') {
        pos_ += 2;
        digits([](unsigned char c) { return std::isxdigit(c) != 0; });
        if (pos_ < src_.size() && src_[pos_] == 'n') ++pos_;
        return;
      }
      if (p == 'o' || p == 'b') {
        pos_ += 2;
        digits([](unsigned char c) { return is_digit(c); });
        if (pos_ < src_.size() && src_[pos_] == 'n') ++pos_;
        return;
      }
    }
    digits([](unsigned char c) { return is_digit(c); });
    if (pos_ < src_.size() && src_[pos_] == 'n') {
      ++pos_;
      return;
    }
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      digits([](unsigned char c) { return is_digit(c); });
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t save = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && is_digit(src_[pos_])) {
        digits([](unsigned char c) { return is_digit(c); });
      } else {
        pos_ = save;
      }
    }
    if (pos_ < src_.size() && is_id_start(src_[pos_]) && static_cast<unsigned char>(src_[pos_]) < 0x80) {
      fail("identifier directly after number");
    }
  }

  void scan_string(char quote) {
    ++pos_;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == quote) {
        ++pos_;
        return;
      }
      if (c == '\\') {
        pos_ += 2;
        if (pos_ <= src_.size() && src_[pos_ - 1] == '\r' && pos_ < src_.size() && src_[pos_] == '\n') ++pos_;
        continue;
      }
      if (c == '\n' || c == '\r') fail("newline in string literal");
      ++pos_;
    }
    fail("unterminated string literal");
  }

  void scan_template() {
    ++pos_;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '`') {
        ++pos_;
        return;
      }
      if (c == '\\') {
        pos_ += 2;
        continue;
      }
      if (c == '$' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '{') {
        pos_ += 2;
        skip_template_expression();
        continue;
      }
      ++pos_;
    }
    fail("unterminated template literal");
  }

  // Skips the code of a `${ ... }` substitution including the closing brace.
  void skip_template_expression() {
    int depth = 1;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '{') {
        ++depth;
        ++pos_;
      } else if (c == '}') {
        ++pos_;
        if (--depth == 0) return;
      } else if (c == '"' || c == '\'') {
        scan_string(c);
      } else if (c == '`') {
        scan_template();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '*') {
        const auto close = src_.find("*/", pos_ + 2);
        if (close == std::string_view::npos) fail("unterminated comment");
        pos_ = close + 2;
      } else {
        ++pos_;
      }
    }
    fail("unterminated template substitution");
  }

  void scan_regex() {
    ++pos_;
    bool in_class = false;
    while (true) {
      if (pos_ >= src_.size()) fail("unterminated regular expression");
      const char c = src_[pos_];
      if (c == '\n' || c == '\r') fail("newline in regular expression");
      if (c == '\\') {
        pos_ += 2;
        continue;
      }
      if (c == '[') in_class = true;
      if (c == ']') in_class = false;
      ++pos_;
      if (c == '/' && !in_class) break;
    }
    while (pos_ < src_.size() && is_id_part(src_[pos_]) && static_cast<unsigned char>(src_[pos_]) < 0x80) ++pos_;
  }

  // Decides whether a `/` after `tok` starts a regular expression.
  void track_context(const Token& tok) {
    switch (tok.kind) {
      case TokKind::Identifier:
        regex_allowed_ = tok.text == "yield" || tok.text == "await";
        keyword_before_paren_ = false;
        break;
      case TokKind::Keyword:
        regex_allowed_ = !(tok.text == "this" || tok.text == "super" ||
                           tok.text == "null" || tok.text == "true" ||
                           tok.text == "false");
        keyword_before_paren_ = tok.text == "if" || tok.text == "while" ||
                                tok.text == "for" || tok.text == "with";
        break;
      case TokKind::Punct:
        if (tok.text == "(") {
          paren_stack_.push_back(keyword_before_paren_);
          regex_allowed_ = true;
        } else if (tok.text == ")") {
          bool after_header = false;
          if (!paren_stack_.empty()) {
            after_header = paren_stack_.back();
            paren_stack_.pop_back();
          }
          regex_allowed_ = after_header;
        } else if (tok.text == "]" || tok.text == "}" || tok.text == "++" || tok.text == "--") {
          regex_allowed_ = false;
        } else {
          regex_allowed_ = true;
        }
        keyword_before_paren_ = false;
        break;
      default:
        regex_allowed_ = false;
        keyword_before_paren_ = false;
        break;
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  bool regex_allowed_ = true;
  bool keyword_before_paren_ = false;
  std::vector<bool> paren_stack_;
};

}  // namespace

bool is_reserved_word(std::string_view word) {
  for (auto k : kReserved) {
    if (k == word) return true;
  }
  return false;
}

LexResult lex(std::string_view source) { return Lexer(source).run(); }

}  // namespace stylemine::syntax::detail
