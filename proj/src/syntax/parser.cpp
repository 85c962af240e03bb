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


#include "stylemine/syntax/parser.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "lexer.hpp"
#include "stylemine/errors.hpp"

namespace stylemine::syntax {
namespace {

using detail::Comment;
using detail::TokKind;
using detail::Token;

// A child of a node under construction: a token, an inner node or a comment.
struct Child {
  enum class Kind : std::uint8_t { Token, Node, Comment };
  Kind kind = Kind::Token;
  std::uint32_t index = 0;
  bool anonymous = false;  // only for tokens: force an empty kind
};

struct PNode {
  std::string_view type;
  std::vector<Child> children;
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
};

constexpr int kMaxDepth = 1500;

class Parser {
 public:
  Parser(std::string_view src, detail::LexResult lexed)
      : src_(src), toks_(std::move(lexed.tokens)), comments_(std::move(lexed.comments)) {}

  std::vector<PNode>& nodes() { return nodes_; }
  const std::vector<Token>& tokens() const { return toks_; }
  const std::vector<Comment>& comments() const { return comments_; }

  std::uint32_t parse_program() {
    const auto program = new_node("Program");
    while (!at_eof()) add(program, parse_statement_list_item());
    return program;
  }

 private:
  // ---- token helpers -------------------------------------------------------

  const Token& cur() const { return toks_[pos_]; }
  const Token& peek(std::size_t n = 1) const {
    return toks_[std::min(pos_ + n, toks_.size() - 1)];
  }
  bool at_eof() const { return cur().kind == TokKind::EndOfFile; }
  bool at_punct(std::string_view p) const { return cur().punct(p); }
  bool at_keyword(std::string_view k) const { return cur().keyword(k); }
  bool at_word(std::string_view w) const { return cur().word(w); }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = cur();
    std::uint32_t line = 1;
    std::uint32_t col = 1;
    for (std::uint32_t i = 0; i < t.begin && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
                     ": " + what + " (got '" + std::string(t.text) + "')");
  }

  std::uint32_t new_node(std::string_view type) {
    nodes_.push_back(PNode{type, {}, 0, 0});
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }

  void add(std::uint32_t node, Child child) { nodes_[node].children.push_back(child); }

  Child node_child(std::uint32_t node) const { return Child{Child::Kind::Node, node, false}; }

  // Consumes the current token as a child of `node`.
  void take(std::uint32_t node, bool anonymous = false) {
    if (at_eof()) fail("unexpected end of input");
    add(node, Child{Child::Kind::Token, static_cast<std::uint32_t>(pos_), anonymous});
    ++pos_;
  }
  void take_anon(std::uint32_t node) { take(node, true); }

  Child take_single() {
    if (at_eof()) fail("unexpected end of input");
    Child c{Child::Kind::Token, static_cast<std::uint32_t>(pos_), false};
    ++pos_;
    return c;
  }

  void expect_punct(std::uint32_t node, std::string_view p) {
    if (!at_punct(p)) fail("expected '" + std::string(p) + "'");
    take(node);
  }
  void expect_keyword(std::uint32_t node, std::string_view k) {
    if (!at_keyword(k)) fail("expected '" + std::string(k) + "'");
    take(node);
  }

  void consume_semicolon(std::uint32_t node) {
    if (at_punct(";")) {
      take(node);
      return;
    }
    if (at_punct("}") || at_eof() || cur().newline_before) return;
    fail("missing semicolon");
  }

  bool is_identifier_token(const Token& t) const {
    return t.kind == TokKind::Identifier;
  }

  std::string_view& type_of(std::uint32_t node) { return nodes_[node].type; }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth) parser.fail("nesting too deep");
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  struct FunctionScope {
    FunctionScope(Parser& p, bool async, bool generator)
        : parser(p), saved_async(p.in_async_), saved_generator(p.in_generator_),
          saved_no_in(p.no_in_) {
      p.in_async_ = async;
      p.in_generator_ = generator;
      p.no_in_ = false;
    }
    ~FunctionScope() {
      parser.in_async_ = saved_async;
      parser.in_generator_ = saved_generator;
      parser.no_in_ = saved_no_in;
    }
    Parser& parser;
    bool saved_async;
    bool saved_generator;
    bool saved_no_in;
  };

  struct NoInScope {
    NoInScope(Parser& p, bool value) : parser(p), saved(p.no_in_) { p.no_in_ = value; }
    ~NoInScope() { parser.no_in_ = saved; }
    Parser& parser;
    bool saved;
  };

  // ---- statements ----------------------------------------------------------

  Child parse_statement_list_item() {
    DepthGuard guard(*this);
    if (at_keyword("function")) return node_child(parse_function(true, false));
    if (at_word("async") && peek().keyword("function") && !peek().newline_before) {
      return node_child(parse_function(true, true));
    }
    if (at_keyword("class")) return node_child(parse_class(true));
    if (at_keyword("const") || is_let_declaration()) {
      const auto decl = parse_variable_declaration();
      consume_semicolon(decl);
      return node_child(decl);
    }
    if (at_keyword("import") && !peek().punct("(") && !peek().punct(".")) {
      return node_child(parse_import());
    }
    if (at_keyword("export")) return node_child(parse_export());
    return parse_statement();
  }

  bool is_let_declaration() const {
    if (!at_word("let")) return false;
    const Token& n = peek();
    return n.kind == TokKind::Identifier || n.punct("[") || n.punct("{") ||
           (n.kind == TokKind::Keyword && n.text != "in" && n.text != "instanceof");
  }

  Child parse_statement() {
    DepthGuard guard(*this);
    const Token& t = cur();
    if (t.punct("{")) return node_child(parse_block("BlockStatement"));
    if (t.punct(";")) {
      const auto n = new_node("EmptyStatement");
      take(n);
      return node_child(n);
    }
    if (t.kind == TokKind::Keyword) {
      if (t.text == "var") {
        const auto decl = parse_variable_declaration();
        consume_semicolon(decl);
        return node_child(decl);
      }
      if (t.text == "if") return node_child(parse_if());
      if (t.text == "for") return node_child(parse_for());
      if (t.text == "while") return node_child(parse_while());
      if (t.text == "do") return node_child(parse_do_while());
      if (t.text == "return") return node_child(parse_jump("ReturnStatement", true));
      if (t.text == "throw") return node_child(parse_throw());
      if (t.text == "break") return node_child(parse_jump("BreakStatement", false));
      if (t.text == "continue") return node_child(parse_jump("ContinueStatement", false));
      if (t.text == "try") return node_child(parse_try());
      if (t.text == "switch") return node_child(parse_switch());
      if (t.text == "with") return node_child(parse_with());
      if (t.text == "debugger") {
        const auto n = new_node("DebuggerStatement");
        take_anon(n);
        consume_semicolon(n);
        return node_child(n);
      }
      if (t.text == "function") return node_child(parse_function(true, false));
      if (t.text == "class") return node_child(parse_class(true));
      if (t.text == "const") {
        const auto decl = parse_variable_declaration();
        consume_semicolon(decl);
        return node_child(decl);
      }
    }
    if (t.kind == TokKind::Identifier && peek().punct(":")) {
      const auto n = new_node("LabeledStatement");
      take(n);
      take(n);
      add(n, parse_statement());
      return node_child(n);
    }
    if (is_let_declaration() || (at_word("async") && peek().keyword("function") &&
                                 !peek().newline_before)) {
      return parse_statement_list_item();
    }
    const auto n = new_node("ExpressionStatement");
    add(n, parse_expression());
    consume_semicolon(n);
    return node_child(n);
  }

  std::uint32_t parse_block(std::string_view type) {
    const auto n = new_node(type);
    expect_punct(n, "{");
    while (!at_punct("}")) {
      if (at_eof()) fail("unterminated block");
      add(n, parse_statement_list_item());
    }
    take(n);
    return n;
  }

  std::uint32_t parse_variable_declaration() {
    const auto n = new_node("VariableDeclaration");
    take_anon(n);  // var / let / const
    while (true) {
      const auto d = new_node("VariableDeclarator");
      add(d, parse_binding_target());
      if (at_punct("=")) {
        take(d);
        add(d, parse_assignment());
      }
      add(n, node_child(d));
      if (!at_punct(",")) break;
      take(n);
    }
    return n;
  }

  std::uint32_t parse_if() {
    const auto n = new_node("IfStatement");
    take_anon(n);
    expect_punct(n, "(");
    add(n, parse_expression());
    expect_punct(n, ")");
    add(n, parse_statement());
    if (at_keyword("else")) {
      take(n);
      add(n, parse_statement());
    }
    return n;
  }

  std::uint32_t parse_while() {
    const auto n = new_node("WhileStatement");
    take_anon(n);
    expect_punct(n, "(");
    add(n, parse_expression());
    expect_punct(n, ")");
    add(n, parse_statement());
    return n;
  }

  std::uint32_t parse_do_while() {
    const auto n = new_node("DoWhileStatement");
    take_anon(n);
    add(n, parse_statement());
    expect_keyword(n, "while");
    expect_punct(n, "(");
    add(n, parse_expression());
    expect_punct(n, ")");
    if (at_punct(";")) take(n);
    return n;
  }

  std::uint32_t parse_with() {
    const auto n = new_node("WithStatement");
    take_anon(n);
    expect_punct(n, "(");
    add(n, parse_expression());
    expect_punct(n, ")");
    add(n, parse_statement());
    return n;
  }

  std::uint32_t parse_jump(std::string_view type, bool is_return) {
    const auto n = new_node(type);
    take_anon(n);
    const bool ends = at_punct(";") || at_punct("}") || at_eof() || cur().newline_before;
    if (!ends) {
      if (is_return) {
        add(n, parse_expression());
      } else if (cur().kind == TokKind::Identifier) {
        take(n);
      }
    }
    consume_semicolon(n);
    return n;
  }

  std::uint32_t parse_throw() {
    const auto n = new_node("ThrowStatement");
    take_anon(n);
    if (cur().newline_before) fail("newline after throw");
    add(n, parse_expression());
    consume_semicolon(n);
    return n;
  }

  std::uint32_t parse_try() {
    const auto n = new_node("TryStatement");
    take_anon(n);
    add(n, node_child(parse_block("BlockStatement")));
    bool handled = false;
    if (at_keyword("catch")) {
      handled = true;
      const auto c = new_node("CatchClause");
      take_anon(c);
      if (at_punct("(")) {
        take(c);
        add(c, parse_binding_target());
        expect_punct(c, ")");
      }
      add(c, node_child(parse_block("BlockStatement")));
      add(n, node_child(c));
    }
    if (at_keyword("finally")) {
      handled = true;
      take_anon(n);
      add(n, node_child(parse_block("BlockStatement")));
    }
    if (!handled) fail("try without catch or finally");
    return n;
  }

  std::uint32_t parse_switch() {
    const auto n = new_node("SwitchStatement");
    take_anon(n);
    expect_punct(n, "(");
    add(n, parse_expression());
    expect_punct(n, ")");
    expect_punct(n, "{");
    while (!at_punct("}")) {
      const auto c = new_node("SwitchCase");
      if (at_keyword("case")) {
        take_anon(c);
        add(c, parse_expression());
      } else if (at_keyword("default")) {
        take_anon(c);
      } else {
        fail("expected case or default");
      }
      expect_punct(c, ":");
      while (!at_punct("}") && !at_keyword("case") && !at_keyword("default")) {
        if (at_eof()) fail("unterminated switch");
        add(c, parse_statement_list_item());
      }
      add(n, node_child(c));
    }
    take(n);
    return n;
  }

  std::uint32_t parse_for() {
    const auto n = new_node("ForStatement");
    take_anon(n);
    if (at_word("await")) take_anon(n);
    expect_punct(n, "(");
    if (at_punct(";")) {
      take(n);
      return finish_classic_for(n);
    }
    Child init;
    bool declaration = false;
    {
      NoInScope no_in(*this, true);
      if (at_keyword("var") || at_keyword("const") || is_let_declaration()) {
        init = node_child(parse_variable_declaration());
        declaration = true;
      } else {
        init = parse_expression();
      }
    }
    if (at_keyword("in") || at_word("of")) {
      type_of(n) = at_keyword("in") ? "ForInStatement" : "ForOfStatement";
      if (!declaration) to_pattern(init);
      add(n, init);
      take_anon(n);
      add(n, at_word("of") ? parse_assignment() : parse_expression());
      expect_punct(n, ")");
      add(n, parse_statement());
      return n;
    }
    add(n, init);
    expect_punct(n, ";");
    return finish_classic_for(n);
  }

  std::uint32_t finish_classic_for(std::uint32_t n) {
    if (!at_punct(";")) add(n, parse_expression());
    expect_punct(n, ";");
    if (!at_punct(")")) add(n, parse_expression());
    expect_punct(n, ")");
    add(n, parse_statement());
    return n;
  }

  // ---- functions and classes -------------------------------------------------

  std::uint32_t parse_function(bool declaration, bool async) {
    const auto n = new_node(declaration ? "FunctionDeclaration" : "FunctionExpression");
    if (async) take_anon(n);
    expect_keyword(n, "function");
    bool generator = false;
    if (at_punct("*")) {
      take(n);
      generator = true;
    }
    if (cur().kind == TokKind::Identifier) {
      take(n);
    } else if (declaration) {
      fail("function declaration requires a name");
    }
    FunctionScope scope(*this, async, generator);
    parse_params(n);
    add(n, node_child(parse_function_body()));
    return n;
  }

  void parse_params(std::uint32_t n) {
    expect_punct(n, "(");
    while (!at_punct(")")) {
      add(n, parse_binding_element());
      if (!at_punct(",")) break;
      take(n);
    }
    expect_punct(n, ")");
  }

  std::uint32_t parse_function_body() {
    NoInScope no_in(*this, false);
    return parse_block("BlockStatement");
  }

  std::uint32_t parse_class(bool declaration) {
    const auto n = new_node(declaration ? "ClassDeclaration" : "ClassExpression");
    take_anon(n);
    if (cur().kind == TokKind::Identifier && !at_word("extends")) {
      take(n);
    } else if (declaration && !at_keyword("extends")) {
      fail("class declaration requires a name");
    }
    if (at_keyword("extends")) {
      take_anon(n);
      add(n, parse_left_hand_side());
    }
    const auto body = new_node("ClassBody");
    expect_punct(body, "{");
    while (!at_punct("}")) {
      if (at_eof()) fail("unterminated class body");
      if (at_punct(";")) {
        take(body);
        continue;
      }
      add(body, node_child(parse_class_member()));
    }
    take(body);
    add(n, node_child(body));
    return n;
  }

  bool is_property_key_start(const Token& t) const {
    return t.kind == TokKind::Identifier || t.kind == TokKind::Keyword ||
           t.kind == TokKind::String || t.kind == TokKind::Number ||
           t.kind == TokKind::PrivateName || t.punct("[");
  }

  std::uint32_t parse_class_member() {
    const auto m = new_node("ClassMethod");
    if (at_word("static") && peek().punct("{")) {
      type_of(m) = "StaticBlock";
      take_anon(m);
      const auto block = parse_block("BlockStatement");
      for (auto c : nodes_[block].children) add(m, c);
      return m;
    }
    if (at_word("static") && is_property_key_start(peek()) && !peek().punct("(")) {
      take_anon(m);
    }
    bool async = false;
    bool generator = false;
    if (at_word("async") && !peek().punct("(") && !peek().punct("=") &&
        !peek().newline_before && (is_property_key_start(peek()) || peek().punct("*"))) {
      take_anon(m);
      async = true;
    }
    if (at_punct("*")) {
      take(m);
      generator = true;
    }
    if ((at_word("get") || at_word("set")) && is_property_key_start(peek()) &&
        !peek().punct("(")) {
      take_anon(m);
    }
    parse_property_key(m);
    if (at_punct("(")) {
      FunctionScope scope(*this, async, generator);
      parse_params(m);
      add(m, node_child(parse_function_body()));
      return m;
    }
    type_of(m) = "ClassProperty";
    if (at_punct("=")) {
      take(m);
      add(m, parse_assignment());
    }
    consume_semicolon(m);
    return m;
  }

  void parse_property_key(std::uint32_t owner) {
    if (at_punct("[")) {
      take(owner);
      add(owner, parse_assignment());
      expect_punct(owner, "]");
      return;
    }
    const Token& t = cur();
    if (t.kind == TokKind::Keyword) {
      // Reserved words used as property names are identifiers.
      add(owner, Child{Child::Kind::Token, static_cast<std::uint32_t>(pos_), false});
      keyword_as_identifier_.push_back(static_cast<std::uint32_t>(pos_));
      ++pos_;
      return;
    }
    if (t.kind == TokKind::Identifier || t.kind == TokKind::String ||
        t.kind == TokKind::Number || t.kind == TokKind::PrivateName) {
      take(owner);
      return;
    }
    fail("expected property key");
  }

  // ---- module syntax -------------------------------------------------------

  std::uint32_t parse_import() {
    const auto n = new_node("ImportDeclaration");
    take_anon(n);
    if (cur().kind == TokKind::String) {
      take(n);
      consume_semicolon(n);
      return n;
    }
    if (cur().kind == TokKind::Identifier) {
      const auto s = new_node("ImportDefaultSpecifier");
      take(s);
      add(n, node_child(s));
      if (at_punct(",")) take(n);
    }
    if (at_punct("*")) {
      const auto s = new_node("ImportNamespaceSpecifier");
      take(s);
      if (!at_word("as")) fail("expected 'as'");
      take_anon(s);
      take(s);
      add(n, node_child(s));
    } else if (at_punct("{")) {
      take(n);
      while (!at_punct("}")) {
        const auto s = new_node("ImportSpecifier");
        take_module_name(s);
        if (at_word("as")) {
          take_anon(s);
          take_module_name(s);
        }
        add(n, node_child(s));
        if (!at_punct(",")) break;
        take(n);
      }
      expect_punct(n, "}");
    }
    if (!at_word("from")) fail("expected 'from'");
    take_anon(n);
    if (cur().kind != TokKind::String) fail("expected module specifier");
    take(n);
    consume_semicolon(n);
    return n;
  }

  void take_module_name(std::uint32_t owner) {
    if (cur().kind == TokKind::Keyword) {
      keyword_as_identifier_.push_back(static_cast<std::uint32_t>(pos_));
    } else if (cur().kind != TokKind::Identifier && cur().kind != TokKind::String) {
      fail("expected name");
    }
    take(owner);
  }

  std::uint32_t parse_export() {
    const auto n = new_node("ExportNamedDeclaration");
    take_anon(n);
    if (at_keyword("default")) {
      type_of(n) = "ExportDefaultDeclaration";
      take_anon(n);
      if (at_keyword("function")) {
        add(n, node_child(parse_function_maybe_anonymous(false)));
      } else if (at_word("async") && peek().keyword("function")) {
        add(n, node_child(parse_function_maybe_anonymous(true)));
      } else if (at_keyword("class")) {
        add(n, node_child(parse_class(false)));
      } else {
        add(n, parse_assignment());
        consume_semicolon(n);
      }
      return n;
    }
    if (at_punct("*")) {
      type_of(n) = "ExportAllDeclaration";
      take(n);
      if (at_word("as")) {
        take_anon(n);
        take_module_name(n);
      }
      if (!at_word("from")) fail("expected 'from'");
      take_anon(n);
      take(n);
      consume_semicolon(n);
      return n;
    }
    if (at_punct("{")) {
      take(n);
      while (!at_punct("}")) {
        const auto s = new_node("ExportSpecifier");
        take_module_name(s);
        if (at_word("as")) {
          take_anon(s);
          take_module_name(s);
        }
        add(n, node_child(s));
        if (!at_punct(",")) break;
        take(n);
      }
      expect_punct(n, "}");
      if (at_word("from")) {
        take_anon(n);
        take(n);
      }
      consume_semicolon(n);
      return n;
    }
    add(n, parse_statement_list_item());
    return n;
  }

  std::uint32_t parse_function_maybe_anonymous(bool async) {
    if (peek(async ? 2 : 1).kind == TokKind::Identifier ||
        (peek(async ? 2 : 1).punct("*") && peek(async ? 3 : 2).kind == TokKind::Identifier)) {
      return parse_function(true, async);
    }
    return parse_function(false, async);
  }

  // ---- binding patterns ------------------------------------------------------

  Child parse_binding_target() {
    DepthGuard guard(*this);
    if (at_punct("[")) {
      const auto n = new_node("ArrayPattern");
      take(n);
      while (!at_punct("]")) {
        if (at_punct(",")) {
          take(n);
          continue;
        }
        add(n, parse_binding_element());
        if (!at_punct(",")) break;
        take(n);
      }
      expect_punct(n, "]");
      return node_child(n);
    }
    if (at_punct("{")) {
      const auto n = new_node("ObjectPattern");
      take(n);
      while (!at_punct("}")) {
        if (at_punct("...")) {
          const auto r = new_node("RestElement");
          take(r);
          add(r, parse_binding_target());
          add(n, node_child(r));
        } else {
          const auto p = new_node("ObjectProperty");
          const bool shorthand = cur().kind == TokKind::Identifier &&
                                 !peek().punct(":");
          if (shorthand) {
            const Child key = take_single();
            if (at_punct("=")) {
              const auto a = new_node("AssignmentPattern");
              add(a, key);
              take(a);
              add(a, parse_assignment());
              add(p, node_child(a));
            } else {
              add(p, key);
            }
          } else {
            parse_property_key(p);
            expect_punct(p, ":");
            add(p, parse_binding_element());
          }
          add(n, node_child(p));
        }
        if (!at_punct(",")) break;
        take(n);
      }
      expect_punct(n, "}");
      return node_child(n);
    }
    if (cur().kind == TokKind::Identifier) return take_single();
    fail("expected binding target");
  }

  Child parse_binding_element() {
    if (at_punct("...")) {
      const auto r = new_node("RestElement");
      take(r);
      add(r, parse_binding_target());
      return node_child(r);
    }
    Child target = parse_binding_target();
    if (at_punct("=")) {
      const auto a = new_node("AssignmentPattern");
      add(a, target);
      take(a);
      add(a, parse_assignment());
      return node_child(a);
    }
    return target;
  }

  // Reinterprets an expression as an assignment target.
  void to_pattern(Child c) {
    if (c.kind != Child::Kind::Node) return;
    PNode& n = nodes_[c.index];
    if (n.type == "ArrayExpression") {
      n.type = "ArrayPattern";
    } else if (n.type == "ObjectExpression") {
      n.type = "ObjectPattern";
    } else if (n.type == "AssignmentExpression") {
      n.type = "AssignmentPattern";
      if (!n.children.empty()) to_pattern(n.children.front());
      return;
    } else if (n.type == "SpreadElement") {
      n.type = "RestElement";
    } else if (n.type == "ObjectProperty") {
      if (!n.children.empty()) to_pattern(n.children.back());
      return;
    } else {
      return;
    }
    const auto children = n.children;  // `n` may be invalidated by recursion
    for (const Child& ch : children) to_pattern(ch);
  }

  // ---- expressions ---------------------------------------------------------

  Child parse_expression() {
    Child first = parse_assignment();
    if (!at_punct(",")) return first;
    const auto n = new_node("SequenceExpression");
    add(n, first);
    while (at_punct(",")) {
      take(n);
      add(n, parse_assignment());
    }
    return node_child(n);
  }

  bool is_assignment_operator(const Token& t) const {
    if (t.kind != TokKind::Punct) return false;
    static constexpr std::string_view ops[] = {"=",   "+=",  "-=",   "*=",  "/=",
                                               "%=",  "**=", "<<=",  ">>=", ">>>=",
                                               "&=",  "|=",  "^=",   "&&=", "||=",
                                               "?\?="};
    return std::find(std::begin(ops), std::end(ops), t.text) != std::end(ops);
  }

  // Index of the `)` matching the `(` at `open`, or the EOF index.
  std::size_t matching_paren(std::size_t open) const {
    int depth = 0;
    for (std::size_t i = open; i < toks_.size(); ++i) {
      const Token& t = toks_[i];
      if (t.kind != TokKind::Punct) continue;
      if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
      if (t.text == ")" || t.text == "]" || t.text == "}") {
        if (--depth == 0) return i;
      }
    }
    return toks_.size() - 1;
  }

  bool arrow_ahead() const {
    const Token& t = cur();
    if (t.kind == TokKind::Identifier && peek().punct("=>") && !peek().newline_before) {
      return true;
    }
    if (t.punct("(")) {
      const auto close = matching_paren(pos_);
      const Token& after = toks_[std::min(close + 1, toks_.size() - 1)];
      return after.punct("=>") && !after.newline_before;
    }
    return false;
  }

  Child parse_assignment() {
    DepthGuard guard(*this);
    if (at_word("async") && !peek().newline_before) {
      const std::size_t save = pos_;
      ++pos_;
      const bool arrow = arrow_ahead();
      pos_ = save;
      if (arrow) return node_child(parse_arrow(true));
    }
    if (arrow_ahead()) return node_child(parse_arrow(false));
    if (in_generator_ && at_word("yield")) return node_child(parse_yield());

    Child left = parse_conditional();
    if (is_assignment_operator(cur())) {
      const auto n = new_node("AssignmentExpression");
      if (cur().text == "=") to_pattern(left);
      add(n, left);
      take(n);
      add(n, parse_assignment());
      return node_child(n);
    }
    return left;
  }

  std::uint32_t parse_yield() {
    const auto n = new_node("YieldExpression");
    take_anon(n);
    if (at_punct("*")) {
      take(n);
      add(n, parse_assignment());
      return n;
    }
    const Token& t = cur();
    const bool ends = t.newline_before || at_eof() || t.punct(")") || t.punct("]") ||
                      t.punct("}") || t.punct(",") || t.punct(";") || t.punct(":") ||
                      (t.kind == TokKind::Keyword && t.text == "in");
    if (!ends) add(n, parse_assignment());
    return n;
  }

  std::uint32_t parse_arrow(bool async) {
    const auto n = new_node("ArrowFunctionExpression");
    if (async) take_anon(n);
    FunctionScope scope(*this, async, false);
    if (at_punct("(")) {
      parse_params(n);
    } else {
      take(n);
    }
    if (!at_punct("=>")) fail("expected '=>'");
    take(n);
    if (at_punct("{")) {
      add(n, node_child(parse_function_body()));
    } else {
      add(n, parse_assignment());
    }
    return n;
  }

  Child parse_conditional() {
    Child test = parse_binary(0);
    if (!at_punct("?")) return test;
    const auto n = new_node("ConditionalExpression");
    add(n, test);
    take(n);
    {
      NoInScope no_in(*this, false);
      add(n, parse_assignment());
    }
    expect_punct(n, ":");
    add(n, parse_assignment());
    return node_child(n);
  }

  int binary_precedence(const Token& t) const {
    if (t.kind == TokKind::Keyword) {
      if (t.text == "instanceof") return 8;
      if (t.text == "in") return no_in_ ? -1 : 8;
      return -1;
    }
    if (t.kind != TokKind::Punct) return -1;
    const auto op = t.text;
    if (op == "??") return 1;
    if (op == "||") return 2;
    if (op == "&&") return 3;
    if (op == "|") return 4;
    if (op == "^") return 5;
    if (op == "&") return 6;
    if (op == "==" || op == "!=" || op == "===" || op == "!==") return 7;
    if (op == "<" || op == ">" || op == "<=" || op == ">=") return 8;
    if (op == "<<" || op == ">>" || op == ">>>") return 9;
    if (op == "+" || op == "-") return 10;
    if (op == "*" || op == "/" || op == "%") return 11;
    if (op == "**") return 12;
    return -1;
  }

  Child parse_binary(int min_prec) {
    DepthGuard guard(*this);
    Child left = parse_unary();
    while (true) {
      const int prec = binary_precedence(cur());
      if (prec < 0 || prec < min_prec) break;
      const bool logical = at_punct("||") || at_punct("&&") || at_punct("??");
      const bool right_assoc = at_punct("**");
      const auto n = new_node(logical ? "LogicalExpression" : "BinaryExpression");
      add(n, left);
      take(n);
      add(n, parse_binary(right_assoc ? prec : prec + 1));
      left = node_child(n);
    }
    return left;
  }

  Child parse_unary() {
    DepthGuard guard(*this);
    const Token& t = cur();
    const bool unary_keyword =
        t.kind == TokKind::Keyword &&
        (t.text == "delete" || t.text == "void" || t.text == "typeof");
    const bool unary_punct = t.punct("!") || t.punct("~") || t.punct("+") || t.punct("-");
    if (unary_keyword || unary_punct) {
      const auto n = new_node("UnaryExpression");
      take(n, unary_keyword);
      add(n, parse_unary());
      return node_child(n);
    }
    if (t.punct("++") || t.punct("--")) {
      const auto n = new_node("UpdateExpression");
      take(n);
      add(n, parse_unary());
      return node_child(n);
    }
    if (in_async_ && at_word("await")) {
      const auto n = new_node("AwaitExpression");
      take_anon(n);
      add(n, parse_unary());
      return node_child(n);
    }
    Child operand = parse_left_hand_side();
    if ((at_punct("++") || at_punct("--")) && !cur().newline_before) {
      const auto n = new_node("UpdateExpression");
      add(n, operand);
      take(n);
      return node_child(n);
    }
    return operand;
  }

  Child parse_arguments_into(std::uint32_t n) {
    expect_punct(n, "(");
    NoInScope no_in(*this, false);
    while (!at_punct(")")) {
      if (at_punct("...")) {
        const auto s = new_node("SpreadElement");
        take(s);
        add(s, parse_assignment());
        add(n, node_child(s));
      } else {
        add(n, parse_assignment());
      }
      if (!at_punct(",")) break;
      take(n);
    }
    expect_punct(n, ")");
    return node_child(n);
  }

  Child parse_new() {
    DepthGuard guard(*this);
    const auto n = new_node("NewExpression");
    take_anon(n);
    if (at_punct(".")) {
      type_of(n) = "MetaProperty";
      take(n);
      if (cur().kind != TokKind::Identifier) fail("expected meta property");
      take(n);
      return node_child(n);
    }
    Child callee = at_keyword("new") ? parse_new() : parse_primary();
    // Member accesses bind tighter than `new`, calls do not.
    while (true) {
      if (at_punct(".")) {
        const auto m = new_node("MemberExpression");
        add(m, callee);
        take(m);
        take_member_name(m);
        callee = node_child(m);
      } else if (at_punct("[")) {
        const auto m = new_node("MemberExpression");
        add(m, callee);
        take(m);
        {
          NoInScope no_in(*this, false);
          add(m, parse_expression());
        }
        expect_punct(m, "]");
        callee = node_child(m);
      } else if (cur().kind == TokKind::Template) {
        const auto m = new_node("TaggedTemplateExpression");
        add(m, callee);
        take(m);
        callee = node_child(m);
      } else {
        break;
      }
    }
    add(n, callee);
    if (at_punct("(")) parse_arguments_into(n);
    return node_child(n);
  }

  void take_member_name(std::uint32_t m) {
    const Token& t = cur();
    if (t.kind == TokKind::Keyword) {
      keyword_as_identifier_.push_back(static_cast<std::uint32_t>(pos_));
      take(m);
      return;
    }
    if (t.kind == TokKind::Identifier || t.kind == TokKind::PrivateName) {
      take(m);
      return;
    }
    fail("expected property name");
  }

  Child parse_left_hand_side() {
    DepthGuard guard(*this);
    Child expr;
    if (at_keyword("new")) {
      expr = parse_new();
    } else if (at_keyword("import")) {
      const auto n = new_node(peek().punct(".") ? "MetaProperty" : "Import");
      take_anon(n);
      if (at_punct(".")) {
        take(n);
        take(n);
      }
      expr = node_child(n);
    } else {
      expr = parse_primary();
    }
    bool optional_chain = false;
    while (true) {
      if (at_punct(".")) {
        const auto m = new_node(optional_chain ? "OptionalMemberExpression" : "MemberExpression");
        add(m, expr);
        take(m);
        take_member_name(m);
        expr = node_child(m);
      } else if (at_punct("?.")) {
        optional_chain = true;
        if (peek().punct("(")) {
          const auto c = new_node("OptionalCallExpression");
          add(c, expr);
          take(c);
          parse_arguments_into(c);
          expr = node_child(c);
        } else if (peek().punct("[")) {
          const auto m = new_node("OptionalMemberExpression");
          add(m, expr);
          take(m);
          take(m);
          {
            NoInScope no_in(*this, false);
            add(m, parse_expression());
          }
          expect_punct(m, "]");
          expr = node_child(m);
        } else {
          const auto m = new_node("OptionalMemberExpression");
          add(m, expr);
          take(m);
          take_member_name(m);
          expr = node_child(m);
        }
      } else if (at_punct("[")) {
        const auto m = new_node(optional_chain ? "OptionalMemberExpression" : "MemberExpression");
        add(m, expr);
        take(m);
        {
          NoInScope no_in(*this, false);
          add(m, parse_expression());
        }
        expect_punct(m, "]");
        expr = node_child(m);
      } else if (at_punct("(")) {
        const auto c = new_node(optional_chain ? "OptionalCallExpression" : "CallExpression");
        add(c, expr);
        parse_arguments_into(c);
        expr = node_child(c);
      } else if (cur().kind == TokKind::Template) {
        const auto t = new_node("TaggedTemplateExpression");
        add(t, expr);
        take(t);
        expr = node_child(t);
      } else {
        break;
      }
    }
    return expr;
  }

  Child parse_primary() {
    DepthGuard guard(*this);
    const Token& t = cur();
    switch (t.kind) {
      case TokKind::Identifier:
      case TokKind::Number:
      case TokKind::String:
      case TokKind::Template:
      case TokKind::Regex:
      case TokKind::PrivateName:
        if (t.word("async") && peek().keyword("function") && !peek().newline_before) {
          return node_child(parse_function(false, true));
        }
        return take_single();
      case TokKind::Keyword:
        if (t.text == "this" || t.text == "null" || t.text == "true" ||
            t.text == "false" || t.text == "super") {
          return take_single();
        }
        if (t.text == "function") return node_child(parse_function(false, false));
        if (t.text == "class") return node_child(parse_class(false));
        if (t.text == "new") return parse_new();
        fail("unexpected keyword");
      case TokKind::Punct:
        if (t.text == "(") return node_child(parse_parenthesized());
        if (t.text == "[") return node_child(parse_array());
        if (t.text == "{") return node_child(parse_object());
        fail("unexpected token");
      case TokKind::EndOfFile:
        fail("unexpected end of input");
    }
    fail("unexpected token");
  }

  std::uint32_t parse_parenthesized() {
    const auto n = new_node("ParenthesizedExpression");
    take(n);
    NoInScope no_in(*this, false);
    add(n, parse_expression());
    expect_punct(n, ")");
    return n;
  }

  std::uint32_t parse_array() {
    const auto n = new_node("ArrayExpression");
    take(n);
    NoInScope no_in(*this, false);
    while (!at_punct("]")) {
      if (at_punct(",")) {
        take(n);
        continue;
      }
      if (at_punct("...")) {
        const auto s = new_node("SpreadElement");
        take(s);
        add(s, parse_assignment());
        add(n, node_child(s));
      } else {
        add(n, parse_assignment());
      }
      if (!at_punct(",")) break;
      take(n);
    }
    expect_punct(n, "]");
    return n;
  }

  std::uint32_t parse_object() {
    const auto n = new_node("ObjectExpression");
    take(n);
    NoInScope no_in(*this, false);
    while (!at_punct("}")) {
      if (at_eof()) fail("unterminated object literal");
      add(n, node_child(parse_object_member()));
      if (!at_punct(",")) break;
      take(n);
    }
    expect_punct(n, "}");
    return n;
  }

  std::uint32_t parse_object_member() {
    if (at_punct("...")) {
      const auto s = new_node("SpreadElement");
      take(s);
      add(s, parse_assignment());
      return s;
    }
    const auto p = new_node("ObjectProperty");
    bool async = false;
    bool generator = false;
    bool accessor = false;
    const Token& next = peek();
    const bool next_is_key = is_property_key_start(next) && !next.newline_before;
    if (at_word("async") && (next_is_key || next.punct("*"))) {
      take_anon(p);
      async = true;
    }
    if (at_punct("*")) {
      take(p);
      generator = true;
    }
    if (!async && !generator && (at_word("get") || at_word("set")) && next_is_key) {
      take_anon(p);
      accessor = true;
    }
    const bool shorthand_candidate =
        !async && !generator && !accessor && cur().kind == TokKind::Identifier &&
        (peek().punct(",") || peek().punct("}") || peek().punct("="));
    if (shorthand_candidate) {
      const Child key = take_single();
      if (at_punct("=")) {
        const auto a = new_node("AssignmentPattern");
        add(a, key);
        take(a);
        add(a, parse_assignment());
        add(p, node_child(a));
      } else {
        add(p, key);
      }
      return p;
    }
    parse_property_key(p);
    if (at_punct("(")) {
      type_of(p) = "ObjectMethod";
      FunctionScope scope(*this, async, generator);
      parse_params(p);
      add(p, node_child(parse_function_body()));
      return p;
    }
    if (async || generator || accessor) fail("expected method parameters");
    expect_punct(p, ":");
    add(p, parse_assignment());
    return p;
  }

  std::string_view src_;
  std::vector<Token> toks_;
  std::vector<Comment> comments_;
  std::vector<PNode> nodes_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  bool in_async_ = false;
  bool in_generator_ = false;
  bool no_in_ = false;

 public:
  std::vector<std::uint32_t> keyword_as_identifier_;
};

std::string_view leaf_type(const Token& t, bool anonymous, bool keyword_identifier) {
  if (anonymous) return {};
  switch (t.kind) {
    case TokKind::Identifier:
      return "Identifier";
    case TokKind::Number:
      return "NumericLiteral";
    case TokKind::String:
      return "StringLiteral";
    case TokKind::Template:
      return "TemplateLiteral";
    case TokKind::Regex:
      return "RegExpLiteral";
    case TokKind::PrivateName:
      return "PrivateName";
    case TokKind::Keyword:
      if (keyword_identifier) return "Identifier";
      if (t.text == "this") return "ThisExpression";
      if (t.text == "null") return "NullLiteral";
      if (t.text == "true" || t.text == "false") return "BooleanLiteral";
      if (t.text == "super") return "Super";
      return {};
    default:
      return {};
  }
}

// Converts parser nodes into the arena tree.
class TreeBuilder {
 public:
  TreeBuilder(std::string_view src, Parser& parser, const RoleTaxonomy& taxonomy)
      : src_(src), parser_(parser), nodes_(parser.nodes()), toks_(parser.tokens()),
        taxonomy_(taxonomy), lines_(src) {
    for (auto idx : parser.keyword_as_identifier_) keyword_ids_.push_back(idx);
    std::sort(keyword_ids_.begin(), keyword_ids_.end());
  }

  SyntaxTree build(std::uint32_t program) {
    compute_span(program);
    nodes_[program].begin = 0;
    nodes_[program].end = static_cast<std::uint32_t>(src_.size());
    for (std::uint32_t i = 0; i < parser_.comments().size(); ++i) attach_comment(program, i);
    SyntaxTree tree;
    const NodeId root = emit(tree, program, kNoNode);
    tree.set_root(root);
    return tree;
  }

 private:
  std::pair<std::uint32_t, std::uint32_t> child_span(const Child& c) const {
    switch (c.kind) {
      case Child::Kind::Token:
        return {toks_[c.index].begin, toks_[c.index].end};
      case Child::Kind::Comment:
        return {parser_.comments()[c.index].begin, parser_.comments()[c.index].end};
      case Child::Kind::Node:
        return {nodes_[c.index].begin, nodes_[c.index].end};
    }
    return {0, 0};
  }

  void compute_span(std::uint32_t id) {
    // Iterative post-order: nested expressions can be deep.
    std::vector<std::pair<std::uint32_t, bool>> stack{{id, false}};
    while (!stack.empty()) {
      auto [n, expanded] = stack.back();
      stack.pop_back();
      if (!expanded) {
        stack.emplace_back(n, true);
        for (const Child& c : nodes_[n].children) {
          if (c.kind == Child::Kind::Node) stack.emplace_back(c.index, false);
        }
        continue;
      }
      PNode& node = nodes_[n];
      if (node.children.empty()) {
        node.begin = node.end = 0;
        continue;
      }
      node.begin = child_span(node.children.front()).first;
      node.end = child_span(node.children.back()).second;
    }
  }

  void attach_comment(std::uint32_t root, std::uint32_t comment) {
    const Comment& c = parser_.comments()[comment];
    std::uint32_t node = root;
    while (true) {
      auto& children = nodes_[node].children;
      bool descended = false;
      for (const Child& ch : children) {
        if (ch.kind != Child::Kind::Node) continue;
        const auto [b, e] = child_span(ch);
        if (b < c.begin && c.end < e) {
          node = ch.index;
          descended = true;
          break;
        }
      }
      if (descended) continue;
      auto it = std::lower_bound(children.begin(), children.end(), c.begin,
                                 [&](const Child& ch, std::uint32_t offset) {
                                   return child_span(ch).first < offset;
                                 });
      children.insert(it, Child{Child::Kind::Comment, comment, false});
      return;
    }
  }

  NodeId emit_leaf(SyntaxTree& tree, std::string_view type, std::uint32_t begin,
                   std::uint32_t end, NodeId parent) {
    SyntaxNode leaf;
    leaf.internal_type = std::string(type);
    leaf.roles = taxonomy_.roles_for(type);
    leaf.value = std::string(src_.substr(begin, end - begin));
    leaf.start = lines_.at(begin);
    leaf.end = lines_.at(end);
    leaf.leaf = true;
    const NodeId id = tree.add(std::move(leaf));
    if (parent != kNoNode) tree.append_child(parent, id);
    return id;
  }

  NodeId emit(SyntaxTree& tree, std::uint32_t root, NodeId root_parent) {
    NodeId root_id = kNoNode;
    std::vector<std::pair<std::uint32_t, NodeId>> stack{{root, root_parent}};
    // Pre-order with explicit stack; children pushed in reverse.
    struct Item {
      Child child;
      NodeId parent;
    };
    std::vector<Item> work;
    work.push_back({Child{Child::Kind::Node, root, false}, root_parent});
    while (!work.empty()) {
      Item item = work.back();
      work.pop_back();
      const Child& c = item.child;
      if (c.kind == Child::Kind::Token) {
        const Token& t = toks_[c.index];
        const bool kw_ident =
            std::binary_search(keyword_ids_.begin(), keyword_ids_.end(), c.index);
        const auto type = leaf_type(t, c.anonymous, kw_ident);
        std::uint32_t begin = t.begin;
        std::uint32_t end = t.end;
        if (t.kind == TokKind::String && !c.anonymous && end - begin > 2) {
          ++begin;
          --end;
        }
        emit_leaf(tree, type, begin, end, item.parent);
        continue;
      }
      if (c.kind == Child::Kind::Comment) {
        const Comment& cm = parser_.comments()[c.index];
        emit_leaf(tree, cm.block ? "CommentBlock" : "CommentLine", cm.begin, cm.end,
                  item.parent);
        continue;
      }
      const PNode& pn = nodes_[c.index];
      SyntaxNode node;
      node.internal_type = std::string(pn.type);
      node.roles = taxonomy_.roles_for(pn.type);
      node.start = lines_.at(pn.begin);
      node.end = lines_.at(pn.end);
      const NodeId id = tree.add(std::move(node));
      if (item.parent != kNoNode) {
        tree.append_child(item.parent, id);
      } else {
        root_id = id;
      }
      for (auto it = pn.children.rbegin(); it != pn.children.rend(); ++it) {
        work.push_back({*it, id});
      }
    }
    return root_id;
  }

  std::string_view src_;
  Parser& parser_;
  std::vector<PNode>& nodes_;
  const std::vector<Token>& toks_;
  const RoleTaxonomy& taxonomy_;
  LineIndex lines_;
  std::vector<std::uint32_t> keyword_ids_;
};

}  // namespace

Language language_from_name(std::string_view name) {
  if (name == "javascript" || name == "js") return Language::JavaScript;
  throw Error("unsupported language: " + std::string(name));
}

std::string_view language_name(Language) { return "javascript"; }

void check_encoding(std::string_view content) {
  std::size_t i = 0;
  while (i < content.size()) {
    const auto c = static_cast<unsigned char>(content[i]);
    if (c == 0) throw EncodingError("NUL byte at offset " + std::to_string(i));
    std::size_t extra = 0;
    if (c < 0x80) {
      extra = 0;
    } else if ((c & 0xE0) == 0xC0 && c >= 0xC2) {
      extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
    } else if ((c & 0xF8) == 0xF0 && c <= 0xF4) {
      extra = 3;
    } else {
      throw EncodingError("invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    for (std::size_t k = 1; k <= extra; ++k) {
      if (i + k >= content.size() ||
          (static_cast<unsigned char>(content[i + k]) & 0xC0) != 0x80) {
        throw EncodingError("invalid UTF-8 continuation at offset " + std::to_string(i + k));
      }
    }
    i += extra + 1;
  }
}

SyntaxTree parse_file(std::string_view content, Language, const RoleTaxonomy& taxonomy) {
  check_encoding(content);
  Parser parser(content, detail::lex(content));
  const auto program = parser.parse_program();
  TreeBuilder builder(content, parser, taxonomy);
  return builder.build(program);
}

bool parses(std::string_view content, Language language) {
  try {
    parse_file(content, language);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace stylemine::syntax
