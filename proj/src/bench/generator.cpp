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


#include "stylemine/bench/generator.hpp"

#include <string>

#include "stylemine/forest/random.hpp"

namespace stylemine::bench {
namespace {

const std::vector<std::string> kNames{
    "elem",  "value", "name",   "data",    "options", "key",     "index",   "length",
    "type",  "owner", "result", "handler", "context", "target",  "selector", "args",
    "cache", "list",  "queue",  "style",   "node",    "events",  "fn",       "callback",
    "obj",   "prop",  "tmp",    "deferred", "matches", "parent", "ret",      "origFn"};
const std::vector<std::string> kObjects{"jQuery", "document", "window", "support", "Expr",
                                        "dataPriv", "rnothtmlwhite", "self"};
const std::vector<std::string> kMethods{
    "each",     "extend", "call",   "apply",   "push",    "slice",      "test",
    "replace",  "attr",   "removeClass", "getAttribute", "nodeName", "merge", "trigger",
    "contains", "access", "isFunction", "toLowerCase", "indexOf", "splice", "resolveWith"};
const std::vector<std::string> kWords{"string", "object", "function", "undefined", "px",
                                      "display", "none", "click", "fx",  "inprogress",
                                      "resolve", "ready",  "hidden",  "olddisplay"};
const std::vector<std::string> kCounters{"i", "j", "k"};
const std::vector<std::string> kOperators{" + ", " || ", " - ", " === "};
const std::vector<std::string> kComments{
    "Handle the case where the value is missing", "Support: IE <=11 only",
    "Convert to an array first",                   "Fast path for plain objects",
    "Remember the original state",                  "Skip elements that are detached"};

class Emitter {
 public:
  Emitter(const GeneratorStyle& style, std::uint64_t seed) : style_(style), rng_(seed) {}

  std::string file() {
    out_.clear();
    const auto statements = 4 + rng_.below(8);
    for (std::uint64_t i = 0; i < statements; ++i) {
      if (i > 0) out_ += "\n";
      top_level();
    }
    return out_;
  }

 private:
  bool chance(double p) { return rng_.uniform() < p; }
  const std::string& pick(const std::vector<std::string>& v) { return rng_.pick(v); }

  void indent() {
    const std::string unit(style_.indent_width, style_.tabs ? '\t' : ' ');
    for (int i = 0; i < depth_; ++i) out_ += unit;
  }
  void line_end() { out_ += "\n"; }
  void semi() {
    if (style_.semicolons) out_ += ";";
  }
  std::string open_paren() const { return style_.paren_padding ? "( " : "("; }
  std::string close_paren() const { return style_.paren_padding ? " )" : ")"; }
  std::string keyword(const char* kw) const {
    return std::string(kw) + (style_.space_after_keyword ? " " : "");
  }
  std::string quoted(const std::string& s) const {
    return std::string(1, style_.quote) + s + std::string(1, style_.quote);
  }

  void top_level() {
    const auto kind = rng_.below(4);
    if (kind == 0) {
      function_declaration();
    } else if (kind == 1) {
      indent();
      out_ += pick(kObjects) + ".fn." + pick(kMethods) + " = ";
      function_expression(2);
      semi();
      line_end();
    } else {
      statement(2);
    }
  }

  void function_declaration() {
    indent();
    out_ += "function " + pick(kNames) + "Hook";
    parameters();
    out_ += " ";
    block(3, true);
    line_end();
  }

  void parameters() {
    if (style_.space_before_function_paren) out_ += " ";
    const auto n = rng_.below(4);
    if (n == 0) {
      out_ += "()";
      return;
    }
    out_ += open_paren();
    for (std::uint64_t i = 0; i < n; ++i) {
      if (i) out_ += ", ";
      out_ += pick(kNames);
    }
    out_ += close_paren();
  }

  void function_expression(int budget) {
    out_ += "function";
    parameters();
    out_ += " ";
    block(budget, true);
  }

  // `{`, statements, `}` with the closing brace at the current indentation.
  void block(int budget, bool allow_return) {
    out_ += "{";
    line_end();
    ++depth_;
    const auto n = 1 + rng_.below(4);
    for (std::uint64_t i = 0; i < n; ++i) {
      if (i > 0 && chance(0.15)) line_end();
      statement(budget - 1);
    }
    if (allow_return && chance(0.6)) {
      indent();
      out_ += "return";
      if (chance(0.8)) {
        out_ += " ";
        expression(2);
      }
      semi();
      line_end();
    }
    --depth_;
    indent();
    out_ += "}";
  }

  void statement(int budget) {
    if (chance(0.12)) {
      indent();
      out_ += "// " + pick(kComments);
      line_end();
    }
    const auto kind = budget <= 0 ? rng_.below(3) : rng_.below(8);
    indent();
    switch (kind) {
      case 0:
        out_ += "var " + pick(kNames) + " = ";
        expression(2);
        semi();
        break;
      case 1:
        call_chain();
        semi();
        break;
      case 2:
        out_ += pick(kNames) + (chance(0.5) ? "." + pick(kNames) : "") + " = ";
        expression(2);
        semi();
        break;
      case 3:
      case 4:
        out_ += keyword("if") + open_paren();
        condition();
        out_ += close_paren() + " ";
        block(budget - 1, false);
        if (chance(0.3)) {
          out_ += " else ";
          block(budget - 1, false);
        }
        break;
      case 5: {
        const auto& i = pick(kCounters);
        out_ += keyword("for") + open_paren() + i + " = 0; " + i + " < " + pick(kNames) +
                ".length; " + i + "++" + close_paren() + " ";
        block(budget - 1, false);
        break;
      }
      case 6:
        out_ += pick(kObjects) + "." + pick(kMethods) + open_paren() + pick(kNames) + ", ";
        function_expression(budget - 1);
        out_ += close_paren();
        semi();
        break;
      default:
        out_ += "var " + pick(kNames) + " = ";
        object_literal();
        semi();
        break;
    }
    line_end();
  }

  void condition() {
    const auto kind = rng_.below(4);
    if (kind == 0) {
      out_ += "typeof " + pick(kNames) + " === " + quoted(pick(kWords));
    } else if (kind == 1) {
      out_ += "!" + pick(kNames);
    } else if (kind == 2) {
      out_ += pick(kNames) + " && " + pick(kNames) + "." + pick(kNames);
    } else {
      call_chain();
    }
  }

  void call_chain() {
    out_ += pick(chance(0.5) ? kObjects : kNames);
    const auto links = 1 + rng_.below(2);
    for (std::uint64_t i = 0; i < links; ++i) {
      out_ += "." + pick(kMethods);
      arguments();
    }
  }

  void arguments() {
    const auto n = rng_.below(3);
    if (n == 0) {
      out_ += "()";
      return;
    }
    out_ += open_paren();
    for (std::uint64_t i = 0; i < n; ++i) {
      if (i) out_ += ", ";
      primary();
    }
    out_ += close_paren();
  }

  void primary() {
    const auto kind = rng_.below(5);
    if (kind == 0) {
      out_ += quoted(pick(kWords));
    } else if (kind == 1) {
      out_ += std::to_string(rng_.below(20));
    } else if (kind == 2) {
      out_ += pick(kNames) + "." + pick(kNames);
    } else {
      out_ += pick(kNames);
    }
  }

  void expression(int budget) {
    const auto kind = budget <= 0 ? rng_.below(2) : rng_.below(6);
    switch (kind) {
      case 0:
        primary();
        break;
      case 1:
        primary();
        out_ += pick(kOperators);
        primary();
        break;
      case 2:
        call_chain();
        break;
      case 3:
        out_ += style_.bracket_padding ? "[ " : "[";
        primary();
        out_ += ", ";
        primary();
        out_ += style_.bracket_padding ? " ]" : "]";
        break;
      case 4:
        out_ += pick(kNames) + " ? ";
        primary();
        out_ += " : ";
        primary();
        break;
      default:
        out_ += "!!" + pick(kNames);
        break;
    }
  }

  void object_literal() {
    const auto n = rng_.below(4);
    if (n == 0) {
      out_ += "{}";
      return;
    }
    out_ += "{";
    line_end();
    ++depth_;
    for (std::uint64_t i = 0; i < n; ++i) {
      indent();
      out_ += pick(kNames) + ": ";
      expression(1);
      if (i + 1 < n) out_ += ",";
      line_end();
    }
    --depth_;
    indent();
    out_ += "}";
  }

  const GeneratorStyle& style_;
  forest::Rng rng_;
  std::string out_;
  int depth_ = 0;
};

}  // namespace

std::vector<cli::SourceFile> generate_corpus(std::size_t n_files, std::uint64_t seed,
                                             const GeneratorStyle& style) {
  std::vector<cli::SourceFile> out;
  for (std::size_t i = 0; i < n_files; ++i) {
    Emitter emitter(style, seed * 1000003 + i);
    char name[48];
    std::snprintf(name, sizeof name, "synthetic/file%04zu.js", i);
    out.push_back({name, emitter.file()});
  }
  return out;
}

}  // namespace stylemine::bench
