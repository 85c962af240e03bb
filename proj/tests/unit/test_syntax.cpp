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


#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "stylemine/bench/generator.hpp"
#include "stylemine/errors.hpp"
#include "stylemine/forest/random.hpp"
#include "stylemine/syntax/parser.hpp"
#include "stylemine/syntax/token_stream.hpp"
#include "stylemine/syntax/tree_ops.hpp"

using namespace stylemine;
using namespace stylemine::syntax;

namespace {

NodeId find_kind(const SyntaxTree& tree, std::string_view kind) {
  for (NodeId i = 0; i < tree.size(); ++i) {
    if (tree.node(i).internal_type == kind) return i;
  }
  return kNoNode;
}

std::vector<std::pair<std::string, bool>> stream_view(const TokenStream& s) {
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& t : s.tokens) out.emplace_back(t.value, t.is_format());
  return out;
}

}  // namespace

TEST_CASE("minimal declaration spans its bytes") {
  const auto tree = parse_file("var a;");
  const auto decl = find_kind(tree, "VariableDeclaration");
  REQUIRE(decl != kNoNode);
  CHECK(tree.node(decl).start.offset == 0);
  CHECK(tree.node(decl).end.offset == 6);
  CHECK(tree.is_ancestor(tree.root(), decl));
}

TEST_CASE("if statement carries IF and STATEMENT roles") {
  const auto tree = parse_file("if (x) {}");
  const auto& taxonomy = RoleTaxonomy::javascript();
  const auto node = find_kind(tree, "IfStatement");
  REQUIRE(node != kNoNode);
  const auto names = taxonomy.names(tree.node(node).roles);
  CHECK(std::set<std::string>(names.begin(), names.end()) ==
        std::set<std::string>{"IF", "STATEMENT"});
}

TEST_CASE("invalid input is rejected") {
  CHECK_THROWS_AS(parse_file("var a = ;"), ParseError);
  CHECK_FALSE(parses("var a = ;"));
  CHECK_THROWS_AS(parse_file("var a = \"\xff\";"), EncodingError);
  CHECK_THROWS_AS(parse_file(std::string("var a\0 = 1;", 11)), EncodingError);
}

TEST_CASE("format tokens alternate with semantic tokens") {
  using V = std::vector<std::pair<std::string, bool>>;
  CHECK(stream_view(tokenize("a=b")) ==
        V{{"a", false}, {"", true}, {"=", false}, {"", true}, {"b", false}});
  CHECK(stream_view(tokenize("a = b")) ==
        V{{"a", false}, {" ", true}, {"=", false}, {" ", true}, {"b", false}});
}

TEST_CASE("string quotes live in format tokens") {
  const auto s = tokenize("x = 'ab';");
  const auto it = std::find_if(s.tokens.begin(), s.tokens.end(),
                               [](const VirtualToken& t) { return t.value == "ab"; });
  REQUIRE(it != s.tokens.end());
  CHECK(s.tree.node(it->node).internal_type == "StringLiteral");
  CHECK((it - 1)->value == " '");
  CHECK((it + 1)->value == "'");
}

TEST_CASE("positions are 1-based lines and columns") {
  const auto s = tokenize("a\n  b;");
  const auto& b = s.tokens[2];
  CHECK(b.value == "b");
  CHECK(b.start.line == 2);
  CHECK(b.start.column == 3);
  CHECK(b.start.offset == 4);
}

TEST_CASE("reconstruction is byte exact") {
  SUBCASE("language corners") {
    const std::vector<std::string> sources = {
        "",
        "\n\n",
        "// only a comment",
        "/* a */ x = `t ${ y + `n${z}` } u`;\n",
        "a = b / c / d; e = /re[/]x/gi.test( f );\r\n",
        "class A extends B { #p = 1; static m() { return this.#p; } get x() {} }\n",
        "async function* g() { for await ( const x of y ) { yield* x; } }\n",
        "label: for (;;) { break label; }\n",
        "x = a ?? b?.c?.[ d ]?.( e );\n",
        "const { a, b: [ c = 1, ...d ], ...e } = f;\n",
        "x = { 'a': 1, \"b\": 2, [ c ]: 3, d() {}, get e() { return 1; } };\n",
        "if ( a ) b(); else if ( c ) d(); else { e(); }\n",
        "var s = \"it's\", t = 'say \"hi\"', u = '';\n",
        "x = a\n++b\n",
        "y = () => ({ a: 1 });\n",
        "\tswitch ( x ) {\n\tcase 1:\n\t\tbreak;\n\tdefault:\n\t}\n",
        "try { a(); } catch { b(); } finally { c(); }\n",
        "z = 0x1F + 1e-3 + .5 + 1_000n;\n",
    };
    for (const auto& src : sources) {
      CAPTURE(src);
      CHECK(tokenize(src).reconstruct() == src);
    }
  }
  SUBCASE("generated corpus") {
    for (const auto& f : bench::generate_corpus(20, 11)) {
      CAPTURE(f.path);
      CHECK(tokenize(f.content).reconstruct() == f.content);
    }
  }
}

TEST_CASE("lowest common ancestor") {
  const auto tree = parse_file("function f( a ) { return a + 1; }");
  const auto leaves = tree.leaves();
  SUBCASE("identity") {
    for (const auto l : leaves) CHECK(lowest_common_ancestor(tree, l, l) == l);
  }
  SUBCASE("siblings give the parent") {
    const auto sum = find_kind(tree, "BinaryExpression");
    REQUIRE(sum != kNoNode);
    const auto& kids = tree.node(sum).children;
    REQUIRE(kids.size() >= 2);
    CHECK(lowest_common_ancestor(tree, kids.front(), kids.back()) == sum);
  }
  SUBCASE("random trees against ancestor-set intersection") {
    forest::Rng rng(5);
    for (int round = 0; round < 50; ++round) {
      SyntaxTree t;
      SyntaxNode root;
      root.internal_type = "Root";
      t.set_root(t.add(root));
      const auto n = 2 + rng.below(40);
      for (std::uint64_t i = 1; i < n; ++i) {
        SyntaxNode node;
        node.internal_type = "N";
        const auto id = t.add(node);
        t.append_child(static_cast<NodeId>(rng.below(id)), id);
      }
      for (int q = 0; q < 20; ++q) {
        const auto a = static_cast<NodeId>(rng.below(n));
        const auto b = static_cast<NodeId>(rng.below(n));
        const auto pa = t.path_from_root(a);
        const auto pb = t.path_from_root(b);
        NodeId expected = t.root();
        std::size_t best_depth = 0;
        const std::set<NodeId> sa(pa.begin(), pa.end());
        for (const auto c : pb) {
          if (sa.count(c) && t.depth(c) >= best_depth) {
            best_depth = t.depth(c);
            expected = c;
          }
        }
        CHECK(lowest_common_ancestor(t, a, b) == expected);
      }
    }
  }
}

TEST_CASE("enclosing parseable block") {
  SUBCASE("standalone statement line") {
    const std::string src = "a();\nb( 1 );\nc();\n";
    const auto tree = parse_file(src);
    const auto id = enclosing_parseable_block(tree, src, 2);
    CHECK(tree.node(id).internal_type == "ExpressionStatement");
    CHECK(tree.node(id).start.line == 2);
  }
  SUBCASE("object literal line climbs to a parseable statement") {
    const std::string src = "var o = {\n\ta: 1,\n\tb: 2\n};\n";
    const auto tree = parse_file(src);
    const auto id = enclosing_parseable_block(tree, src, 2);
    const auto& node = tree.node(id);
    CHECK(parses(src.substr(node.start.offset, node.end.offset - node.start.offset)));
    // Bottom-up oracle: no smaller ancestor of the line's node parses alone.
    const auto line_begin = static_cast<std::uint32_t>(src.find("a: 1,"));
    const auto covering = covering_node(tree, line_begin, line_begin + 5);
    for (auto n = covering; n != id && n != kNoNode; n = tree.node(n).parent) {
      const auto& c = tree.node(n);
      CHECK_FALSE(parses(src.substr(c.start.offset, c.end.offset - c.start.offset)));
    }
  }
  SUBCASE("one-line file") {
    const std::string src = "x";
    const auto tree = parse_file(src);
    const auto id = enclosing_parseable_block(tree, src, 1);
    CHECK(tree.is_ancestor(id, tree.leaves().front()));
  }
}

TEST_CASE("structural equality ignores positions and formatting") {
  CHECK(structurally_equal(parse_file("if(a){b();}"), parse_file("if ( a ) {\n\tb();\n}\n")));
  CHECK(structurally_equal(parse_file("x = 'a';"), parse_file("x = \"a\";")));
  CHECK_FALSE(structurally_equal(parse_file("function f() { return1; }"),
                                  parse_file("function f() { return 1; }")));
  CHECK_FALSE(structurally_equal(parse_file("a = b;"), parse_file("a = c;")));
}
