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

#include <json.hpp>

#include "fixtures.hpp"
#include "stylemine/apply/apply.hpp"
#include "stylemine/apply/repository.hpp"
#include "stylemine/bench/defects.hpp"
#include "stylemine/bench/generator.hpp"
#include "stylemine/errors.hpp"
#include "stylemine/features/labels.hpp"
#include "stylemine/syntax/parser.hpp"
#include "stylemine/syntax/tree_ops.hpp"

using namespace stylemine;
using apply::Prediction;
using features::Atom;
using features::CompoundLabel;

namespace {

/// Index of the format token after the `n`-th semantic token spelled `text`.
std::size_t gap_after(const syntax::TokenStream& stream, std::string_view text, int n = 0) {
  for (std::size_t i = 0; i + 1 < stream.tokens.size(); ++i) {
    if (stream.tokens[i].is_semantic() && stream.tokens[i].value == text && n-- == 0) return i + 1;
  }
  FAIL("token not found: " << text);
  return 0;
}

Prediction predict(const syntax::TokenStream& stream, std::size_t gap, CompoundLabel y_hat,
                   double confidence = 0.95, std::uint32_t hash = 1) {
  const auto labels = features::label_gaps(stream);
  Prediction p;
  p.gap = gap;
  p.position = stream.tokens[gap].start;
  for (const auto& g : labels) {
    if (g.token == gap) p.y = g.label;
  }
  p.y_hat = std::move(y_hat);
  p.agreement = p.y == *p.y_hat;
  p.confidence = confidence;
  p.rule_hash = hash;
  return p;
}

CompoundLabel label(std::string_view text) { return CompoundLabel::parse(text); }

std::string fix_and_apply(const syntax::TokenStream& stream, const std::vector<Prediction>& ps) {
  return apply::apply_fixes(stream.source, apply::generate_fixes(stream, ps));
}

}  // namespace

TEST_CASE("quote pair resolution") {
  const auto stream = syntax::tokenize("x = \"a\";\n");
  const auto left = gap_after(stream, "=");
  const auto right = left + 2;
  REQUIRE(stream.tokens[left + 1].value == "a");

  SUBCASE("the more confident side wins") {
    auto out = apply::resolve_quote_pairs(
        {predict(stream, left, label("SPACE+QUOTE_SINGLE"), 0.97),
         predict(stream, right, label("QUOTE_DOUBLE"), 0.93)},
        stream);
    REQUIRE(out.size() == 2);
    CHECK(*out[0].y_hat == label("SPACE+QUOTE_SINGLE"));
    CHECK(*out[1].y_hat == label("QUOTE_SINGLE"));
    CHECK_FALSE(out[1].agreement);
    CHECK(fix_and_apply(stream, out) == "x = 'a';\n");
  }
  SUBCASE("the right side can win") {
    auto out = apply::resolve_quote_pairs(
        {predict(stream, left, label("SPACE+QUOTE_SINGLE"), 0.93),
         predict(stream, right, label("QUOTE_DOUBLE"), 0.97)},
        stream);
    CHECK(*out[0].y_hat == label("SPACE+QUOTE_DOUBLE"));
    CHECK(out[0].agreement);
  }
  SUBCASE("agreeing sides are unchanged") {
    const std::vector<Prediction> in = {predict(stream, left, label("SPACE+QUOTE_SINGLE")),
                                        predict(stream, right, label("QUOTE_SINGLE"))};
    const auto out = apply::resolve_quote_pairs(in, stream);
    REQUIRE(out.size() == 2);
    CHECK(*out[0].y_hat == *in[0].y_hat);
    CHECK(*out[1].y_hat == *in[1].y_hat);
  }
  SUBCASE("a one-sided prediction is mirrored") {
    const auto out =
        apply::resolve_quote_pairs({predict(stream, left, label("SPACE+QUOTE_SINGLE"), 0.97, 7)}, stream);
    REQUIRE(out.size() == 2);
    const auto& partner = out[0].gap == right ? out[0] : out[1];
    CHECK(partner.gap == right);
    CHECK(partner.mirrored);
    CHECK(*partner.y_hat == label("QUOTE_SINGLE"));
    CHECK(partner.rule_hash == 7);
    CHECK(fix_and_apply(stream, out) == "x = 'a';\n");
  }
  SUBCASE("no literal keeps differing delimiters") {
    const auto many = syntax::tokenize("f( \"a\", 'b', \"c\" );\n");
    const auto labels = features::label_gaps(many);
    std::vector<Prediction> in;
    double c = 0.93;
    for (const auto& g : labels) {
      const auto& y = g.label.atoms;
      if (y.empty()) continue;
      auto flipped = g.label;
      bool quoted = false;
      for (auto& a : flipped.atoms) {
        if (a == Atom::QuoteDouble || a == Atom::QuoteSingle) {
          a = (g.token % 4 == 1) ? Atom::QuoteSingle : Atom::QuoteDouble;
          quoted = true;
        }
      }
      if (quoted) in.push_back(predict(many, g.token, flipped, c += 0.01));
    }
    const auto out = apply::resolve_quote_pairs(in, many);
    const auto fixed = syntax::tokenize(fix_and_apply(many, out));
    for (std::size_t i = 1; i + 1 < fixed.tokens.size(); ++i) {
      const auto& t = fixed.tokens[i];
      if (!t.is_semantic() || fixed.tree.node(t.node).internal_type != "StringLiteral") continue;
      CHECK(fixed.tokens[i - 1].value.back() == fixed.tokens[i + 1].value.front());
    }
  }
}

TEST_CASE("fix rendering") {
  SUBCASE("delete one space") {
    const auto s = syntax::tokenize("a = b;\n");
    const auto fixes = apply::generate_fixes(s, {predict(s, gap_after(s, "="), label("NOOP"))});
    REQUIRE(fixes.size() == 1);
    CHECK(fixes[0].replacement.empty());
    CHECK(fixes[0].end - fixes[0].begin == 1);
    CHECK(apply::apply_fixes(s.source, fixes) == "a =b;\n");
  }
  SUBCASE("break after an opening brace") {
    const auto s = syntax::tokenize(testing::kIsArraySnippet);
    const auto gap = gap_after(s, "{", 1);
    REQUIRE(s.tokens[gap + 1].value == "return");
    const auto p = predict(s, gap, label("NEWLINE+TAB_INDENT_INC"));
    CHECK(p.y == CompoundLabel::noop());
    const auto fixes = apply::generate_fixes(s, {p});
    REQUIRE(fixes.size() == 1);
    CHECK(fixes[0].replacement == "\n\t\t");
    CHECK(fixes[0].first_line == 2);
  }
  SUBCASE("double to single quote") {
    const auto s = syntax::tokenize("x = \"a\";\n");
    const auto fixes =
        apply::generate_fixes(s, {predict(s, gap_after(s, "a"), label("QUOTE_SINGLE"))});
    REQUIRE(fixes.size() == 1);
    CHECK(fixes[0].replacement == "'");
    CHECK(fixes[0].end - fixes[0].begin == 1);
  }
  SUBCASE("unrenderable decrease is dropped") {
    const auto s = syntax::tokenize("a;\nb;\n");
    CHECK(apply::generate_fixes(s, {predict(s, gap_after(s, ";"), label("NEWLINE+TAB_INDENT_DEC"))})
              .empty());
  }
  SUBCASE("agreements produce nothing") {
    const auto s = syntax::tokenize("a = b;\n");
    CHECK(apply::generate_fixes(s, {predict(s, gap_after(s, "="), label("SPACE"))}).empty());
  }
}

TEST_CASE("syntax safety") {
  auto verify = [](const std::string& src, std::string_view after, const char* y_hat, int n = 0) {
    const auto s = syntax::tokenize(src);
    const auto fixes = apply::generate_fixes(s, {predict(s, gap_after(s, after, n), label(y_hat))});
    REQUIRE(fixes.size() == 1);
    return apply::verify_ast_safety(s, fixes).size();
  };
  CHECK(verify("function f( value ) {\n\treturn value;\n}\n", "return", "NOOP") == 0);
  CHECK(verify("f( a, b );\n", ",", "NOOP") == 1);
  CHECK(verify("var x = \"a\";\n", "=", "SPACE+QUOTE_SINGLE") == 0);
  CHECK(verify("var a = b in c;\n", "in", "NOOP") == 0);
  CHECK(verify("var a = b - -c;\n", "-", "NOOP") == 0);
  // Padding inside a call has no syntactic weight.
  CHECK(verify("if ( isArray (value) ) {}\n", "isArray", "NOOP") == 1);

  SUBCASE("quote swaps are checked as a pair") {
    const auto s = syntax::tokenize("var x = \"a\";\n");
    const auto ps = apply::resolve_quote_pairs({predict(s, gap_after(s, "="), label("SPACE+QUOTE_SINGLE"))}, s);
    const auto kept = apply::verify_ast_safety(s, apply::generate_fixes(s, ps));
    CHECK(kept.size() == 2);
    const auto fixed = apply::apply_fixes(s.source, kept);
    CHECK(fixed == "var x = 'a';\n");
    CHECK(syntax::structurally_equal(syntax::parse_file(fixed), s.tree));
  }
  SUBCASE("a quote inside the literal blocks the swap") {
    const auto s = syntax::tokenize("var x = \"it's\";\n");
    const auto ps = apply::resolve_quote_pairs({predict(s, gap_after(s, "="), label("SPACE+QUOTE_SINGLE"))}, s);
    CHECK(apply::verify_ast_safety(s, apply::generate_fixes(s, ps)).empty());
  }
}

TEST_CASE("isArray snippet with the jQuery model") {
  const auto& model = testing::jquery_model().model;
  SUBCASE("the forest predicts a break after the one-line block's brace") {
    const auto s = syntax::tokenize(testing::kIsArraySnippet);
    const auto gap = gap_after(s, "{", 1);
    const auto labels = features::label_gaps(s);
    const auto tl = features::token_label_indices(s, model.vocabulary, labels);
    const auto x = rules::dense(features::gap_features(s, gap, model.scheme, tl), model.scheme.width());
    REQUIRE(model.forest);
    CHECK(model.vocabulary.label(forest::predict(*model.forest, x)) == label("NEWLINE+TAB_INDENT_INC"));
  }
  SUBCASE("the clean version draws fewer suggestions") {
    const auto clean = apply::suggest(model, "a.js", testing::kIsArraySnippetClean, std::nullopt);
    const auto dirty = apply::suggest(model, "a.js", testing::kIsArraySnippetDefects, std::nullopt);
    CHECK(clean.size() < dirty.size());
  }
  SUBCASE("seeded defects") {
    const std::string defects = testing::kIsArraySnippetDefects;
    const auto out = apply::suggest(model, "a.js", defects, std::nullopt);
    const auto fixed = apply::apply_suggestions(defects, out);
    CHECK(syntax::structurally_equal(syntax::parse_file(fixed), syntax::parse_file(defects)));
    // Call padding, the quotes and the space indentation are restored.
    CHECK(fixed.find("function classesToArray( value ) {\n") == 0);
    CHECK(fixed.find("isArray( value )") != std::string::npos);
    CHECK(fixed.find("\"string\"") != std::string::npos);
    CHECK(fixed.find("\t\treturn value.match(") != std::string::npos);
    CHECK(fixed.find("rnothtml") != std::string::npos);
  }
}

TEST_CASE("analysis on an in-style file") {
  const auto& model = testing::synthetic_model().model;
  std::size_t total = 0;
  std::size_t agree = 0;
  for (const auto& f : bench::generate_corpus(10, 1234)) {
    for (const auto& p : apply::analyze_file(model, f.content).predictions) {
      ++total;
      agree += p.agreement;
    }
  }
  REQUIRE(total > 500);
  CHECK(static_cast<double>(agree) / total >= 0.99);

  SUBCASE("no rules, no predictions") {
    apply::Model empty = model;
    empty.rules.rules.clear();
    CHECK(apply::analyze_file(empty, bench::generate_corpus(1, 3)[0].content).predictions.empty());
  }
  SUBCASE("blacklisted rules never match") {
    const auto content = bench::generate_corpus(1, 3)[0].content;
    const auto first = apply::analyze_file(model, content).predictions;
    REQUIRE_FALSE(first.empty());
    apply::AnalysisOptions o;
    o.blacklist.insert(first[0].rule_hash);
    for (const auto& p : apply::analyze_file(model, content, o).predictions) {
      CHECK(p.rule_hash != first[0].rule_hash);
    }
  }
  SUBCASE("size cap") {
    apply::AnalysisOptions o;
    o.max_bytes = 10;
    CHECK_THROWS_AS(apply::analyze_file(model, "var abcdefgh = 1;\n", o), SizeExceeded);
  }
  SUBCASE("parse errors surface") {
    CHECK_THROWS_AS(apply::analyze_file(model, "var = ;\n"), ParseError);
  }
}

TEST_CASE("seeded defects are restored") {
  const auto& model = testing::synthetic_model().model;
  const auto files = bench::generate_corpus(30, 99);
  std::size_t tried = 0;
  std::size_t restored = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const auto kind = static_cast<bench::DefectKind>(i % 4);
    bench::Defect d;
    try {
      d = bench::seed_defect(files[i], kind, i);
    } catch (const NoEligibleSite&) {
      continue;
    }
    ++tried;
    apply::MemoryRepository repo;
    repo.put("base", d.path, d.original);
    repo.put("head", d.path, d.mutated);
    const auto report = apply::analyze_changeset(model, repo, repo.diff("base", "head"));
    for (const auto& s : report.suggestions) {
      for (auto line = s.line_start; line <= s.line_end; ++line) CHECK(d.changed_lines.count(line));
    }
    if (report.suggestions.size() == 1 &&
        apply::apply_suggestions(d.mutated, report.suggestions) == d.original) {
      ++restored;
    }
  }
  REQUIRE(tried >= 20);
  MESSAGE("restored " << restored << " of " << tried);
  CHECK(static_cast<double>(restored) / tried >= 0.8);
}

TEST_CASE("changesets") {
  const auto& model = testing::synthetic_model().model;
  const auto file = bench::generate_corpus(1, 5)[0];
  SUBCASE("empty changeset") {
    apply::MemoryRepository repo;
    repo.put("a", file.path, file.content);
    repo.put("b", file.path, file.content);
    const auto cs = repo.diff("a", "b");
    CHECK(apply::analyze_changeset(model, repo, cs).suggestions.empty());
  }
  SUBCASE("only changed lines get suggestions") {
    // Break the style on every line, then mark only some lines as changed.
    std::string broken = file.content;
    for (std::size_t pos = 0; (pos = broken.find("( ", pos)) != std::string::npos;) broken.erase(pos + 1, 1);
    const auto all = apply::suggest(model, file.path, broken, std::nullopt);
    REQUIRE(all.size() >= 4);
    std::set<std::uint32_t> lines;
    for (std::size_t i = 0; i < all.size(); i += 2) {
      for (auto l = all[i].line_start; l <= all[i].line_end; ++l) lines.insert(l);
    }
    const auto scoped = apply::suggest(model, file.path, broken, lines);
    CHECK_FALSE(scoped.empty());
    for (const auto& s : scoped) {
      for (auto l = s.line_start; l <= s.line_end; ++l) CHECK(lines.count(l));
    }
  }
  SUBCASE("unparseable and oversized files are skipped") {
    apply::MemoryRepository repo;
    repo.put("a", "x.js", "");
    repo.put("b", "x.js", "var = ;\n");
    repo.put("a", "y.js", "");
    repo.put("b", "y.js", file.content);
    repo.put("b", "z.txt", "var = ;\n");
    apply::AnalysisOptions o;
    o.max_bytes = 16;
    const auto report = apply::analyze_changeset(model, repo, repo.diff("a", "b"), o);
    REQUIRE(report.skipped.size() == 2);
    CHECK(report.skipped[0].path == "x.js");
    CHECK(report.skipped[1].path == "y.js");
  }
  SUBCASE("missing revision") {
    apply::MemoryRepository repo;
    repo.put("a", "x.js", "");
    CHECK_THROWS_AS(repo.check_revision("nope"), RevisionNotFound);
  }
}

TEST_CASE("suggestion output") {
  const auto& model = testing::synthetic_model().model;
  std::string broken = bench::generate_corpus(1, 8)[0].content;
  for (std::size_t pos = 0; (pos = broken.find("( ", pos)) != std::string::npos;) broken.erase(pos + 1, 1);
  const auto a = apply::suggest(model, "f.js", broken, std::nullopt);
  const auto b = apply::suggest(model, "f.js", broken, std::nullopt);
  REQUIRE_FALSE(a.empty());
  CHECK(apply::format_json(a) == apply::format_json(b));
  CHECK(apply::format_text(a) == apply::format_text(b));

  std::set<std::uint32_t> hashes;
  for (const auto& r : model.rules.rules) hashes.insert(r.hash);
  const auto doc = nlohmann::json::parse(apply::format_json(a));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == a.size());
  for (const auto& s : doc) {
    CHECK(s.size() == 7);
    CHECK(s.at("file") == "f.js");
    CHECK(s.at("line_start").get<int>() <= s.at("line_end").get<int>());
    CHECK(s.at("original") != s.at("suggestion"));
    const auto hash = s.at("rule_hash").get<std::string>();
    CHECK(hash.size() == 8);
    CHECK(hashes.count(rules::parse_hash(hash)));
    CHECK(s.at("confidence").get<double>() >= 0.92);
  }
  const auto text = apply::format_text(a);
  CHECK(text.rfind("[", 0) == 0);
  CHECK(text.find("[" + doc[0].at("rule_hash").get<std::string>() + "]") < text.find('\n'));
  CHECK(text.find("\n-") != std::string::npos);
  CHECK(text.find("\n+") != std::string::npos);
}
