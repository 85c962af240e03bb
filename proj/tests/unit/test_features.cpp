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
#include <cmath>
#include <map>
#include <numeric>

#include "fixtures.hpp"
#include "stylemine/errors.hpp"
#include "stylemine/features/anova.hpp"
#include "stylemine/features/labels.hpp"
#include "stylemine/features/scheme.hpp"
#include "stylemine/features/selection.hpp"
#include "stylemine/features/vocabulary.hpp"
#include "stylemine/forest/random.hpp"
#include "stylemine/syntax/parser.hpp"
#include "stylemine/syntax/token_stream.hpp"

using namespace stylemine;
using namespace stylemine::features;

namespace {

CompoundLabel L(std::string_view text) { return CompoundLabel::parse(text); }

/// Textbook one-way ANOVA from the definitions, in long double.
long double textbook_f(const std::vector<double>& x, const std::vector<int>& y) {
  std::map<int, std::vector<double>> groups;
  for (std::size_t i = 0; i < x.size(); ++i) groups[y[i]].push_back(x[i]);
  long double grand = 0;
  for (const double v : x) grand += v;
  grand /= static_cast<long double>(x.size());
  long double ssb = 0;
  long double ssw = 0;
  for (const auto& [c, values] : groups) {
    long double mean = 0;
    for (const double v : values) mean += v;
    mean /= static_cast<long double>(values.size());
    ssb += static_cast<long double>(values.size()) * (mean - grand) * (mean - grand);
    for (const double v : values) ssw += (v - mean) * (v - mean);
  }
  const auto k = static_cast<long double>(groups.size());
  const auto n = static_cast<long double>(x.size());
  if (ssw == 0) return ssb == 0 ? 0 : INFINITY;
  return (ssb / (k - 1)) / (ssw / (n - k));
}

FeatureScheme small_scheme() {
  return FeatureScheme(Window{}, {"Identifier", "NumericLiteral", "StringLiteral"}, {"(", "{"},
                       syntax::RoleTaxonomy::javascript().roles(), {"NOOP", "SPACE"});
}

}  // namespace

TEST_CASE("gap classification") {
  CHECK(classify_gap("", "") == CompoundLabel::noop());
  CHECK(classify_gap("\n\t", "") == L("NEWLINE+TAB_INDENT_INC"));
  CHECK(classify_gap("\n\n\t", "\t") == L("NEWLINE+NEWLINE"));
  CHECK(classify_gap("'", "") == L("QUOTE_SINGLE"));
  CHECK(classify_gap(" \"", "") == L("SPACE+QUOTE_DOUBLE"));
  CHECK(classify_gap("\n  ", "    ") == L("NEWLINE+SPACE_INDENT_DEC+SPACE_INDENT_DEC"));
  CHECK_THROWS_AS(classify_gap("\r\n", ""), UnsupportedCharacter);
}

TEST_CASE("rendering inverts classification") {
  const std::vector<std::string> indents = {"", "\t", "\t\t", "  ", "    "};
  const std::vector<std::string> gaps = {
      "", " ", "  ", "\t", "\n", "\n\n", "\n\t", "\n\t\t", "\n  ", "\n    ", "'", "\"",
      " '", "' ", "\n\t'", "\n\n\t\t", " \t "};
  for (const auto& indent : indents) {
    for (const auto& gap : gaps) {
      CAPTURE(indent);
      CAPTURE(gap);
      const auto label = classify_gap(gap, indent);
      const auto rendered = render_label(label, indent);
      CHECK(classify_gap(rendered, indent) == label);
      // Blank-line whitespace is the only thing classification forgets.
      if (gap.find("\n") == std::string::npos || gap.rfind('\n') == gap.find('\n')) {
        CHECK(rendered == gap);
      }
    }
  }
  CHECK_THROWS_AS(render_label(L("NEWLINE+TAB_INDENT_DEC"), ""), RenderError);
  CHECK_THROWS_AS(render_label(L("TAB_INDENT_INC"), ""), RenderError);
}

TEST_CASE("label text round trips") {
  const auto label = L("NEWLINE+TAB_INDENT_INC");
  CHECK(label.to_string() == "NEWLINE+TAB_INDENT_INC");
  CHECK(CompoundLabel::parse(label.to_string()) == label);
  CHECK(CompoundLabel::noop().to_string() == "NOOP");
}

TEST_CASE("isArray snippet gaps carry the annotated labels") {
  const auto stream = syntax::tokenize(testing::kIsArraySnippet);
  const auto gaps = label_gaps(stream);
  std::vector<std::string> got;
  for (const auto& g : gaps) got.push_back(g.label.to_string());
  const std::vector<std::string> expected = {
      // function classesToArray( value ) {
      "SPACE", "NOOP", "SPACE", "SPACE", "SPACE", "NEWLINE+TAB_INDENT_INC",
      // if ( isArray( value ) ) {return value;}
      "SPACE", "SPACE", "NOOP", "SPACE", "SPACE", "SPACE", "SPACE", "NOOP", "SPACE", "NOOP",
      "NOOP", "NEWLINE",
      // if ( typeof value === "string" ) {
      "SPACE", "SPACE", "SPACE", "SPACE", "SPACE+QUOTE_DOUBLE", "QUOTE_DOUBLE+SPACE", "SPACE",
      "NEWLINE+TAB_INDENT_INC",
      // return value.match( rnothtml ) || [];
      "SPACE", "NOOP", "NOOP", "NOOP", "SPACE", "SPACE", "SPACE", "SPACE", "NOOP", "NOOP",
      "NEWLINE+TAB_INDENT_DEC",
      // }
      "NEWLINE",
      // return [];
      "SPACE", "NOOP", "NOOP", "NEWLINE+TAB_INDENT_DEC"};
  CHECK(got == expected);
}

TEST_CASE("label vocabulary") {
  SUBCASE("all NOOP corpus") {
    const auto v = build_label_vocabulary({syntax::tokenize("a=b;c=d;")}, 1);
    REQUIRE(v.size() == 1);
    CHECK(v.label(0) == CompoundLabel::noop());
  }
  SUBCASE("threshold arithmetic") {
    const std::map<CompoundLabel, std::size_t> counts{{L("SPACE"), 100}, {L("TAB"), 3}};
    const LabelVocabulary v(counts, 80);
    REQUIRE(v.size() == 1);
    CHECK(v.label(0) == L("SPACE"));
    CHECK(v.frequency(0) == 100);
    CHECK(v.retained_mass() == doctest::Approx(100.0 / 103.0));
  }
  SUBCASE("retained mass against an independent recount") {
    std::vector<syntax::TokenStream> streams;
    for (const auto& f : testing::jquery_files()) {
      if (f.path.find("core/") != std::string::npos) streams.push_back(syntax::tokenize(f.content));
    }
    const auto v = build_label_vocabulary(streams, 80);
    std::map<std::string, std::size_t> counts;
    std::size_t total = 0;
    for (const auto& s : streams) {
      for (const auto& g : label_gaps(s)) {
        if (g.dropped == DropReason::UnsupportedCharacter ||
            g.dropped == DropReason::MultilineNeighbour) {
          continue;
        }
        ++counts[g.label.to_string()];
        ++total;
      }
    }
    std::size_t kept = 0;
    std::size_t n_kept = 0;
    for (const auto& [label, n] : counts) {
      if (n >= 80) {
        kept += n;
        ++n_kept;
      }
    }
    CHECK(v.size() == n_kept);
    CHECK(v.retained_mass() == doctest::Approx(static_cast<double>(kept) / total));
  }
  SUBCASE("nothing frequent enough") {
    CHECK_THROWS_AS(build_label_vocabulary({syntax::tokenize("a=b;")}, 80), EmptyVocabulary);
  }
}

TEST_CASE("feature scheme invariants") {
  const auto scheme = small_scheme();
  for (const auto& k : scheme.keys()) {
    if (k.slot.kind == SlotKind::Right) {
      CHECK_FALSE(is_position_attribute(k.attribute));
      CHECK_FALSE(is_label_attribute(k.attribute));
    }
    if (k.slot.kind == SlotKind::Parent) {
      CHECK((k.attribute == Attribute::InternalType || k.attribute == Attribute::Roles));
    }
  }
}

TEST_CASE("window slots past the file edges stay empty") {
  const auto scheme = small_scheme();
  const auto stream = syntax::tokenize("a = b");
  const LabelVocabulary vocab({{L("NOOP"), 1}, {L("SPACE"), 1}}, 1);
  const auto gaps = label_gaps(stream);
  const auto labels = token_label_indices(stream, vocab, gaps);
  const auto x = gap_features(stream, 1, scheme, labels);
  for (SparseRow::InnerIterator it(x); it; ++it) {
    const auto& key = scheme.key(static_cast<std::size_t>(it.index()));
    if (key.slot.kind == SlotKind::Left) CHECK(key.slot.index == 1);
    if (key.slot.kind == SlotKind::Right) CHECK(key.slot.index <= 3);
  }
}

TEST_CASE("first parent of the isArray snippet's misplaced gap is the if statement") {
  const auto stream = syntax::tokenize(testing::kIsArraySnippet);
  std::size_t gap = 0;
  for (std::size_t i = 1; i + 1 < stream.tokens.size(); ++i) {
    if (stream.tokens[i - 1].value == "{" && stream.tokens[i + 1].value == "return") {
      gap = i;
      break;
    }
  }
  REQUIRE(gap > 0);
  std::vector<std::string> types;
  for (std::size_t i = 0; i < stream.tree.size(); ++i) {
    const auto& t = stream.tree.node(static_cast<syntax::NodeId>(i)).internal_type;
    if (!t.empty()) types.push_back(t);
  }
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  const auto& taxonomy = syntax::RoleTaxonomy::javascript();
  const FeatureScheme scheme(Window{}, types, {}, taxonomy.roles(), {"NOOP"});
  const LabelVocabulary vocab({{CompoundLabel::noop(), 1}}, 1);
  const auto labels = token_label_indices(stream, vocab, label_gaps(stream));
  const auto x = gap_features(stream, gap, scheme, labels);

  const Slot parent{SlotKind::Parent, 1};
  std::vector<std::string> described;
  for (SparseRow::InnerIterator it(x); it; ++it) {
    const auto& key = scheme.key(static_cast<std::size_t>(it.index()));
    if (key.slot == parent) described.push_back(scheme.describe(static_cast<std::size_t>(it.index())));
  }
  std::sort(described.begin(), described.end());
  CHECK(described == std::vector<std::string>{"^1.internal_type=IfStatement", "^1.roles=IF",
                                              "^1.roles=STATEMENT"});
}

TEST_CASE("ANOVA F statistic") {
  const Eigen::VectorXi two = (Eigen::VectorXi(4) << 0, 0, 1, 1).finished();
  SUBCASE("constant column") {
    CHECK(anova_f(Eigen::VectorXd::Constant(4, 3.0), two) == 0.0);
  }
  SUBCASE("perfect separation") {
    const Eigen::VectorXd col = (Eigen::VectorXd(4) << 0, 0, 1, 1).finished();
    CHECK(std::isinf(anova_f(col, two)));
  }
  SUBCASE("single class") {
    CHECK_THROWS_AS(anova_f(Eigen::VectorXd::Ones(3), Eigen::VectorXi::Zero(3)), DegenerateInput);
  }
  SUBCASE("random matrices against the textbook formula") {
    forest::Rng rng(17);
    for (int round = 0; round < 20; ++round) {
      const int n = 50;
      const int d = 30;
      Eigen::MatrixXd dense(n, d);
      Eigen::VectorXi y(n);
      std::vector<int> yv(n);
      for (int i = 0; i < n; ++i) yv[i] = y[i] = static_cast<int>(rng.below(4));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) dense(i, j) = rng.uniform() < 0.5 ? 0.0 : rng.uniform() * 10;
      }
      const Eigen::SparseMatrix<double> sparse = dense.sparseView();
      const Eigen::VectorXd fs = anova_f(sparse, y);
      for (int j = 0; j < d; ++j) {
        std::vector<double> col(dense.col(j).data(), dense.col(j).data() + n);
        const auto expected = static_cast<double>(textbook_f(col, yv));
        CHECK(fs[j] == doctest::Approx(expected).epsilon(1e-9));
        CHECK(anova_f(dense.col(j), y) == doctest::Approx(expected).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("feature selection matches a full-sort oracle") {
  const auto scheme = small_scheme();
  REQUIRE(scheme.width() > 30);
  forest::Rng rng(23);
  for (int round = 0; round < 20; ++round) {
    const int n = 50;
    const int d = 30;
    std::vector<Sample> samples(n);
    std::vector<std::vector<double>> columns(d, std::vector<double>(n, 0.0));
    std::vector<int> y(n);
    for (int i = 0; i < n; ++i) {
      y[i] = static_cast<int>(rng.below(3));
      samples[i].y = static_cast<std::uint32_t>(y[i]);
      samples[i].x.resize(static_cast<Eigen::Index>(scheme.width()));
      for (int j = 0; j < d; ++j) {
        const double v = rng.below(3) == 0 ? 0.0 : static_cast<double>(1 + rng.below(20));
        columns[j][i] = v;
        if (v != 0.0) samples[i].x.insertBack(j) = v;
      }
    }
    const auto k = static_cast<std::size_t>(1 + rng.below(d - 1));
    std::vector<std::pair<long double, int>> scored;
    for (int j = 0; j < d; ++j) scored.emplace_back(textbook_f(columns[j], y), j);
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    std::vector<std::uint32_t> expected;
    for (std::size_t i = 0; i < k; ++i) expected.push_back(static_cast<std::uint32_t>(scored[i].second));
    std::sort(expected.begin(), expected.end());
    CAPTURE(round);
    CHECK(select_features(samples, scheme, k).selected() == expected);
  }
  SUBCASE("narrow schemes keep every column") {
    std::vector<Sample> samples(2);
    const auto all = select_features(samples, scheme, scheme.width() + 1).selected();
    CHECK(all.size() == scheme.width());
  }
  SUBCASE("a separating column wins with k = 1") {
    std::vector<Sample> samples(6);
    for (int i = 0; i < 6; ++i) {
      samples[i].y = static_cast<std::uint32_t>(i % 2);
      samples[i].x.resize(static_cast<Eigen::Index>(scheme.width()));
      samples[i].x.insertBack(2) = 1.0 + i;
      if (i % 2) samples[i].x.insertBack(7) = 1.0;
    }
    CHECK(select_features(samples, scheme, 1).selected() == std::vector<std::uint32_t>{7});
  }
}

TEST_CASE("samples skip out-of-vocabulary gaps") {
  const auto stream = syntax::tokenize("a = b;\nc=d;\n");
  const LabelVocabulary vocab({{L("SPACE"), 1}}, 1);
  const auto scheme = small_scheme();
  const auto samples = extract_samples(stream, vocab, scheme);
  CHECK(samples.size() == 2);
  for (const auto& s : samples) CHECK(s.y == 0);
}
