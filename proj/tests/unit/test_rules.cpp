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
#include <numeric>

#include "fixtures.hpp"
#include "stylemine/bench/generator.hpp"
#include "stylemine/errors.hpp"
#include "stylemine/features/selection.hpp"
#include "stylemine/forest/random.hpp"
#include "stylemine/rules/rules.hpp"
#include "stylemine/syntax/parser.hpp"

using namespace stylemine;
using namespace stylemine::rules;
using features::Attribute;
using features::Slot;
using features::SlotKind;

namespace {

const Slot kL1{SlotKind::Left, 1};
const Slot kL2{SlotKind::Left, 2};
const Slot kL3{SlotKind::Left, 3};
const Slot kR1{SlotKind::Right, 1};
const Slot kR2{SlotKind::Right, 2};

const features::FeatureScheme& scheme() {
  static const features::FeatureScheme s(
      features::Window{}, {"Identifier", "NumericLiteral", "StringLiteral", "ThisExpression"},
      {"(", ")", "{"}, syntax::RoleTaxonomy::javascript().roles(), {"NOOP", "SPACE", "NEWLINE"});
  return s;
}

std::uint32_t key(const Slot& slot, Attribute a, std::int32_t category = 0) {
  return static_cast<std::uint32_t>(scheme().base(slot, a) + category);
}

Clause numeric(const Slot& s, Attribute a, Comparator op, double t) { return {s, a, op, t, {}}; }
Clause set(const Slot& s, Attribute a, Comparator op, std::vector<std::int32_t> c) {
  return {s, a, op, 0.0, std::move(c)};
}

/// Random rows over a handful of numeric, one-hot and multi-hot groups.
struct Fixture {
  forest::Dataset data;
  std::vector<Eigen::VectorXd> dense;

  Fixture(std::size_t n, std::uint64_t seed, std::size_t n_classes = 3) {
    forest::Rng rng(seed);
    std::vector<std::uint32_t> keys;
    for (const auto& s : {kL1, kL2, kR1}) keys.push_back(key(s, Attribute::Length));
    keys.push_back(key(kL1, Attribute::OffsetDiff));
    for (int c = 0; c < 4; ++c) keys.push_back(key(kL1, Attribute::InternalType, c));
    for (int c = 0; c < 4; ++c) keys.push_back(key(kR1, Attribute::InternalType, c));
    for (int c = 0; c < 5; ++c) keys.push_back(key(kL1, Attribute::Roles, c));
    for (int c = 0; c < 3; ++c) keys.push_back(key(kL1, Attribute::Label, c));
    std::sort(keys.begin(), keys.end());
    data.keys = keys;
    data.n_classes = n_classes;
    data.x = Eigen::MatrixXf::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(keys.size()));
    auto col = [&](std::uint32_t k) {
      return static_cast<Eigen::Index>(std::find(keys.begin(), keys.end(), k) - keys.begin());
    };
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = static_cast<Eigen::Index>(i);
      for (const auto& s : {kL1, kL2, kR1}) {
        data.x(r, col(key(s, Attribute::Length))) = static_cast<float>(rng.below(6));
      }
      data.x(r, col(key(kL1, Attribute::OffsetDiff))) = static_cast<float>(rng.below(8));
      for (const auto& s : {kL1, kR1}) {
        const auto c = rng.below(5);  // 4 means no category
        if (c < 4) data.x(r, col(key(s, Attribute::InternalType, static_cast<int>(c)))) = 1;
      }
      for (int c = 0; c < 5; ++c) {
        if (rng.below(2)) data.x(r, col(key(kL1, Attribute::Roles, c))) = 1;
      }
      const auto lab = rng.below(4);
      if (lab < 3) data.x(r, col(key(kL1, Attribute::Label, static_cast<int>(lab)))) = 1;
      data.y.push_back(static_cast<std::uint32_t>(rng.below(n_classes)));
    }
    for (std::size_t i = 0; i < n; ++i) {
      Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(scheme().width()));
      for (std::size_t j = 0; j < keys.size(); ++j) {
        x[keys[j]] = data.x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
      dense.push_back(std::move(x));
    }
  }

  /// Brute-force fired set.
  Bits fired(const Rule& rule) const {
    Bits b(dense.size());
    for (std::size_t i = 0; i < dense.size(); ++i) b[i] = rule.fires(scheme(), dense[i]);
    return b;
  }
};

Clause random_clause(forest::Rng& rng) {
  switch (rng.below(5)) {
    case 0: {
      const Slot s = rng.below(2) ? kL1 : kL2;
      return numeric(s, Attribute::Length, rng.below(2) ? Comparator::LE : Comparator::GT,
                     static_cast<double>(rng.below(6)) + 0.5);
    }
    case 1:
      return numeric(kL1, Attribute::OffsetDiff, rng.below(2) ? Comparator::LE : Comparator::GT,
                     static_cast<double>(rng.below(8)) + 0.5);
    case 2: {
      const Slot s = rng.below(2) ? kL1 : kR1;
      return set(s, Attribute::InternalType, rng.below(2) ? Comparator::InSet : Comparator::NotInSet,
                 {static_cast<std::int32_t>(rng.below(4))});
    }
    case 3:
      return set(kL1, Attribute::Roles, rng.below(2) ? Comparator::InSet : Comparator::NotInSet,
                 {static_cast<std::int32_t>(rng.below(5))});
    default:
      return set(kL1, Attribute::Label, rng.below(2) ? Comparator::InSet : Comparator::NotInSet,
                 {static_cast<std::int32_t>(rng.below(3))});
  }
}

Rule random_rule(forest::Rng& rng) {
  Rule r;
  const auto n = 1 + rng.below(10);
  for (std::uint64_t i = 0; i < n; ++i) r.clauses.push_back(random_clause(rng));
  r.label = static_cast<std::uint32_t>(rng.below(3));
  return r;
}

/// Independent FNV-1a over the bytes, for checking hashes.
std::uint32_t fnv_oracle(const std::string& s) {
  std::uint32_t h = 2166136261u;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 16777619u;
  }
  return h;
}

struct RealData {
  features::FeatureScheme scheme;
  forest::Dataset data;
  std::vector<Eigen::VectorXd> dense;
};

/// Dataset from the generated corpus.
const RealData& real_data() {
  static const RealData d = [] {
    RealData out;
    std::vector<syntax::TokenStream> streams;
    for (const auto& f : bench::generate_corpus(25, 5)) streams.push_back(syntax::tokenize(f.content));
    const auto vocab = features::build_label_vocabulary(streams, 80);
    auto scheme = features::FeatureScheme::build(streams, vocab, syntax::RoleTaxonomy::javascript());
    std::vector<features::Sample> samples;
    for (std::size_t i = 0; i < streams.size(); ++i) {
      auto s = features::extract_samples(streams[i], vocab, scheme, static_cast<std::uint32_t>(i));
      samples.insert(samples.end(), s.begin(), s.end());
    }
    out.scheme = features::select_features(samples, std::move(scheme), 200);
    out.data = forest::make_dataset(samples, out.scheme.selected(), out.scheme.width(), vocab.size());
    for (const auto& s : samples) out.dense.push_back(dense(s.x, out.scheme.width()));
    return out;
  }();
  return d;
}

}  // namespace

TEST_CASE("rule extraction") {
  SUBCASE("single leaf gives one clause-free rule") {
    const Fixture fx(50, 1);
    forest::Forest f;
    f.n_classes = 3;
    forest::Tree t;
    forest::TreeNode leaf;
    leaf.counts = {1, 7, 2};
    t.nodes.push_back(leaf);
    f.trees.push_back(t);
    const SampleIndex index(fx.data, scheme());
    const auto rules = extract_rules(f, index);
    REQUIRE(rules.rules.size() == 1);
    CHECK(rules.rules[0].clauses.empty());
    CHECK(rules.rules[0].label == 1);
    CHECK(index.fired(rules.rules[0]).count() == 50);
  }
  SUBCASE("depth-one tree gives complementary rules") {
    const Fixture fx(80, 2);
    forest::HyperParams p;
    p.model_kind = forest::ModelKind::SingleTree;
    p.max_depth = 1;
    p.min_samples_leaf = 1;
    p.min_samples_split = 2;
    p.max_features = {forest::MaxFeatures::Kind::Fraction, 1.0};
    const auto f = forest::train_forest(fx.data, p, 0);
    const SampleIndex index(fx.data, scheme());
    const auto rules = extract_rules(f, index);
    REQUIRE(rules.rules.size() == 2);
    REQUIRE(rules.rules[0].clauses.size() == 1);
    REQUIRE(rules.rules[1].clauses.size() == 1);
    const auto a = index.fired(rules.rules[0]);
    const auto b = index.fired(rules.rules[1]);
    CHECK((a & b).none());
    CHECK((a | b).count() == 80);
  }
  SUBCASE("each sample fires exactly one rule per tree, agreeing with the tree") {
    const auto& d = real_data();
    forest::HyperParams p;
    p.min_samples_leaf = 20;
    const auto f = forest::train_forest(d.data, p, 0);
    const SampleIndex index(d.data, d.scheme);
    const auto rules = extract_rules(f, index);
    std::size_t violations = 0;
    for (std::size_t i = 0; i < d.dense.size(); i += 3) {
      for (std::uint32_t t = 0; t < f.trees.size(); ++t) {
        const auto& leaf = f.trees[t].nodes[f.trees[t].leaf_for(d.dense[i])];
        const auto predicted = static_cast<std::uint32_t>(
            std::max_element(leaf.counts.begin(), leaf.counts.end()) - leaf.counts.begin());
        std::size_t fired = 0;
        bool agrees = true;
        for (const auto& r : rules.rules) {
          if (r.tree != t || !r.fires(d.scheme, d.dense[i])) continue;
          ++fired;
          agrees = agrees && r.label == predicted;
        }
        if (fired != 1 || !agrees) ++violations;
      }
    }
    CHECK(violations == 0);
  }
}

TEST_CASE("confidence filter") {
  RuleSet set;
  for (const double c : {0.5, 0.92, 0.99, 1.0, 1.0}) {
    Rule r;
    r.confidence = c;
    set.rules.push_back(r);
  }
  CHECK(filter_by_confidence(set, 0.0).rules.size() == 5);
  const auto strict = filter_by_confidence(set, 1.0 + 1e-12);
  CHECK(strict.rules.empty());
  const auto only_one = filter_by_confidence(set, 1.0);
  CHECK(only_one.rules.size() == 2);
  std::size_t brute = 0;
  for (const auto& r : set.rules) brute += r.confidence >= 0.92;
  CHECK(filter_by_confidence(set, 0.92).rules.size() == brute);
}

TEST_CASE("clause merging") {
  SUBCASE("interval intersection") {
    Rule r;
    r.clauses = {numeric(kL1, Attribute::Length, Comparator::LE, 5),
                 numeric(kL1, Attribute::Length, Comparator::LE, 7)};
    const auto m = merge_clauses(r);
    REQUIRE(m.clauses.size() == 1);
    CHECK(m.clauses[0].threshold == 5);
    CHECK_FALSE(m.dead);
  }
  SUBCASE("exclusions collapse into one set") {
    Rule r;
    r.clauses = {set(kR1, Attribute::InternalType, Comparator::NotInSet, {2}),
                 set(kR1, Attribute::InternalType, Comparator::NotInSet, {0})};
    const auto m = merge_clauses(r);
    REQUIRE(m.clauses.size() == 1);
    CHECK(m.clauses[0].op == Comparator::NotInSet);
    CHECK(m.clauses[0].categories == std::vector<std::int32_t>{0, 2});
    CHECK(m.clauses[0].text(scheme()) == "+1.internal_type not in {Identifier, StringLiteral}");
  }
  SUBCASE("empty interval is dead") {
    Rule r;
    r.clauses = {numeric(kL1, Attribute::Length, Comparator::LE, 3),
                 numeric(kL1, Attribute::Length, Comparator::GT, 4)};
    CHECK(merge_clauses(r).dead);
  }
  SUBCASE("fired sets are preserved on 1000 random rules") {
    const Fixture fx(400, 11);
    const SampleIndex index(fx.data, scheme());
    forest::Rng rng(99);
    std::size_t dead = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto rule = random_rule(rng);
      const auto merged = merge_clauses(rule);
      const auto before = fx.fired(rule);
      CHECK(index.fired(rule) == before);
      if (merged.dead) {
        ++dead;
        CHECK(before.none());
        continue;
      }
      CHECK(fx.fired(merged) == before);
      std::map<std::pair<AttributeGroup, Comparator>, int> per;
      for (const auto& c : merged.clauses) ++per[{c.group(), c.op}];
      for (const auto& [k, n] : per) CHECK(n == 1);
    }
    CHECK(dead > 0);
  }
}

TEST_CASE("mistake sets") {
  const Fixture fx(300, 4);
  const SampleIndex index(fx.data, scheme());
  SUBCASE("brute force") {
    forest::Rng rng(8);
    for (int i = 0; i < 50; ++i) {
      const auto rule = merge_clauses(random_rule(rng));
      if (rule.dead) continue;
      for (const auto& [group, bits] : mistake_sets(rule, index)) {
        Rule only;
        for (const auto& c : rule.clauses) {
          if (c.group() == group) only.clauses.push_back(c);
        }
        Bits expected(fx.dense.size());
        for (std::size_t s = 0; s < fx.dense.size(); ++s) {
          expected[s] = only.fires(scheme(), fx.dense[s]) && fx.data.y[s] != rule.label;
        }
        CHECK(bits == expected);
      }
    }
  }
  SUBCASE("a clause met only by correct samples") {
    Rule r;
    r.label = 0;
    // No row has a length above 100.
    r.clauses = {numeric(kL1, Attribute::Length, Comparator::GT, 100)};
    CHECK(mistake_sets(r, index).begin()->second.none());
  }
  SUBCASE("duplicated attributes") {
    Rule r;
    r.label = 1;
    r.clauses = {numeric(kL1, Attribute::Length, Comparator::LE, 2.5),
                 set(kL1, Attribute::Roles, Comparator::InSet, {1})};
    auto sets = mistake_sets(r, index);
    REQUIRE(sets.size() == 2);
    CHECK(jaccard(sets.begin()->second, sets.begin()->second) == 1.0);
  }
  SUBCASE("jaccard") {
    Bits a(6);
    Bits b(6);
    CHECK(jaccard(a, b) == 1.0);
    a[0] = a[1] = true;
    b[1] = b[2] = true;
    CHECK(jaccard(a, b) == doctest::Approx(1.0 / 3.0));
  }
}

TEST_CASE("community detection") {
  SUBCASE("two cliques joined by one edge") {
    std::vector<std::vector<std::size_t>> adj(8);
    auto edge = [&](std::size_t a, std::size_t b) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    };
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        edge(i, j);
        edge(i + 4, j + 4);
      }
    }
    edge(3, 4);
    const auto c = louvain(adj);
    CHECK(c == std::vector<std::size_t>{0, 0, 0, 0, 1, 1, 1, 1});
  }
  SUBCASE("isolated nodes stay alone") {
    const auto c = louvain(std::vector<std::vector<std::size_t>>(3));
    CHECK(c == std::vector<std::size_t>{0, 1, 2});
  }
  SUBCASE("empty graph") { CHECK(louvain({}).empty()); }
}

TEST_CASE("attribute pruning") {
  SUBCASE("dissimilar attributes are untouched") {
    const Fixture fx(300, 5);
    const SampleIndex index(fx.data, scheme());
    Rule r;
    r.label = 0;
    r.clauses = {numeric(kL1, Attribute::Length, Comparator::LE, 1.5),
                 set(kR1, Attribute::InternalType, Comparator::InSet, {2})};
    CHECK(prune_attributes(r, index).clauses == r.clauses);
  }
  SUBCASE("three redundant and two independent attributes") {
    // Columns -1/-2/-3 length are copies; offset and +1 length are independent.
    forest::Rng rng(12);
    forest::Dataset data;
    data.keys = {key(kL1, Attribute::Length), key(kL2, Attribute::Length),
                 key(kL3, Attribute::Length), key(kL1, Attribute::OffsetDiff),
                 key(kR1, Attribute::Length)};
    std::sort(data.keys.begin(), data.keys.end());
    auto col = [&](std::uint32_t k) {
      return static_cast<Eigen::Index>(std::find(data.keys.begin(), data.keys.end(), k) -
                                       data.keys.begin());
    };
    data.n_classes = 2;
    const std::size_t n = 2000;
    data.x = Eigen::MatrixXf::Zero(n, 5);
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = static_cast<Eigen::Index>(i);
      const auto v = static_cast<float>(rng.below(10));
      for (const auto& s : {kL1, kL2, kL3}) data.x(r, col(key(s, Attribute::Length))) = v;
      const auto off = static_cast<float>(rng.below(10));
      const auto right = static_cast<float>(rng.below(10));
      data.x(r, col(key(kL1, Attribute::OffsetDiff))) = off;
      data.x(r, col(key(kR1, Attribute::Length))) = right;
      const bool inside = v <= 4 && off <= 6 && right > 2;
      data.y.push_back(inside ? (rng.below(50) ? 1u : 0u) : static_cast<std::uint32_t>(rng.below(2)));
    }
    const SampleIndex index(data, scheme());
    Rule r;
    r.label = 1;
    r.clauses = {numeric(kL1, Attribute::Length, Comparator::LE, 4.5),
                 numeric(kL2, Attribute::Length, Comparator::LE, 4.5),
                 numeric(kL3, Attribute::Length, Comparator::LE, 4.5),
                 numeric(kL1, Attribute::OffsetDiff, Comparator::LE, 6.5),
                 numeric(kR1, Attribute::Length, Comparator::GT, 2.5)};
    recompute_stats(r, index);
    const auto pruned = prune_attributes(r, index);
    CHECK(pruned.clauses.size() == 3);
    std::size_t copies = 0;
    for (const auto& c : pruned.clauses) copies += c.attribute == Attribute::Length && c.slot.kind == SlotKind::Left;
    CHECK(copies == 1);
    Rule scored = pruned;
    recompute_stats(scored, index);
    CHECK(scored.confidence >= r.confidence - 0.001);
  }
  SUBCASE("pruning only grows fired sets") {
    const auto& d = real_data();
    const SampleIndex index(d.data, d.scheme);
    forest::HyperParams p;
    p.min_samples_leaf = 20;
    const auto raw = extract_rules(forest::train_forest(d.data, p, 1), index);
    std::size_t changed = 0;
    for (const auto& r : raw.rules) {
      auto merged = merge_clauses(r);
      if (merged.dead) continue;
      const auto pruned = prune_attributes(merged, index);
      const auto before = index.fired(merged);
      const auto after = index.fired(pruned);
      CHECK(before.is_subset_of(after));
      changed += pruned.clauses.size() != merged.clauses.size();
    }
    CHECK(changed > 0);
  }
}

TEST_CASE("deduplication") {
  Rule a;
  a.clauses = {numeric(kL1, Attribute::Length, Comparator::LE, 2.5)};
  a.support = 5;
  Rule b = a;
  b.support = 9;
  Rule c;
  c.clauses = {numeric(kL1, Attribute::Length, Comparator::GT, 2.5)};
  RuleSet distinct;
  distinct.rules = {a, c};
  CHECK(dedupe(distinct, scheme()).rules.size() == 2);
  RuleSet twice;
  twice.rules = {a, c, b};
  const auto once = dedupe(twice, scheme());
  REQUIRE(once.rules.size() == 2);
  CHECK(once.rules[0].support == 9);
  const auto again = dedupe(once, scheme());
  REQUIRE(again.rules.size() == once.rules.size());
  for (std::size_t i = 0; i < again.rules.size(); ++i) {
    CHECK(again.rules[i].clauses == once.rules[i].clauses);
    CHECK(again.rules[i].support == once.rules[i].support);
  }
}

TEST_CASE("rule hashing") {
  Rule r;
  r.clauses = {numeric(kL1, Attribute::Length, Comparator::LE, 2.5),
               set(kR1, Attribute::InternalType, Comparator::NotInSet, {2})};
  r.label = 1;
  Rule swapped = r;
  std::swap(swapped.clauses[0], swapped.clauses[1]);
  CHECK(hash_rule(r, scheme()) == hash_rule(swapped, scheme()));
  CHECK(canonical_string(r, scheme()) == canonical_string(swapped, scheme()));

  Rule other = r;
  other.label = 2;
  CHECK(canonical_string(r, scheme()) != canonical_string(other, scheme()));
  CHECK(hash_rule(r, scheme()) == fnv_oracle(canonical_string(r, scheme())));
  CHECK(hash_rule(other, scheme()) == fnv_oracle(canonical_string(other, scheme())));

  // Pinned regression vectors.
  Rule empty;
  CHECK(canonical_string(empty, scheme()) == "→0");
  CHECK(hash_rule(empty, scheme()) == 0xc2ede373u);
  CHECK(fnv1a32("") == 0x811c9dc5u);
  CHECK(fnv1a32("a") == 0xe40c292cu);
  CHECK(fnv1a32("foobar") == 0xbf9cf968u);
  CHECK(canonical_string(r, scheme()) ==
        "-1.length <= 2.5 ∧ +1.internal_type not in {StringLiteral}→1");
  CHECK(hash_rule(r, scheme()) == fnv_oracle("-1.length <= 2.5 ∧ +1.internal_type not in {StringLiteral}→1"));
  CHECK(hash_hex(0xc2ede373u) == "c2ede373");
  CHECK(parse_hash("c2ede373") == 0xc2ede373u);
  CHECK(hash_hex(0x1u) == "00000001");
}

TEST_CASE("rule matching") {
  const Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(scheme().width()));
  RuleSet set;
  SUBCASE("empty rule set") { CHECK_FALSE(match_rules(set, scheme(), x)); }
  Rule low;
  low.confidence = 0.95;
  low.support = 100;
  low.label = 1;
  low.hash = 1;
  Rule high = low;
  high.confidence = 0.97;
  high.label = 2;
  high.hash = 2;
  SUBCASE("single rule") {
    set.rules = {low};
    REQUIRE(match_rules(set, scheme(), x));
    CHECK(match_rules(set, scheme(), x)->label == 1);
  }
  SUBCASE("most confident wins") {
    set.rules = {low, high};
    CHECK(match_rules(set, scheme(), x)->label == 2);
  }
  SUBCASE("blacklisting the winner hands over to the runner-up") {
    set.rules = {low, high};
    const Matcher m(set, scheme(), 0.0, 0, {2});
    CHECK(m.match(x)->label == 1);
    CHECK(m.match_any(x)->label == 2);
  }
  SUBCASE("thresholds") {
    set.rules = {low, high};
    CHECK(Matcher(set, scheme(), 0.96).match(x)->label == 2);
    CHECK_FALSE(Matcher(set, scheme(), 0.98).match(x));
    CHECK_FALSE(Matcher(set, scheme(), 0.0, 101).match(x));
  }
}

TEST_CASE("postprocessing keeps training precision") {
  const auto& d = real_data();
  const SampleIndex index(d.data, d.scheme);
  forest::HyperParams p;
  p.min_samples_leaf = 20;
  const auto raw = extract_rules(forest::train_forest(d.data, p, 2), index);
  const auto unpruned = postprocess(raw, index, {0.92, 0.98, false});
  const auto pruned = postprocess(raw, index, {0.92, 0.98, true});
  const auto [c0, n0] = training_precision(unpruned, index);
  const auto [c1, n1] = training_precision(pruned, index);
  REQUIRE(n0 > 0);
  REQUIRE(n1 > 0);
  CHECK(pruned.average_length() <= unpruned.average_length());
  MESSAGE("precision unpruned " << double(c0) / n0 << " pruned " << double(c1) / n1);
  for (const auto& r : pruned.rules) {
    CHECK(r.confidence >= 0.92);
    CHECK(r.hash == hash_rule(r, d.scheme));
  }
  CHECK(std::is_sorted(pruned.rules.begin(), pruned.rules.end(), higher_priority));
}
