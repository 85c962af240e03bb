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


#include "stylemine/rules/rules.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "stylemine/errors.hpp"

namespace stylemine::rules {
namespace {

using features::Attribute;
using features::AttributeKind;
using features::attribute_kind;

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double value_at(const features::FeatureScheme& scheme, const Eigen::VectorXd& x,
                const Clause& c, std::int32_t category) {
  const auto base = scheme.base(c.slot, c.attribute);
  if (base < 0) return 0.0;
  const auto idx = base + std::max(category, 0);
  return idx < x.size() ? x[idx] : 0.0;
}

}  // namespace

// ---- clauses and rules -------------------------------------------------------

std::string Clause::text(const features::FeatureScheme& scheme) const {
  std::string out = slot.text() + "." + std::string(features::attribute_name(attribute));
  switch (op) {
    case Comparator::LE:
      return out + " <= " + format_number(threshold);
    case Comparator::GT:
      return out + " > " + format_number(threshold);
    case Comparator::InSet:
    case Comparator::NotInSet: {
      const auto& alphabet = scheme.alphabet(attribute);
      std::vector<std::string> names;
      for (const auto c : categories) {
        names.push_back(static_cast<std::size_t>(c) < alphabet.size()
                            ? alphabet[static_cast<std::size_t>(c)]
                            : "#" + std::to_string(c));
      }
      std::sort(names.begin(), names.end());
      out += op == Comparator::InSet ? " in {" : " not in {";
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
      }
      return out + "}";
    }
  }
  return out;
}

bool Clause::evaluate(const features::FeatureScheme& scheme, const Eigen::VectorXd& x) const {
  switch (op) {
    case Comparator::LE:
      return value_at(scheme, x, *this, -1) <= threshold;
    case Comparator::GT:
      return value_at(scheme, x, *this, -1) > threshold;
    case Comparator::InSet: {
      const bool all = attribute_kind(attribute) == AttributeKind::MultiHot;
      for (const auto c : categories) {
        const bool hot = value_at(scheme, x, *this, c) != 0.0;
        if (all && !hot) return false;
        if (!all && hot) return true;
      }
      return all;
    }
    case Comparator::NotInSet:
      for (const auto c : categories) {
        if (value_at(scheme, x, *this, c) != 0.0) return false;
      }
      return true;
  }
  return false;
}

bool Rule::fires(const features::FeatureScheme& scheme, const Eigen::VectorXd& x) const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [&](const Clause& c) { return c.evaluate(scheme, x); });
}

double RuleSet::average_length() const {
  if (rules.empty()) return 0.0;
  double total = 0;
  for (const auto& r : rules) total += static_cast<double>(r.length());
  return total / static_cast<double>(rules.size());
}

// ---- sample index ------------------------------------------------------------

SampleIndex::SampleIndex(const forest::Dataset& data, const features::FeatureScheme& scheme)
    : data_(data), scheme_(scheme) {
  labels_.assign(data.n_classes, Bits(data.rows()));
  for (std::size_t r = 0; r < data.rows(); ++r) labels_[data.y[r]].set(r);
}

std::int64_t SampleIndex::column(std::int64_t key) const {
  const auto it = std::lower_bound(data_.keys.begin(), data_.keys.end(),
                                   static_cast<std::uint32_t>(key));
  if (it == data_.keys.end() || *it != key) return -1;
  return it - data_.keys.begin();
}

// Combines "column is (non)zero" into `out` with AND or OR.
void SampleIndex::column_test(std::int64_t key, Bits& out, bool want_nonzero,
                              bool conjunctive) const {
  const auto col = column(key);
  const std::size_t n = data_.rows();
  for (std::size_t r = 0; r < n; ++r) {
    const bool nonzero = col >= 0 && data_.x(static_cast<Eigen::Index>(r), col) != 0.0f;
    const bool ok = nonzero == want_nonzero;
    if (conjunctive) {
      if (!ok) out.reset(r);
    } else if (ok) {
      out.set(r);
    }
  }
}

Bits SampleIndex::clause_bits(const Clause& c) const {
  const std::size_t n = data_.rows();
  const auto base = scheme_.base(c.slot, c.attribute);
  switch (c.op) {
    case Comparator::LE:
    case Comparator::GT: {
      Bits out(n);
      const auto col = base < 0 ? -1 : column(base);
      for (std::size_t r = 0; r < n; ++r) {
        const double v = col >= 0 ? data_.x(static_cast<Eigen::Index>(r), col) : 0.0;
        if (c.op == Comparator::LE ? v <= c.threshold : v > c.threshold) out.set(r);
      }
      return out;
    }
    case Comparator::InSet: {
      if (attribute_kind(c.attribute) == AttributeKind::MultiHot) {
        Bits out(n);
        out.set();
        for (const auto cat : c.categories) column_test(base + cat, out, true, true);
        return out;
      }
      Bits out(n);
      for (const auto cat : c.categories) column_test(base + cat, out, true, false);
      return out;
    }
    case Comparator::NotInSet: {
      Bits out(n);
      out.set();
      for (const auto cat : c.categories) column_test(base + cat, out, false, true);
      return out;
    }
  }
  return Bits(n);
}

Bits SampleIndex::group_bits(const Rule& rule, const AttributeGroup& group) const {
  Bits out(size());
  out.set();
  for (const auto& c : rule.clauses) {
    if (c.group() == group) out &= clause_bits(c);
  }
  return out;
}

Bits SampleIndex::fired(const Rule& rule) const {
  Bits out(size());
  out.set();
  for (const auto& c : rule.clauses) out &= clause_bits(c);
  return out;
}

void recompute_stats(Rule& rule, const SampleIndex& index) {
  const Bits fired = index.fired(rule);
  rule.support = fired.count();
  const auto correct = (fired & index.label_bits(rule.label)).count();
  rule.confidence = rule.support == 0 ? 0.0
                                      : static_cast<double>(correct) /
                                            static_cast<double>(rule.support);
}

// ---- extraction ----------------------------------------------------------------

RuleSet extract_rules(const forest::Forest& forest, const SampleIndex& index) {
  RuleSet out;
  out.provenance.seed = forest.seed;
  const auto& scheme = index.scheme();
  const auto& data = index.data();
  for (std::uint32_t t = 0; t < forest.trees.size(); ++t) {
    const auto& tree = forest.trees[t];
    std::unordered_map<std::uint32_t, std::size_t> rule_of_leaf;
    struct Frame {
      std::uint32_t node;
      std::vector<Clause> clauses;
    };
    std::vector<Frame> stack{{0, {}}};
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      const auto& node = tree.nodes[f.node];
      if (node.is_leaf()) {
        Rule rule;
        rule.clauses = std::move(f.clauses);
        std::sort(rule.clauses.begin(), rule.clauses.end());
        rule.label = static_cast<std::uint32_t>(
            std::max_element(node.counts.begin(), node.counts.end()) - node.counts.begin());
        rule.tree = t;
        rule_of_leaf[f.node] = out.rules.size();
        out.rules.push_back(std::move(rule));
        continue;
      }
      const auto& key = scheme.key(node.key);
      Clause le{key.slot, key.attribute, Comparator::LE, node.threshold, {}};
      Clause gt{key.slot, key.attribute, Comparator::GT, node.threshold, {}};
      if (attribute_kind(key.attribute) != AttributeKind::Numeric) {
        le = Clause{key.slot, key.attribute, Comparator::NotInSet, 0.0, {key.category}};
        gt = Clause{key.slot, key.attribute, Comparator::InSet, 0.0, {key.category}};
      }
      Frame right{node.right, f.clauses};
      right.clauses.push_back(gt);
      f.clauses.push_back(le);
      stack.push_back(std::move(right));
      stack.push_back({node.left, std::move(f.clauses)});
    }
    std::vector<std::uint64_t> fired(out.rules.size(), 0);
    std::vector<std::uint64_t> correct(out.rules.size(), 0);
    for (std::size_t r = 0; r < data.rows(); ++r) {
      const auto idx = rule_of_leaf.at(tree.leaf_for_row(data, r));
      ++fired[idx];
      if (data.y[r] == out.rules[idx].label) ++correct[idx];
    }
    for (const auto& [leaf, idx] : rule_of_leaf) {
      auto& rule = out.rules[idx];
      rule.support = fired[idx];
      rule.confidence = fired[idx] == 0 ? 0.0
                                        : static_cast<double>(correct[idx]) /
                                              static_cast<double>(fired[idx]);
    }
  }
  out.provenance.extracted = out.rules.size();
  return out;
}

RuleSet filter_by_confidence(RuleSet rules, double threshold) {
  std::erase_if(rules.rules, [&](const Rule& r) { return r.confidence < threshold; });
  rules.provenance.confidence_threshold = threshold;
  rules.provenance.after_filter = rules.rules.size();
  return rules;
}

// ---- merging -----------------------------------------------------------------

Rule merge_clauses(Rule rule) {
  std::map<AttributeGroup, std::vector<Clause>> groups;
  for (auto& c : rule.clauses) groups[c.group()].push_back(std::move(c));
  rule.clauses.clear();
  auto set_union = [](std::vector<std::int32_t>& into, const std::vector<std::int32_t>& from) {
    std::vector<std::int32_t> out;
    std::set_union(into.begin(), into.end(), from.begin(), from.end(), std::back_inserter(out));
    into = std::move(out);
  };
  for (auto& [group, clauses] : groups) {
    const auto [slot, attribute] = group;
    const auto kind = attribute_kind(attribute);
    if (kind == AttributeKind::Numeric) {
      std::optional<double> le;
      std::optional<double> gt;
      for (const auto& c : clauses) {
        if (c.op == Comparator::LE) le = le ? std::min(*le, c.threshold) : c.threshold;
        if (c.op == Comparator::GT) gt = gt ? std::max(*gt, c.threshold) : c.threshold;
      }
      if (le && gt && *gt >= *le) rule.dead = true;
      if (le) rule.clauses.push_back({slot, attribute, Comparator::LE, *le, {}});
      if (gt) rule.clauses.push_back({slot, attribute, Comparator::GT, *gt, {}});
      continue;
    }
    std::optional<std::vector<std::int32_t>> in;
    std::vector<std::int32_t> not_in;
    for (const auto& c : clauses) {
      if (c.op == Comparator::NotInSet) {
        set_union(not_in, c.categories);
      } else if (kind == AttributeKind::MultiHot) {
        if (!in) in.emplace();
        set_union(*in, c.categories);
      } else if (!in) {
        in = c.categories;
      } else {
        std::vector<std::int32_t> both;
        std::set_intersection(in->begin(), in->end(), c.categories.begin(), c.categories.end(),
                              std::back_inserter(both));
        in = std::move(both);
      }
    }
    if (kind == AttributeKind::OneHot && in) {
      // At most one category is hot, so the exclusions only shrink the allowed set.
      std::vector<std::int32_t> allowed;
      std::set_difference(in->begin(), in->end(), not_in.begin(), not_in.end(),
                          std::back_inserter(allowed));
      in = std::move(allowed);
      not_in.clear();
      if (in->empty()) rule.dead = true;
    }
    if (kind == AttributeKind::MultiHot && in) {
      std::vector<std::int32_t> both;
      std::set_intersection(in->begin(), in->end(), not_in.begin(), not_in.end(),
                            std::back_inserter(both));
      if (!both.empty()) rule.dead = true;
    }
    if (in && !in->empty()) rule.clauses.push_back({slot, attribute, Comparator::InSet, 0.0, *in});
    if (!not_in.empty()) {
      rule.clauses.push_back({slot, attribute, Comparator::NotInSet, 0.0, not_in});
    }
  }
  std::sort(rule.clauses.begin(), rule.clauses.end());
  return rule;
}

// ---- pruning -------------------------------------------------------------------

std::map<AttributeGroup, Bits> mistake_sets(const Rule& rule, const SampleIndex& index) {
  std::map<AttributeGroup, Bits> out;
  const Bits wrong = ~index.label_bits(rule.label);
  for (const auto& c : rule.clauses) {
    if (out.count(c.group())) continue;
    out.emplace(c.group(), index.group_bits(rule, c.group()) & wrong);
  }
  return out;
}

double jaccard(const Bits& a, const Bits& b) {
  const auto uni = (a | b).count();
  if (uni == 0) return 1.0;
  return static_cast<double>((a & b).count()) / static_cast<double>(uni);
}

std::vector<std::size_t> louvain(const std::vector<std::vector<std::size_t>>& adjacency) {
  const std::size_t n = adjacency.size();
  std::vector<std::size_t> community(n);
  std::iota(community.begin(), community.end(), 0);
  std::vector<double> degree(n, 0.0);
  double two_m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    degree[i] = static_cast<double>(adjacency[i].size());
    two_m += degree[i];
  }
  if (two_m == 0.0) return community;
  std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto j : adjacency[i]) edge[i][j] = true;
  }
  auto modularity = [&] {
    double q = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (community[i] != community[j]) continue;
        q += (edge[i][j] ? 1.0 : 0.0) - degree[i] * degree[j] / two_m;
      }
    }
    return q / two_m;
  };

  // Each level moves whole groups; the first level's groups are single nodes.
  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[i] = {i};
  while (true) {
    bool improved = false;
    bool moved = true;
    while (moved) {
      moved = false;
      for (const auto& members : groups) {
        const std::size_t current = community[members.front()];
        std::set<std::size_t> candidates;
        for (const auto v : members) {
          for (const auto u : adjacency[v]) candidates.insert(community[u]);
        }
        double best_q = modularity();
        std::size_t best = current;
        for (const auto c : candidates) {
          if (c == current) continue;
          for (const auto v : members) community[v] = c;
          const double q = modularity();
          if (q > best_q + 1e-12) {
            best_q = q;
            best = c;
          }
          for (const auto v : members) community[v] = current;
        }
        if (best != current) {
          for (const auto v : members) community[v] = best;
          moved = true;
          improved = true;
        }
      }
    }
    if (!improved) break;
    std::map<std::size_t, std::vector<std::size_t>> merged;
    for (std::size_t i = 0; i < n; ++i) merged[community[i]].push_back(i);
    std::vector<std::vector<std::size_t>> next;
    for (auto& [c, members] : merged) next.push_back(std::move(members));
    std::sort(next.begin(), next.end());
    if (next.size() == groups.size()) break;
    groups = std::move(next);
  }
  // Dense ids ordered by lowest member.
  std::map<std::size_t, std::size_t> remap;
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = remap.emplace(community[i], remap.size()).first;
    out[i] = it->second;
  }
  return out;
}

Rule prune_attributes(Rule rule, const SampleIndex& index, double jaccard_threshold) {
  const auto mistakes = mistake_sets(rule, index);
  std::vector<AttributeGroup> groups;
  std::vector<const Bits*> sets;
  for (const auto& [g, bits] : mistakes) {
    groups.push_back(g);
    sets.push_back(&bits);
  }
  const std::size_t n = groups.size();
  std::vector<std::vector<std::size_t>> adjacency(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (jaccard(*sets[i], *sets[j]) > jaccard_threshold) {
        adjacency[i].push_back(j);
        adjacency[j].push_back(i);
      }
    }
  }
  const auto community = louvain(adjacency);
  std::map<std::size_t, std::size_t> representative;
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = representative.find(community[i]);
    if (it == representative.end()) {
      representative.emplace(community[i], i);
    } else if (sets[i]->count() > sets[it->second]->count()) {
      it->second = i;
    }
  }
  std::set<AttributeGroup> keep;
  for (const auto& [c, i] : representative) keep.insert(groups[i]);
  std::erase_if(rule.clauses, [&](const Clause& c) { return !keep.count(c.group()); });
  recompute_stats(rule, index);
  return rule;
}

// ---- dedupe and hashing ------------------------------------------------------

std::string canonical_string(const Rule& rule, const features::FeatureScheme& scheme) {
  std::vector<Clause> clauses = rule.clauses;
  std::sort(clauses.begin(), clauses.end());
  std::string out;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (i) out += " ∧ ";
    out += clauses[i].text(scheme);
  }
  return out + "→" + std::to_string(rule.label);
}

std::uint32_t fnv1a32(std::string_view bytes) {
  std::uint32_t h = 2166136261u;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 16777619u;
  }
  return h;
}

std::uint32_t hash_rule(const Rule& rule, const features::FeatureScheme& scheme) {
  return fnv1a32(canonical_string(rule, scheme));
}

std::string hash_hex(std::uint32_t hash) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", hash);
  return buf;
}

std::uint32_t parse_hash(std::string_view hex) {
  std::uint32_t v = 0;
  const auto res = std::from_chars(hex.data(), hex.data() + hex.size(), v, 16);
  if (hex.size() != 8 || res.ec != std::errc{} || res.ptr != hex.data() + hex.size()) {
    throw ConfigError("rule hash must be 8 hex digits: " + std::string(hex));
  }
  return v;
}

RuleSet dedupe(RuleSet rules, const features::FeatureScheme& scheme) {
  std::map<std::string, std::size_t> seen;
  std::vector<Rule> out;
  for (auto& r : rules.rules) {
    auto key = canonical_string(r, scheme);
    const auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(std::move(key), out.size());
      out.push_back(std::move(r));
    } else if (r.support > out[it->second].support) {
      out[it->second] = std::move(r);
    }
  }
  rules.rules = std::move(out);
  return rules;
}

void assign_hashes(RuleSet& rules, const features::FeatureScheme& scheme) {
  std::map<std::uint32_t, std::string> seen;
  for (auto& r : rules.rules) {
    std::sort(r.clauses.begin(), r.clauses.end());
    const auto text = canonical_string(r, scheme);
    r.hash = fnv1a32(text);
    const auto [it, inserted] = seen.emplace(r.hash, text);
    if (!inserted && it->second != text) {
      throw HashCollision("rules '" + it->second + "' and '" + text + "' share hash " +
                          hash_hex(r.hash));
    }
  }
}

RuleSet postprocess(RuleSet rules, const SampleIndex& index, const PostprocessOptions& options) {
  const auto& scheme = index.scheme();
  rules = filter_by_confidence(std::move(rules), options.confidence_threshold);
  for (auto& r : rules.rules) r = merge_clauses(std::move(r));
  std::erase_if(rules.rules, [](const Rule& r) { return r.dead; });
  rules.provenance.after_merge = rules.rules.size();
  if (options.prune) {
    for (auto& r : rules.rules) r = prune_attributes(std::move(r), index, options.jaccard_threshold);
  }
  std::erase_if(rules.rules, [](const Rule& r) { return r.support == 0; });
  rules.provenance.after_prune = rules.rules.size();
  rules.provenance.jaccard_threshold = options.jaccard_threshold;
  rules = dedupe(std::move(rules), scheme);
  assign_hashes(rules, scheme);
  std::stable_sort(rules.rules.begin(), rules.rules.end(), higher_priority);
  return rules;
}

bool higher_priority(const Rule& a, const Rule& b) {
  if (a.confidence != b.confidence) return a.confidence > b.confidence;
  if (a.support != b.support) return a.support > b.support;
  return a.hash < b.hash;
}

std::pair<std::size_t, std::size_t> training_precision(const RuleSet& rules,
                                                       const SampleIndex& index) {
  std::vector<const Rule*> order;
  for (const auto& r : rules.rules) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(),
                   [](const Rule* a, const Rule* b) { return higher_priority(*a, *b); });
  Bits remaining(index.size());
  remaining.set();
  std::size_t correct = 0;
  std::size_t predicted = 0;
  for (const Rule* r : order) {
    if (remaining.none()) break;
    const Bits claim = index.fired(*r) & remaining;
    predicted += claim.count();
    correct += (claim & index.label_bits(r->label)).count();
    remaining -= claim;
  }
  return {correct, predicted};
}

// ---- matching ------------------------------------------------------------------

Matcher::Matcher(const RuleSet& rules, const features::FeatureScheme& scheme,
                 double min_confidence, std::uint64_t min_support,
                 const std::set<std::uint32_t>& disabled)
    : scheme_(scheme), min_confidence_(min_confidence), min_support_(min_support),
      disabled_(disabled) {
  for (const auto& r : rules.rules) order_.push_back(&r);
  std::stable_sort(order_.begin(), order_.end(),
                   [](const Rule* a, const Rule* b) { return higher_priority(*a, *b); });
}

bool Matcher::enabled(const Rule& rule) const {
  return rule.confidence >= min_confidence_ && rule.support >= min_support_ &&
         !disabled_.count(rule.hash);
}

std::optional<Match> Matcher::match(const Eigen::VectorXd& x) const {
  for (const Rule* r : order_) {
    if (enabled(*r) && r->fires(scheme_, x)) return Match{r, r->label};
  }
  return std::nullopt;
}

std::optional<Match> Matcher::match_any(const Eigen::VectorXd& x) const {
  for (const Rule* r : order_) {
    if (r->fires(scheme_, x)) return Match{r, r->label};
  }
  return std::nullopt;
}

std::optional<Match> match_rules(const RuleSet& rules, const features::FeatureScheme& scheme,
                                 const Eigen::VectorXd& x) {
  return Matcher(rules, scheme).match(x);
}

Eigen::VectorXd dense(const features::SparseRow& x, std::size_t width) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(width));
  for (features::SparseRow::InnerIterator it(x); it; ++it) out[it.index()] = it.value();
  return out;
}

std::string dump(const RuleSet& rules, const features::FeatureScheme& scheme,
                 const features::LabelVocabulary& vocabulary) {
  std::vector<const Rule*> order;
  for (const auto& r : rules.rules) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(),
                   [](const Rule* a, const Rule* b) { return higher_priority(*a, *b); });
  std::ostringstream out;
  for (const Rule* r : order) {
    char conf[16];
    std::snprintf(conf, sizeof conf, "%.3f", r->confidence);
    out << hash_hex(r->hash) << "  " << conf << "  " << r->support << "  ";
    for (std::size_t i = 0; i < r->clauses.size(); ++i) {
      if (i) out << " ∧ ";
      out << r->clauses[i].text(scheme);
    }
    const std::string label = r->label < vocabulary.size()
                                  ? vocabulary.label(r->label).to_string()
                                  : std::to_string(r->label);
    out << (r->clauses.empty() ? "" : " ") << "⇒ " << label << "\n";
  }
  return out.str();
}

}  // namespace stylemine::rules
