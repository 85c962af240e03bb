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


#ifndef STYLEMINE_RULES_RULES_HPP
#define STYLEMINE_RULES_RULES_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <Eigen/Core>

#include "stylemine/features/scheme.hpp"
#include "stylemine/forest/forest.hpp"

namespace stylemine::rules {

enum class Comparator : std::uint8_t { LE, GT, InSet, NotInSet };

/// (context slot, attribute): the unit that clauses are merged and pruned by.
using AttributeGroup = std::pair<features::Slot, features::Attribute>;

struct Clause {
  features::Slot slot;
  features::Attribute attribute = features::Attribute::Length;
  Comparator op = Comparator::LE;
  double threshold = 0.0;                 // numeric comparators
  std::vector<std::int32_t> categories;   // set comparators, ascending

  AttributeGroup group() const { return {slot, attribute}; }
  /// e.g. "-1.length <= 3.5" or "+1.internal_type not in {StringLiteral}".
  std::string text(const features::FeatureScheme& scheme) const;
  bool evaluate(const features::FeatureScheme& scheme, const Eigen::VectorXd& x) const;

  friend bool operator==(const Clause&, const Clause&) = default;
  friend auto operator<=>(const Clause&, const Clause&) = default;
};

struct Rule {
  std::vector<Clause> clauses;
  std::uint32_t label = 0;
  double confidence = 0.0;
  std::uint64_t support = 0;
  std::uint32_t hash = 0;
  std::uint32_t tree = 0;  // tree the rule was extracted from
  bool dead = false;

  bool fires(const features::FeatureScheme& scheme, const Eigen::VectorXd& x) const;
  std::size_t length() const { return clauses.size(); }
};

struct Provenance {
  std::uint64_t seed = 0;
  double confidence_threshold = 0.92;
  double jaccard_threshold = 0.98;
  std::size_t extracted = 0;
  std::size_t after_filter = 0;
  std::size_t after_merge = 0;
  std::size_t after_prune = 0;
};

struct RuleSet {
  std::vector<Rule> rules;
  Provenance provenance;

  double average_length() const;
};

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Clause evaluation over every row of a training dataset at once.
class SampleIndex {
 public:
  SampleIndex(const forest::Dataset& data, const features::FeatureScheme& scheme);

  std::size_t size() const { return data_.rows(); }
  Bits clause_bits(const Clause& clause) const;
  Bits group_bits(const Rule& rule, const AttributeGroup& group) const;
  Bits fired(const Rule& rule) const;
  const Bits& label_bits(std::uint32_t label) const { return labels_[label]; }
  const forest::Dataset& data() const { return data_; }
  const features::FeatureScheme& scheme() const { return scheme_; }

 private:
  /// Column of the key in the dataset, or -1 when the key was not selected.
  std::int64_t column(std::int64_t key) const;
  void column_test(std::int64_t key, Bits& out, bool want_nonzero, bool conjunctive) const;

  const forest::Dataset& data_;
  const features::FeatureScheme& scheme_;
  std::vector<Bits> labels_;
};

/// Recomputes support and confidence from the fired set; zero firings give
/// confidence 0.
void recompute_stats(Rule& rule, const SampleIndex& index);

/// One rule per root-to-leaf path of every tree. Labels are leaf majorities;
/// support and confidence come from replaying every training row.
RuleSet extract_rules(const forest::Forest& forest, const SampleIndex& index);

RuleSet filter_by_confidence(RuleSet rules, double threshold);

/// At most one LE and one GT per numeric attribute, one IN and/or one NOT_IN
/// per categorical attribute. Sets `dead` when the conjunction is empty.
Rule merge_clauses(Rule rule);

/// Samples that satisfy the group's clauses but carry another label.
std::map<AttributeGroup, Bits> mistake_sets(const Rule& rule, const SampleIndex& index);

double jaccard(const Bits& a, const Bits& b);

/// Multilevel modularity optimisation on an unweighted graph given as an
/// adjacency list. Returns a community id per node; ids are dense and
/// ordered by each community's lowest node.
std::vector<std::size_t> louvain(const std::vector<std::vector<std::size_t>>& adjacency);

/// Keeps one attribute group per community of near-identical mistake sets.
Rule prune_attributes(Rule rule, const SampleIndex& index, double jaccard_threshold = 0.98);

/// Collapses rules with equal canonical strings, keeping the largest support.
RuleSet dedupe(RuleSet rules, const features::FeatureScheme& scheme);

/// Clause texts in canonical order joined by " ∧ ", then "→" and the label.
std::string canonical_string(const Rule& rule, const features::FeatureScheme& scheme);
std::uint32_t fnv1a32(std::string_view bytes);
std::uint32_t hash_rule(const Rule& rule, const features::FeatureScheme& scheme);
std::string hash_hex(std::uint32_t hash);
std::uint32_t parse_hash(std::string_view hex);

/// Sorts clauses canonically and sets every hash. Throws HashCollision when
/// two rules share a hash.
void assign_hashes(RuleSet& rules, const features::FeatureScheme& scheme);

struct PostprocessOptions {
  double confidence_threshold = 0.92;
  double jaccard_threshold = 0.98;
  bool prune = true;
};

/// filter -> merge -> drop dead -> prune -> drop silent -> dedupe -> hash.
RuleSet postprocess(RuleSet rules, const SampleIndex& index, const PostprocessOptions& options);

/// Precision of most-confident-rule matching over the index rows:
/// (correct, predicted).
std::pair<std::size_t, std::size_t> training_precision(const RuleSet& rules,
                                                       const SampleIndex& index);

/// Orders rules by confidence, then support, then lower hash.
bool higher_priority(const Rule& a, const Rule& b);

struct Match {
  const Rule* rule = nullptr;
  std::uint32_t label = 0;
};

/// Evaluates rules in priority order and returns the first that fires.
class Matcher {
 public:
  Matcher(const RuleSet& rules, const features::FeatureScheme& scheme,
          double min_confidence = 0.0, std::uint64_t min_support = 0,
          const std::set<std::uint32_t>& disabled = {});

  std::optional<Match> match(const Eigen::VectorXd& x) const;
  /// Like match(), ignoring thresholds and the disabled set.
  std::optional<Match> match_any(const Eigen::VectorXd& x) const;
  bool enabled(const Rule& rule) const;
  std::size_t size() const { return order_.size(); }

 private:
  const features::FeatureScheme& scheme_;
  std::vector<const Rule*> order_;
  double min_confidence_;
  std::uint64_t min_support_;
  std::set<std::uint32_t> disabled_;
};

std::optional<Match> match_rules(const RuleSet& rules, const features::FeatureScheme& scheme,
                                 const Eigen::VectorXd& x);

/// Densifies a sparse sample row.
Eigen::VectorXd dense(const features::SparseRow& x, std::size_t width);

/// One rule per line: `hash  confidence  support  clause ∧ ... ⇒ label`.
std::string dump(const RuleSet& rules, const features::FeatureScheme& scheme,
                 const features::LabelVocabulary& vocabulary);

}  // namespace stylemine::rules

#endif  // STYLEMINE_RULES_RULES_HPP
