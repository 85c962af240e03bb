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


#ifndef STYLEMINE_APPLY_MODEL_HPP
#define STYLEMINE_APPLY_MODEL_HPP

#include <cstdint>
#include <optional>
#include <set>

#include "stylemine/features/labels.hpp"
#include "stylemine/features/scheme.hpp"
#include "stylemine/features/vocabulary.hpp"
#include "stylemine/forest/forest.hpp"
#include "stylemine/rules/rules.hpp"
#include "stylemine/syntax/parser.hpp"

namespace stylemine::apply {

inline constexpr std::size_t kAnalysisByteCap = 2u << 20;

/// Everything analysis needs; no access to the training corpus.
struct Model {
  syntax::Language language = syntax::Language::JavaScript;
  features::LabelVocabulary vocabulary;
  features::FeatureScheme scheme;
  std::optional<forest::Forest> forest;
  rules::RuleSet rules;
  std::size_t compound_cap = features::kDefaultCompoundCap;
};

struct AnalysisOptions {
  double min_confidence = 0.92;
  std::uint64_t min_support = 0;
  std::set<std::uint32_t> blacklist;
  /// Per-file and per-changeset byte budget.
  std::size_t max_bytes = kAnalysisByteCap;
  /// Only the first `rule_limit` rules in priority order may fire.
  std::optional<std::size_t> rule_limit;
  /// Verify line groups concurrently.
  bool parallel_verify = false;
};

}  // namespace stylemine::apply

#endif  // STYLEMINE_APPLY_MODEL_HPP
