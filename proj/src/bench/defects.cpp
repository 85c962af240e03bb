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


#include "stylemine/bench/defects.hpp"

#include <algorithm>

#include "stylemine/apply/apply.hpp"
#include "stylemine/apply/repository.hpp"
#include "stylemine/errors.hpp"
#include "stylemine/forest/random.hpp"
#include "stylemine/syntax/tree_ops.hpp"

namespace stylemine::bench {
namespace {

bool is_quote(char c) { return c == '\'' || c == '"'; }

struct Site {
  std::uint32_t begin;
  std::uint32_t end;
  std::string replacement;
  std::string description;
};

std::string splice(const std::string& text, const Site& site) {
  return text.substr(0, site.begin) + site.replacement + text.substr(site.end);
}

bool same_tree(const syntax::SyntaxTree& original, const std::string& mutated) {
  try {
    return syntax::structurally_equal(original, syntax::parse_file(mutated));
  } catch (const Error&) {
    return false;
  }
}

const syntax::SyntaxNode* node_of(const syntax::TokenStream& s, std::size_t i) {
  if (i >= s.tokens.size() || !s.tokens[i].is_semantic()) return nullptr;
  return &s.tree.node(s.tokens[i].node);
}

bool is_comment(const syntax::SyntaxNode* n) {
  return n != nullptr && (n->internal_type == "CommentLine" || n->internal_type == "CommentBlock");
}

/// Gaps between two semantic tokens on one line, excluding comment neighbours.
bool inline_gap(const syntax::TokenStream& s, std::size_t i) {
  const auto& t = s.tokens[i];
  if (!t.is_format() || i == 0 || i + 1 >= s.tokens.size()) return false;
  if (t.value.find('\n') != std::string::npos) return false;
  if (is_comment(node_of(s, i - 1)) || is_comment(node_of(s, i + 1))) return false;
  return node_of(s, i - 1) != nullptr && node_of(s, i + 1) != nullptr;
}

std::vector<Site> candidate_sites(const syntax::TokenStream& s, DefectKind kind,
                                  forest::Rng& rng) {
  std::vector<Site> sites;
  const bool insert = rng.below(2) == 0;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    const auto& t = s.tokens[i];
    const auto b = t.start.offset;
    const auto e = t.end.offset;
    switch (kind) {
      case DefectKind::Whitespace: {
        if (!inline_gap(s, i)) break;
        // Quote bytes stay; only the whitespace part of the gap changes.
        std::uint32_t lo = b;
        std::uint32_t hi = e;
        if (lo < hi && is_quote(s.source[hi - 1])) --hi;
        if (lo < hi && is_quote(s.source[lo])) ++lo;
        const auto ws = s.source.substr(lo, hi - lo);
        if (insert && ws.empty()) sites.push_back({lo, lo, " ", "insert space"});
        if (!insert && ws == " ") sites.push_back({lo, hi, "", "remove space"});
        break;
      }
      case DefectKind::Newline: {
        if (insert) {
          if (!inline_gap(s, i) || t.value.find_first_of("'\"") != std::string::npos) break;
          const auto indent = features::line_indent(s.source, b);
          sites.push_back({b, e, "\n" + std::string(indent), "insert newline"});
        } else {
          if (!t.is_format() || i == 0 || i + 1 >= s.tokens.size()) break;
          if (std::count(t.value.begin(), t.value.end(), '\n') != 1) break;
          if (t.value.find_first_of("'\"") != std::string::npos) break;
          if (is_comment(node_of(s, i - 1)) || is_comment(node_of(s, i + 1))) break;
          const auto* left = node_of(s, i - 1);
          if (left == nullptr || node_of(s, i + 1) == nullptr) break;
          const bool brace = left->value == "{" || node_of(s, i + 1)->value == "}";
          sites.push_back({b, e, brace ? "" : " ", "remove newline"});
        }
        break;
      }
      case DefectKind::Indentation: {
        if (!t.is_format() || i + 1 >= s.tokens.size() || node_of(s, i + 1) == nullptr) break;
        const auto nl = t.value.rfind('\n');
        if (nl == std::string::npos) break;
        const auto start = b + static_cast<std::uint32_t>(nl) + 1;
        const auto indent = s.source.substr(start, e - start);
        if (indent.empty()) break;
        const char unit = indent.back();
        if (insert) {
          sites.push_back({e, e, std::string(1, unit), "increase indentation"});
        } else {
          sites.push_back({e - 1, e, "", "decrease indentation"});
        }
        break;
      }
      case DefectKind::Quote: {
        const auto* n = node_of(s, i);
        if (n == nullptr || n->internal_type != "StringLiteral") break;
        if (i == 0 || i + 1 >= s.tokens.size()) break;
        if (b == 0 || e >= s.source.size()) break;
        const char q = s.source[b - 1];
        if (!is_quote(q) || s.source[e] != q) break;
        const char other = q == '"' ? '\'' : '"';
        if (t.value.find_first_of("'\"\\") != std::string::npos) break;
        // Both delimiters change; the site covers the literal.
        sites.push_back({b - 1, e + 1, std::string(1, other) + t.value + std::string(1, other),
                         std::string("swap quotes to ") + other});
        break;
      }
    }
  }
  return sites;
}

std::set<std::uint32_t> lines_of(const std::string& text, std::uint32_t begin, std::uint32_t end) {
  const syntax::LineIndex index(text);
  std::set<std::uint32_t> out;
  for (auto l = index.at(begin).line; l <= index.at(end).line; ++l) out.insert(l);
  return out;
}

}  // namespace

std::string_view defect_kind_name(DefectKind kind) {
  switch (kind) {
    case DefectKind::Whitespace:
      return "whitespace";
    case DefectKind::Newline:
      return "newline";
    case DefectKind::Indentation:
      return "indentation";
    case DefectKind::Quote:
      return "quote";
  }
  return "?";
}

std::size_t DefectSpec::total() const {
  std::size_t n = 0;
  for (const auto& [kind, count] : counts) n += count;
  return n;
}

Defect seed_defect(const cli::SourceFile& file, DefectKind kind, std::uint64_t seed) {
  const auto stream = syntax::tokenize(file.content);
  forest::Rng rng(seed);
  auto sites = candidate_sites(stream, kind, rng);
  rng.shuffle(sites);
  constexpr std::size_t kAttempts = 40;
  for (std::size_t a = 0; a < sites.size() && a < kAttempts; ++a) {
    const auto& site = sites[a];
    auto mutated = splice(file.content, site);
    if (mutated == file.content || !same_tree(stream.tree, mutated)) continue;
    Defect d;
    d.path = file.path;
    d.kind = kind;
    d.description = site.description;
    d.original = file.content;
    d.begin = site.begin;
    d.end = site.begin + static_cast<std::uint32_t>(site.replacement.size());
    d.restore = file.content.substr(site.begin, site.end - site.begin);
    d.changed_lines = lines_of(mutated, d.begin, d.end);
    d.mutated = std::move(mutated);
    return d;
  }
  throw NoEligibleSite(file.path + ": no site for a " + std::string(defect_kind_name(kind)) +
                       " defect");
}

DefectSet seed_defects(const std::vector<cli::SourceFile>& files, const DefectSpec& spec) {
  DefectSet out;
  std::vector<const cli::SourceFile*> order;
  for (const auto& f : files) order.push_back(&f);
  std::sort(order.begin(), order.end(),
            [](const auto* a, const auto* b) { return a->path < b->path; });
  forest::Rng rng(spec.seed);
  rng.shuffle(order);
  std::size_t next = 0;
  for (const auto& [kind, count] : spec.counts) {
    std::size_t made = 0;
    while (made < count && next < order.size()) {
      const auto* file = order[next++];
      try {
        out.defects.push_back(seed_defect(*file, kind, spec.seed * 7919 + next));
        ++made;
      } catch (const NoEligibleSite&) {
        out.skipped.push_back(file->path);
      } catch (const Error&) {
        out.skipped.push_back(file->path);
      }
    }
  }
  return out;
}

std::optional<bool> check_fix(const apply::Model& model, const Defect& defect,
                              const apply::AnalysisOptions& options) {
  const auto suggestions =
      apply::suggest(model, defect.path, defect.mutated, defect.changed_lines, options);
  if (suggestions.empty()) return std::nullopt;
  return apply::apply_suggestions(defect.mutated, suggestions) == defect.original;
}

std::vector<CurvePoint> defect_fixing_curve(const apply::Model& model,
                                            const std::vector<Defect>& defects,
                                            const apply::AnalysisOptions& options,
                                            std::vector<std::size_t> rule_counts) {
  rules::Matcher gate(model.rules, model.scheme, options.min_confidence, options.min_support,
                      options.blacklist);
  std::vector<const rules::Rule*> enabled;
  for (const auto& r : model.rules.rules) {
    if (gate.enabled(r)) enabled.push_back(&r);
  }
  std::stable_sort(enabled.begin(), enabled.end(),
                   [](const auto* a, const auto* b) { return rules::higher_priority(*a, *b); });
  if (rule_counts.empty()) {
    constexpr std::size_t kSteps = 20;
    for (std::size_t i = 0; i <= kSteps; ++i) rule_counts.push_back(enabled.size() * i / kSteps);
  }
  std::sort(rule_counts.begin(), rule_counts.end());
  rule_counts.erase(std::unique(rule_counts.begin(), rule_counts.end()), rule_counts.end());

  std::vector<CurvePoint> curve;
  for (const auto n : rule_counts) {
    CurvePoint p;
    p.n_rules = std::min(n, enabled.size());
    p.min_confidence = p.n_rules == 0 ? 1.0 : enabled[p.n_rules - 1]->confidence;
    auto limited = options;
    limited.rule_limit = p.n_rules;
    if (p.n_rules > 0) {
      for (const auto& d : defects) {
        const auto fixed = check_fix(model, d, limited);
        if (!fixed) continue;
        ++p.proposed;
        if (*fixed) ++p.correct;
      }
    }
    p.precision = p.proposed == 0 ? 1.0 : static_cast<double>(p.correct) / p.proposed;
    p.pred_rate =
        defects.empty() ? 0.0 : static_cast<double>(p.proposed) / static_cast<double>(defects.size());
    curve.push_back(p);
  }
  return curve;
}

}  // namespace stylemine::bench
