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


#include "stylemine/apply/apply.hpp"

#include <algorithm>
#include <future>
#include <map>

#include <json.hpp>
#include <spdlog/spdlog.h>

#include "stylemine/errors.hpp"
#include "stylemine/syntax/tree_ops.hpp"

namespace stylemine::apply {
namespace {

using features::Atom;
using features::CompoundLabel;

bool is_quote(Atom a) { return a == Atom::QuoteSingle || a == Atom::QuoteDouble; }

std::optional<Atom> leading_quote(const CompoundLabel& label) {
  if (!label.atoms.empty() && is_quote(label.atoms.front())) return label.atoms.front();
  return std::nullopt;
}

std::optional<Atom> trailing_quote(const CompoundLabel& label) {
  if (!label.atoms.empty() && is_quote(label.atoms.back())) return label.atoms.back();
  return std::nullopt;
}

std::size_t quote_count(const CompoundLabel& label) {
  return static_cast<std::size_t>(std::count_if(label.atoms.begin(), label.atoms.end(), is_quote));
}

/// A prediction can only replace a gap when quotes stay where strings need them.
bool same_quote_layout(const CompoundLabel& y, const CompoundLabel& y_hat) {
  return leading_quote(y).has_value() == leading_quote(y_hat).has_value() &&
         trailing_quote(y).has_value() == trailing_quote(y_hat).has_value() &&
         quote_count(y) == quote_count(y_hat);
}

bool is_quoted_string(const syntax::TokenStream& stream, std::size_t i) {
  const auto& t = stream.tokens[i];
  if (!t.is_semantic() || stream.tree.node(t.node).internal_type != "StringLiteral") return false;
  if (i == 0 || i + 1 >= stream.tokens.size()) return false;
  const auto& left = stream.tokens[i - 1].value;
  const auto& right = stream.tokens[i + 1].value;
  return !left.empty() && !right.empty() && (left.back() == '\'' || left.back() == '"') &&
         (right.front() == '\'' || right.front() == '"');
}

rules::RuleSet enabled_prefix(const Model& model, const AnalysisOptions& options) {
  rules::RuleSet out;
  out.provenance = model.rules.provenance;
  rules::Matcher gate(model.rules, model.scheme, options.min_confidence, options.min_support,
                      options.blacklist);
  for (const auto& r : model.rules.rules) {
    if (gate.enabled(r)) out.rules.push_back(r);
  }
  std::stable_sort(out.rules.begin(), out.rules.end(), rules::higher_priority);
  if (options.rule_limit && out.rules.size() > *options.rule_limit) {
    out.rules.resize(*options.rule_limit);
  }
  return out;
}

}  // namespace

std::vector<Prediction> analyze_stream(const Model& model, const syntax::TokenStream& stream,
                                       const AnalysisOptions& options,
                                       const std::set<std::uint32_t>* lines) {
  std::vector<Prediction> out;
  const auto active = enabled_prefix(model, options);
  if (active.rules.empty()) return out;
  const rules::Matcher matcher(active, model.scheme);
  const auto gaps = features::label_gaps(stream, model.compound_cap);
  const auto token_labels = features::token_label_indices(stream, model.vocabulary, gaps);
  for (const auto& g : gaps) {
    if (g.dropped == features::DropReason::UnsupportedCharacter ||
        g.dropped == features::DropReason::MultilineNeighbour) {
      continue;
    }
    if (lines != nullptr) {
      const auto& t = stream.tokens[g.token];
      const auto it = lines->lower_bound(t.start.line);
      if (it == lines->end() || *it > t.end.line) continue;
    }
    const auto x = rules::dense(features::gap_features(stream, g.token, model.scheme, token_labels),
                                model.scheme.width());
    const auto match = matcher.match(x);
    if (!match) continue;
    Prediction p;
    p.position = stream.tokens[g.token].start;
    p.gap = g.token;
    p.y = g.label;
    p.y_hat = model.vocabulary.label(match->label);
    p.rule_hash = match->rule->hash;
    p.confidence = match->rule->confidence;
    p.support = match->rule->support;
    p.agreement = p.y == *p.y_hat;
    out.push_back(std::move(p));
  }
  return out;
}

FileAnalysis analyze_file(const Model& model, std::string content, const AnalysisOptions& options,
                          const std::set<std::uint32_t>* lines) {
  if (content.size() > options.max_bytes) {
    throw SizeExceeded("file of " + std::to_string(content.size()) + " bytes exceeds the " +
                       std::to_string(options.max_bytes) + " byte analysis cap");
  }
  FileAnalysis out;
  auto tree = syntax::parse_file(content, model.language);
  out.stream = syntax::build_token_stream(std::move(tree), std::move(content));
  out.predictions = analyze_stream(model, out.stream, options, lines);
  return out;
}

std::vector<Prediction> resolve_quote_pairs(std::vector<Prediction> predictions,
                                            const syntax::TokenStream& stream) {
  std::map<std::size_t, std::size_t> by_gap;
  for (std::size_t i = 0; i < predictions.size(); ++i) by_gap[predictions[i].gap] = i;
  auto find = [&](std::size_t gap) -> Prediction* {
    const auto it = by_gap.find(gap);
    if (it == by_gap.end() || !predictions[it->second].y_hat) return nullptr;
    return &predictions[it->second];
  };
  const auto labels = features::label_gaps(stream);
  std::map<std::size_t, const features::GapLabel*> gap_label;
  for (const auto& g : labels) gap_label[g.token] = &g;

  std::vector<Prediction> mirrored;
  for (std::size_t i = 1; i + 1 < stream.tokens.size(); ++i) {
    if (!is_quoted_string(stream, i)) continue;
    Prediction* left = find(i - 1);
    Prediction* right = find(i + 1);
    const auto lq = left ? trailing_quote(*left->y_hat) : std::nullopt;
    const auto rq = right ? leading_quote(*right->y_hat) : std::nullopt;
    if (lq && rq) {
      if (*lq == *rq) continue;
      const bool left_wins = left->confidence >= right->confidence;
      if (left_wins) {
        right->y_hat->atoms.front() = *lq;
        right->agreement = right->y == *right->y_hat;
      } else {
        left->y_hat->atoms.back() = *rq;
        left->agreement = left->y == *left->y_hat;
      }
      continue;
    }
    if (lq == rq) continue;
    // One side predicts a quote: the partner follows it.
    const Prediction& source = lq ? *left : *right;
    const std::size_t partner_gap = lq ? i + 1 : i - 1;
    Prediction* partner = lq ? right : left;
    const auto it = gap_label.find(partner_gap);
    if (partner != nullptr) {
      // The partner prediction dropped its quote; it cannot be rendered.
      continue;
    }
    if (it == gap_label.end() || it->second->label.atoms.empty()) continue;
    Prediction p;
    p.position = stream.tokens[partner_gap].start;
    p.gap = partner_gap;
    p.y = it->second->label;
    p.y_hat = p.y;
    auto& atoms = p.y_hat->atoms;
    if (lq) {
      if (!is_quote(atoms.front())) continue;
      atoms.front() = *lq;
    } else {
      if (!is_quote(atoms.back())) continue;
      atoms.back() = *rq;
    }
    p.rule_hash = source.rule_hash;
    p.confidence = source.confidence;
    p.support = source.support;
    p.agreement = p.y == *p.y_hat;
    p.mirrored = true;
    mirrored.push_back(std::move(p));
  }
  for (auto& p : mirrored) predictions.push_back(std::move(p));
  std::stable_sort(predictions.begin(), predictions.end(),
                   [](const Prediction& a, const Prediction& b) { return a.gap < b.gap; });
  return predictions;
}

std::vector<FixCandidate> generate_fixes(const syntax::TokenStream& stream,
                                         const std::vector<Prediction>& predictions) {
  std::vector<FixCandidate> out;
  const syntax::LineIndex lines(stream.source);
  const std::string_view source(stream.source);
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const auto& p = predictions[i];
    if (!p.y_hat || p.agreement) continue;
    if (!same_quote_layout(p.y, *p.y_hat)) continue;
    const auto& token = stream.tokens[p.gap];
    std::string rendered;
    try {
      rendered = features::render_label(*p.y_hat,
                                        features::line_indent(source, token.start.offset));
    } catch (const RenderError& e) {
      spdlog::debug("dropping prediction at {}:{}: {}", p.position.line, p.position.column,
                    e.what());
      continue;
    }
    const std::string_view original(token.value);
    if (rendered == original) continue;
    std::size_t prefix = 0;
    while (prefix < original.size() && prefix < rendered.size() &&
           original[prefix] == rendered[prefix]) {
      ++prefix;
    }
    std::size_t suffix = 0;
    while (suffix < original.size() - prefix && suffix < rendered.size() - prefix &&
           original[original.size() - 1 - suffix] == rendered[rendered.size() - 1 - suffix]) {
      ++suffix;
    }
    FixCandidate fix;
    fix.begin = token.start.offset + static_cast<std::uint32_t>(prefix);
    fix.end = token.end.offset - static_cast<std::uint32_t>(suffix);
    fix.replacement = rendered.substr(prefix, rendered.size() - prefix - suffix);
    fix.prediction = i;
    fix.gap = p.gap;
    fix.first_line = lines.at(fix.begin).line;
    fix.last_line = lines.at(fix.end).line;
    out.push_back(std::move(fix));
  }
  return out;
}

std::vector<std::vector<FixCandidate>> group_by_line(std::vector<FixCandidate> fixes) {
  std::sort(fixes.begin(), fixes.end(),
            [](const FixCandidate& a, const FixCandidate& b) { return a.begin < b.begin; });
  std::vector<std::vector<FixCandidate>> groups;
  std::uint32_t last_line = 0;
  for (auto& f : fixes) {
    if (groups.empty() || f.first_line > last_line) {
      groups.emplace_back();
      last_line = f.last_line;
    }
    last_line = std::max(last_line, f.last_line);
    groups.back().push_back(std::move(f));
  }
  return groups;
}

std::string apply_fixes(std::string_view content, const std::vector<FixCandidate>& fixes) {
  std::vector<const FixCandidate*> order;
  for (const auto& f : fixes) order.push_back(&f);
  std::sort(order.begin(), order.end(),
            [](const FixCandidate* a, const FixCandidate* b) { return a->begin < b->begin; });
  std::string out;
  std::uint32_t cursor = 0;
  for (const auto* f : order) {
    out.append(content.substr(cursor, f->begin - cursor));
    out += f->replacement;
    cursor = f->end;
  }
  out.append(content.substr(cursor));
  return out;
}

bool edits_preserve_tree(const syntax::TokenStream& stream, const std::vector<FixCandidate>& fixes,
                         syntax::Language language) {
  if (fixes.empty()) return true;
  const auto& tree = stream.tree;
  const std::string_view source(stream.source);
  std::uint32_t begin = fixes.front().begin;
  std::uint32_t end = fixes.front().end;
  for (const auto& f : fixes) {
    begin = std::min(begin, f.begin);
    end = std::max(end, f.end);
  }
  auto id = syntax::enclosing_parseable_span(tree, source, begin, end, language);
  auto span_of = [&](syntax::NodeId n) {
    if (n == tree.root()) return std::pair<std::uint32_t, std::uint32_t>{0, source.size()};
    return std::pair{tree.node(n).start.offset, tree.node(n).end.offset};
  };
  while (id != tree.root()) {
    const auto [b, e] = span_of(id);
    if (b <= begin && end <= e && syntax::parses(source.substr(b, e - b), language)) break;
    id = tree.node(id).parent;
  }
  const auto [b, e] = span_of(id);
  std::vector<FixCandidate> shifted = fixes;
  for (auto& f : shifted) {
    f.begin -= b;
    f.end -= b;
  }
  const auto original = source.substr(b, e - b);
  try {
    const auto before = syntax::parse_file(original, language);
    const auto after = syntax::parse_file(apply_fixes(original, shifted), language);
    return syntax::structurally_equal(before, after);
  } catch (const Error&) {
    return false;
  }
}

std::vector<FixCandidate> verify_ast_safety(const syntax::TokenStream& stream,
                                            std::vector<FixCandidate> fixes,
                                            syntax::Language language, bool parallel) {
  std::map<std::size_t, std::size_t> by_gap;
  for (std::size_t i = 0; i < fixes.size(); ++i) by_gap[fixes[i].gap] = i;
  std::vector<char> alone_ok(fixes.size(), 0);
  std::vector<char> done(fixes.size(), 0);
  for (std::size_t i = 0; i < fixes.size(); ++i) {
    if (done[i]) continue;
    std::vector<FixCandidate> unit{fixes[i]};
    std::vector<std::size_t> members{i};
    const auto g = fixes[i].gap;
    if (g + 1 < stream.tokens.size() && is_quoted_string(stream, g + 1)) {
      const auto it = by_gap.find(g + 2);
      if (it != by_gap.end()) {
        unit.push_back(fixes[it->second]);
        members.push_back(it->second);
      }
    }
    const bool ok = edits_preserve_tree(stream, unit, language);
    for (const auto m : members) {
      done[m] = 1;
      alone_ok[m] = ok;
    }
  }
  std::vector<FixCandidate> kept;
  for (std::size_t i = 0; i < fixes.size(); ++i) {
    if (alone_ok[i]) kept.push_back(std::move(fixes[i]));
  }
  fixes = std::move(kept);
  auto groups = group_by_line(std::move(fixes));
  std::vector<char> keep(groups.size(), 1);
  auto check = [&](std::size_t g) {
    keep[g] = groups[g].size() < 2 || edits_preserve_tree(stream, groups[g], language);
  };
  if (parallel) {
    std::vector<std::future<void>> jobs;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      jobs.push_back(std::async(std::launch::async, check, g));
    }
    for (auto& j : jobs) j.get();
  } else {
    for (std::size_t g = 0; g < groups.size(); ++g) check(g);
  }
  std::vector<FixCandidate> out;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (!keep[g]) continue;
    for (auto& f : groups[g]) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Suggestion> suggest(const Model& model, const std::string& path, std::string content,
                                const std::optional<std::set<std::uint32_t>>& changed_lines,
                                const AnalysisOptions& options) {
  auto analysis = analyze_file(model, std::move(content), options,
                               changed_lines ? &*changed_lines : nullptr);
  const auto& stream = analysis.stream;
  const auto predictions = resolve_quote_pairs(std::move(analysis.predictions), stream);
  auto fixes = generate_fixes(stream, predictions);
  if (changed_lines) {
    std::erase_if(fixes, [&](const FixCandidate& f) {
      for (auto line = f.first_line; line <= f.last_line; ++line) {
        if (!changed_lines->count(line)) return true;
      }
      return false;
    });
  }
  fixes = verify_ast_safety(stream, std::move(fixes), model.language, options.parallel_verify);

  const syntax::LineIndex lines(stream.source);
  const std::string_view source(stream.source);
  std::vector<Suggestion> out;
  for (auto& group : group_by_line(std::move(fixes))) {
    Suggestion s;
    s.file = path;
    s.line_start = group.front().first_line;
    s.line_end = group.front().last_line;
    for (const auto& f : group) s.line_end = std::max(s.line_end, f.last_line);
    const auto b = lines.line_start(s.line_start);
    const auto e = lines.line_end(s.line_end);
    s.original = std::string(source.substr(b, e - b));
    std::vector<FixCandidate> shifted = group;
    for (auto& f : shifted) {
      f.begin -= b;
      f.end -= b;
    }
    s.suggestion = apply_fixes(s.original, shifted);
    if (s.suggestion == s.original) continue;
    for (const auto& f : group) {
      const auto& p = predictions[f.prediction];
      s.edits.push_back({f.begin, f.end, f.replacement, p.rule_hash, p.confidence});
      if (s.edits.size() == 1 || p.confidence > s.confidence ||
          (p.confidence == s.confidence && p.rule_hash < s.rule_hash)) {
        s.rule_hash = p.rule_hash;
        s.confidence = p.confidence;
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string apply_suggestions(std::string_view content, const std::vector<Suggestion>& suggestions) {
  const syntax::LineIndex lines(content);
  std::vector<FixCandidate> fixes;
  for (const auto& s : suggestions) {
    FixCandidate f;
    f.begin = lines.line_start(s.line_start);
    f.end = lines.line_end(s.line_end);
    f.replacement = s.suggestion;
    fixes.push_back(std::move(f));
  }
  return apply_fixes(content, fixes);
}

namespace {

void append_lines(std::string& out, char prefix, std::string_view text) {
  std::size_t start = 0;
  while (true) {
    const auto nl = text.find('\n', start);
    out += prefix;
    out.append(text.substr(start, nl == std::string_view::npos ? nl : nl - start));
    out += '\n';
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
}

}  // namespace

std::string format_text(const std::vector<Suggestion>& suggestions) {
  std::string out;
  for (const auto& s : suggestions) {
    std::vector<std::uint32_t> hashes;
    for (const auto& e : s.edits) {
      if (std::find(hashes.begin(), hashes.end(), e.rule_hash) == hashes.end()) {
        hashes.push_back(e.rule_hash);
      }
    }
    if (hashes.empty()) hashes.push_back(s.rule_hash);
    for (const auto h : hashes) out += "[" + rules::hash_hex(h) + "] ";
    out += s.file + ":" + std::to_string(s.line_start);
    if (s.line_end != s.line_start) out += "-" + std::to_string(s.line_end);
    char conf[32];
    std::snprintf(conf, sizeof conf, " (confidence %.3f)\n", s.confidence);
    out += conf;
    append_lines(out, '-', s.original);
    append_lines(out, '+', s.suggestion);
  }
  return out;
}

std::string format_json(const std::vector<Suggestion>& suggestions) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& s : suggestions) {
    doc.push_back({{"file", s.file},
                   {"line_start", s.line_start},
                   {"line_end", s.line_end},
                   {"original", s.original},
                   {"suggestion", s.suggestion},
                   {"rule_hash", rules::hash_hex(s.rule_hash)},
                   {"confidence", s.confidence}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace stylemine::apply
