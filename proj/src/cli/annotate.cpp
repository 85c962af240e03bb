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


#include "stylemine/cli/annotate.hpp"

#include <json.hpp>

#include "stylemine/syntax/parser.hpp"
#include "stylemine/syntax/token_stream.hpp"

namespace stylemine::cli {

std::string_view agreement_name(Agreement agreement) {
  switch (agreement) {
    case Agreement::Match:
      return "match";
    case Agreement::Mismatch:
      return "mismatch";
    case Agreement::Disabled:
      return "disabled";
  }
  return "disabled";
}

AnnotationDocument annotate(const apply::Model& model, const std::string& path,
                            std::string source, const AnnotationOptions& options) {
  AnnotationDocument doc;
  doc.path = path;
  doc.source = source;
  doc.confidence_threshold = options.min_confidence;
  doc.support_threshold = options.min_support;
  doc.blacklist = options.blacklist;
  doc.n_rules = model.rules.rules.size();
  doc.language = std::string(syntax::language_name(model.language));
  doc.taxonomy_version = syntax::RoleTaxonomy::javascript().version();

  auto tree = syntax::parse_file(source, model.language);
  const auto stream = syntax::build_token_stream(std::move(tree), std::move(source));
  const rules::Matcher matcher(model.rules, model.scheme, options.min_confidence,
                               options.min_support, options.blacklist);
  const auto gaps = features::label_gaps(stream, model.compound_cap);
  const auto token_labels = features::token_label_indices(stream, model.vocabulary, gaps);

  for (const auto& g : gaps) {
    if (g.dropped == features::DropReason::UnsupportedCharacter) continue;
    const auto& token = stream.tokens[g.token];
    GapRecord r;
    r.gap = g.token;
    r.position = token.start;
    r.begin = token.start.offset;
    r.end = token.end.offset;
    r.observed = g.label;
    if (g.dropped != features::DropReason::MultilineNeighbour) {
      const auto x = rules::dense(
          features::gap_features(stream, g.token, model.scheme, token_labels),
          model.scheme.width());
      auto hit = matcher.match(x);
      const bool enabled = hit.has_value();
      if (!hit) hit = matcher.match_any(x);
      if (hit) {
        const auto& rule = *hit->rule;
        r.has_rule = true;
        r.rule_hash = rule.hash;
        r.confidence = rule.confidence;
        r.support = rule.support;
        for (const auto& c : rule.clauses) r.clauses.push_back(c.text(model.scheme));
        if (enabled) {
          r.predicted = model.vocabulary.label(hit->label);
          r.agreement = *r.predicted == r.observed ? Agreement::Match : Agreement::Mismatch;
        }
      }
    }
    doc.records.push_back(std::move(r));
  }
  return doc;
}

std::string to_json(const AnnotationDocument& document) {
  using nlohmann::ordered_json;
  ordered_json records = ordered_json::array();
  for (const auto& r : document.records) {
    ordered_json j{{"gap", r.gap},
                   {"line", r.position.line},
                   {"column", r.position.column},
                   {"offset", r.position.offset},
                   {"begin", r.begin},
                   {"end", r.end},
                   {"observed", r.observed.to_string()},
                   {"predicted", nullptr},
                   {"agreement", std::string(agreement_name(r.agreement))},
                   {"rule", nullptr}};
    if (r.predicted) j["predicted"] = r.predicted->to_string();
    if (r.has_rule) {
      j["rule"] = {{"hash", rules::hash_hex(r.rule_hash)},
                   {"confidence", r.confidence},
                   {"support", r.support},
                   {"clauses", r.clauses}};
    }
    records.push_back(std::move(j));
  }
  ordered_json blacklist = ordered_json::array();
  for (const auto h : document.blacklist) blacklist.push_back(rules::hash_hex(h));
  const ordered_json doc{{"format_version", kAnnotationFormatVersion},
                         {"file", document.path},
                         {"source", document.source},
                         {"model",
                          {{"language", document.language},
                           {"taxonomy_version", document.taxonomy_version},
                           {"n_rules", document.n_rules}}},
                         {"thresholds",
                          {{"confidence", document.confidence_threshold},
                           {"support", document.support_threshold}}},
                         {"blacklist", blacklist},
                         {"records", records}};
  return doc.dump();
}

}  // namespace stylemine::cli
