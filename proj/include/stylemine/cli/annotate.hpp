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


#ifndef STYLEMINE_CLI_ANNOTATE_HPP
#define STYLEMINE_CLI_ANNOTATE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stylemine/apply/model.hpp"
#include "stylemine/syntax/tree.hpp"

namespace stylemine::cli {

inline constexpr int kAnnotationFormatVersion = 1;

enum class Agreement : std::uint8_t { Match, Mismatch, Disabled };

std::string_view agreement_name(Agreement agreement);

struct GapRecord {
  std::size_t gap = 0;
  syntax::Position position;
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
  features::CompoundLabel observed;
  std::optional<features::CompoundLabel> predicted;
  Agreement agreement = Agreement::Disabled;
  /// False when no rule fires at all, even ignoring thresholds.
  bool has_rule = false;
  std::uint32_t rule_hash = 0;
  double confidence = 0.0;
  std::uint64_t support = 0;
  std::vector<std::string> clauses;
};

struct AnnotationDocument {
  std::string path;
  std::string source;
  double confidence_threshold = 0.0;
  std::uint64_t support_threshold = 0;
  std::set<std::uint32_t> blacklist;
  std::size_t n_rules = 0;
  std::string language;
  int taxonomy_version = 0;
  std::vector<GapRecord> records;
};

struct AnnotationOptions {
  double min_confidence = 0.92;
  std::uint64_t min_support = 0;
  std::set<std::uint32_t> blacklist;
};

/// One record per labelled gap. The first enabled rule that fires decides
/// match or mismatch. Without one, the record is disabled and describes the
/// rule that would fire if thresholds and the blacklist were ignored.
/// Throws ParseError and EncodingError.
AnnotationDocument annotate(const apply::Model& model, const std::string& path,
                            std::string source, const AnnotationOptions& options);

/// JSON schema:
/// {format_version, file, source, model: {language, taxonomy_version,
///  n_rules}, thresholds: {confidence, support}, blacklist: [hex],
///  records: [{gap, line, column, offset, begin, end, observed,
///  predicted|null, agreement, rule|null: {hash, confidence, support,
///  clauses}}]}
/// Labels are written as atom names joined by '+'.
std::string to_json(const AnnotationDocument& document);

}  // namespace stylemine::cli

#endif  // STYLEMINE_CLI_ANNOTATE_HPP
