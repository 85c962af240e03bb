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


#ifndef STYLEMINE_APPLY_APPLY_HPP
#define STYLEMINE_APPLY_APPLY_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "stylemine/apply/model.hpp"
#include "stylemine/syntax/token_stream.hpp"

namespace stylemine::apply {

struct Prediction {
  syntax::Position position;  // start of the gap
  std::size_t gap = 0;        // token index in the stream
  features::CompoundLabel y;
  std::optional<features::CompoundLabel> y_hat;
  std::uint32_t rule_hash = 0;
  double confidence = 0.0;
  std::uint64_t support = 0;
  bool agreement = false;
  /// Copied from the partner delimiter of a string literal.
  bool mirrored = false;
};

struct FileAnalysis {
  syntax::TokenStream stream;
  std::vector<Prediction> predictions;
};

/// Predictions for every labelled gap where an enabled rule fires, in
/// stream order. Gaps next to multi-line comments or templates and gaps
/// with unsupported bytes are not predicted. With `lines`, only gaps touching
/// one of those lines are analyzed.
std::vector<Prediction> analyze_stream(const Model& model, const syntax::TokenStream& stream,
                                       const AnalysisOptions& options = {},
                                       const std::set<std::uint32_t>* lines = nullptr);
/// Throws ParseError, EncodingError and SizeExceeded.
FileAnalysis analyze_file(const Model& model, std::string content,
                          const AnalysisOptions& options = {},
                          const std::set<std::uint32_t>* lines = nullptr);

/// Makes both delimiters of every quoted string literal agree, following the
/// more confident side, and mirrors one-sided quote predictions.
std::vector<Prediction> resolve_quote_pairs(std::vector<Prediction> predictions,
                                            const syntax::TokenStream& stream);

struct FixCandidate {
  std::uint32_t begin = 0;  // byte range replaced in the original content
  std::uint32_t end = 0;
  std::string replacement;
  std::size_t prediction = 0;  // index into the prediction list
  std::size_t gap = 0;         // token index of the gap
  std::uint32_t first_line = 0;
  std::uint32_t last_line = 0;
};

/// One fix per disagreement, trimmed to the bytes that change. Predictions
/// that cannot be rendered are skipped.
std::vector<FixCandidate> generate_fixes(const syntax::TokenStream& stream,
                                         const std::vector<Prediction>& predictions);

/// Fixes grouped by overlapping line ranges, in byte order.
std::vector<std::vector<FixCandidate>> group_by_line(std::vector<FixCandidate> fixes);

/// Applies non-overlapping edits to `content`.
std::string apply_fixes(std::string_view content, const std::vector<FixCandidate>& fixes);

/// True when the smallest parseable node around the edits has the same
/// structure before and after them.
bool edits_preserve_tree(const syntax::TokenStream& stream,
                         const std::vector<FixCandidate>& fixes,
                         syntax::Language language = syntax::Language::JavaScript);

/// Drops every fix that changes the tree on its own, then every line group
/// whose combined fixes change it. The two delimiter fixes of a string
/// literal are checked as one unit.
std::vector<FixCandidate> verify_ast_safety(const syntax::TokenStream& stream,
                                            std::vector<FixCandidate> fixes,
                                            syntax::Language language = syntax::Language::JavaScript,
                                            bool parallel = false);

struct Edit {
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
  std::string replacement;
  std::uint32_t rule_hash = 0;
  double confidence = 0.0;
};

struct Suggestion {
  std::string file;
  std::uint32_t line_start = 0;
  std::uint32_t line_end = 0;
  std::string original;    // whole lines, without the final newline
  std::string suggestion;  // the same lines with every edit applied
  std::uint32_t rule_hash = 0;  // most confident edit
  double confidence = 0.0;
  std::vector<Edit> edits;
};

/// Full per-file pipeline. `changed_lines` restricts suggestions to fixes
/// lying entirely on those lines; nullopt means every line.
std::vector<Suggestion> suggest(const Model& model, const std::string& path,
                                std::string content,
                                const std::optional<std::set<std::uint32_t>>& changed_lines,
                                const AnalysisOptions& options = {});

/// Replaces the suggestions' line ranges; suggestions must not overlap.
std::string apply_suggestions(std::string_view content, const std::vector<Suggestion>& suggestions);

/// Diff-style text: a `[hash]` header line, then `-` and `+` lines.
std::string format_text(const std::vector<Suggestion>& suggestions);
/// JSON array of {file, line_start, line_end, original, suggestion,
/// rule_hash, confidence}.
std::string format_json(const std::vector<Suggestion>& suggestions);

}  // namespace stylemine::apply

#endif  // STYLEMINE_APPLY_APPLY_HPP
