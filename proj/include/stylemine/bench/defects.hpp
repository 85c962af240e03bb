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


#ifndef STYLEMINE_BENCH_DEFECTS_HPP
#define STYLEMINE_BENCH_DEFECTS_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "stylemine/apply/model.hpp"
#include "stylemine/cli/train.hpp"

namespace stylemine::bench {

enum class DefectKind : std::uint8_t { Whitespace, Newline, Indentation, Quote };

std::string_view defect_kind_name(DefectKind kind);

struct DefectSpec {
  std::map<DefectKind, std::size_t> counts;
  std::uint64_t seed = 0;

  std::size_t total() const;
};

struct Defect {
  std::string path;
  DefectKind kind = DefectKind::Whitespace;
  std::string description;  // e.g. "remove space"
  std::string original;
  std::string mutated;
  /// Lines of the mutated file that differ from the original.
  std::set<std::uint32_t> changed_lines;
  /// Inverse edit on the mutated file.
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
  std::string restore;
};

struct DefectSet {
  std::vector<Defect> defects;
  /// Files without an eligible site for the kind they were drawn for.
  std::vector<std::string> skipped;
};

/// One formatting defect per file. Files are visited in a seeded order and
/// each kind takes files until its count is met. Every mutated file parses
/// to the same tree as its original, positions excluded.
DefectSet seed_defects(const std::vector<cli::SourceFile>& files, const DefectSpec& spec);

/// Applies one kind of mutation to a file. Throws NoEligibleSite.
Defect seed_defect(const cli::SourceFile& file, DefectKind kind, std::uint64_t seed);

struct CurvePoint {
  std::size_t n_rules = 0;
  double min_confidence = 0.0;  // confidence of the last enabled rule
  std::size_t proposed = 0;     // defects with at least one suggestion
  std::size_t correct = 0;      // defects whose suggestions restore the original
  double precision = 1.0;
  double pred_rate = 0.0;
};

/// Whether the suggestions on a defect's changed lines restore its original
/// bytes; nullopt when nothing was suggested.
std::optional<bool> check_fix(const apply::Model& model, const Defect& defect,
                              const apply::AnalysisOptions& options);

/// Precision and PredR of fixes as more and more of the enabled rules, in
/// priority order, are allowed to fire. `rule_counts` empty means 20 evenly
/// spaced counts plus the full set.
std::vector<CurvePoint> defect_fixing_curve(const apply::Model& model,
                                            const std::vector<Defect>& defects,
                                            const apply::AnalysisOptions& options = {},
                                            std::vector<std::size_t> rule_counts = {});

}  // namespace stylemine::bench

#endif  // STYLEMINE_BENCH_DEFECTS_HPP
