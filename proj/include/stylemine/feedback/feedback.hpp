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


#ifndef STYLEMINE_FEEDBACK_FEEDBACK_HPP
#define STYLEMINE_FEEDBACK_FEEDBACK_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string_view>

#include "stylemine/rules/rules.hpp"

namespace stylemine::feedback {

inline constexpr std::uint64_t kMaxUnmerged = 10;
inline constexpr double kMinMergeRatio = 0.9;
inline constexpr std::uint64_t kRetrainInterval = 100;

struct RuleFeedback {
  std::uint32_t rule_hash = 0;
  std::uint64_t suggestions_made = 0;
  std::uint64_t suggestions_merged = 0;
};

enum class BlacklistSource : std::uint8_t { User, Automatic };

struct BlacklistConfig {
  std::set<std::uint32_t> hashes;
  BlacklistSource source = BlacklistSource::User;
};

/// More than 10 unmerged suggestions and a merge ratio below 0.9.
bool should_blacklist(const RuleFeedback& feedback);

/// Removes blacklisted rules. Hashes absent from the rule set are logged.
rules::RuleSet apply_blacklist(rules::RuleSet rules, const BlacklistConfig& config);

/// True once 100 commits have landed since the last training.
bool should_retrain(std::uint64_t commits_since_training);

/// Per-rule counters persisted as JSON next to a model file.
class FeedbackLedger {
 public:
  /// Missing files give an empty ledger.
  static FeedbackLedger load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  static FeedbackLedger from_json(std::string_view text);
  std::string to_json() const;

  /// Throws ConfigError when merged would exceed made.
  void record(std::uint32_t rule_hash, std::uint64_t made, std::uint64_t merged);
  const std::map<std::uint32_t, RuleFeedback>& entries() const { return entries_; }
  /// Hashes that should_blacklist flags.
  BlacklistConfig automatic_blacklist() const;

 private:
  std::map<std::uint32_t, RuleFeedback> entries_;
};

/// Ledger path for a model file: `<model>.feedback.json`.
std::filesystem::path ledger_path(const std::filesystem::path& model_path);

}  // namespace stylemine::feedback

#endif  // STYLEMINE_FEEDBACK_FEEDBACK_HPP
