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


#include "stylemine/feedback/feedback.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>
#include <spdlog/spdlog.h>

#include "stylemine/errors.hpp"

namespace stylemine::feedback {

bool should_blacklist(const RuleFeedback& feedback) {
  const auto made = feedback.suggestions_made;
  const auto merged = feedback.suggestions_merged;
  if (made == 0) return false;
  const auto unmerged = made > merged ? made - merged : 0;
  return unmerged > kMaxUnmerged &&
         static_cast<double>(merged) / static_cast<double>(made) < kMinMergeRatio;
}

rules::RuleSet apply_blacklist(rules::RuleSet rules, const BlacklistConfig& config) {
  std::set<std::uint32_t> present;
  for (const auto& r : rules.rules) present.insert(r.hash);
  for (const auto h : config.hashes) {
    if (!present.count(h)) spdlog::warn("UnknownHash: blacklisted rule {} is not in the model",
                                        rules::hash_hex(h));
  }
  std::erase_if(rules.rules, [&](const rules::Rule& r) { return config.hashes.count(r.hash) > 0; });
  return rules;
}

bool should_retrain(std::uint64_t commits_since_training) {
  return commits_since_training >= kRetrainInterval;
}

FeedbackLedger FeedbackLedger::load(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return {};
  std::ifstream in(path);
  std::ostringstream text;
  text << in.rdbuf();
  return from_json(text.str());
}

void FeedbackLedger::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::trunc);
  out << to_json();
}

FeedbackLedger FeedbackLedger::from_json(std::string_view text) {
  FeedbackLedger ledger;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& [hex, entry] : doc.at("rules").items()) {
      RuleFeedback f;
      f.rule_hash = rules::parse_hash(hex);
      f.suggestions_made = entry.at("made").get<std::uint64_t>();
      f.suggestions_merged = entry.at("merged").get<std::uint64_t>();
      if (f.suggestions_merged > f.suggestions_made) {
        throw ConfigError("ledger entry " + hex + " has more merges than suggestions");
      }
      ledger.entries_[f.rule_hash] = f;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed feedback ledger: ") + e.what());
  }
  return ledger;
}

std::string FeedbackLedger::to_json() const {
  nlohmann::ordered_json rules_doc = nlohmann::ordered_json::object();
  for (const auto& [hash, f] : entries_) {
    rules_doc[rules::hash_hex(hash)] = {{"made", f.suggestions_made},
                                        {"merged", f.suggestions_merged}};
  }
  return nlohmann::ordered_json{{"version", 1}, {"rules", rules_doc}}.dump(2) + "\n";
}

void FeedbackLedger::record(std::uint32_t rule_hash, std::uint64_t made, std::uint64_t merged) {
  auto& f = entries_[rule_hash];
  f.rule_hash = rule_hash;
  if (f.suggestions_merged + merged > f.suggestions_made + made) {
    throw ConfigError("merged suggestions cannot exceed suggestions made");
  }
  f.suggestions_made += made;
  f.suggestions_merged += merged;
}

BlacklistConfig FeedbackLedger::automatic_blacklist() const {
  BlacklistConfig config;
  config.source = BlacklistSource::Automatic;
  for (const auto& [hash, f] : entries_) {
    if (should_blacklist(f)) config.hashes.insert(hash);
  }
  return config;
}

std::filesystem::path ledger_path(const std::filesystem::path& model_path) {
  auto p = model_path;
  p += ".feedback.json";
  return p;
}

}  // namespace stylemine::feedback
