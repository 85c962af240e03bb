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


#include <doctest.h>

#include "fixtures.hpp"
#include "stylemine/errors.hpp"
#include "stylemine/feedback/feedback.hpp"

using namespace stylemine;
using namespace stylemine::feedback;

namespace {

rules::RuleSet ruleset() {
  rules::RuleSet set;
  for (std::uint32_t i = 0; i < 4; ++i) {
    rules::Rule r;
    r.hash = 10 + i;
    r.confidence = 0.99 - 0.02 * i;
    r.label = i;
    set.rules.push_back(r);
  }
  return set;
}

}  // namespace

TEST_CASE("blacklist decision") {
  CHECK_FALSE(should_blacklist({1, 0, 0}));
  CHECK(should_blacklist({1, 100, 85}));
  CHECK(should_blacklist({1, 12, 1}));
  CHECK_FALSE(should_blacklist({1, 11, 1}));
  CHECK_FALSE(should_blacklist({1, 200, 185}));  // ratio 0.925
  CHECK_FALSE(should_blacklist({1, 1000, 900}));  // ratio exactly 0.9

  SUBCASE("monotone in unmerged suggestions") {
    for (std::uint64_t merged = 0; merged < 40; merged += 3) {
      bool seen = false;
      for (std::uint64_t unmerged = 0; unmerged < 60; ++unmerged) {
        const bool b = should_blacklist({1, merged + unmerged, merged});
        CHECK((!seen || b));
        seen = seen || b;
      }
    }
  }
}

TEST_CASE("retraining cadence") {
  CHECK_FALSE(should_retrain(0));
  CHECK_FALSE(should_retrain(99));
  CHECK(should_retrain(100));
  CHECK(should_retrain(250));
}

TEST_CASE("applying a blacklist") {
  const auto set = ruleset();
  CHECK(apply_blacklist(set, {}).rules.size() == 4);
  CHECK(apply_blacklist(set, {{10, 11, 12, 13}, BlacklistSource::User}).rules.empty());
  CHECK(apply_blacklist(set, {{99}, BlacklistSource::User}).rules.size() == 4);

  const BlacklistConfig top{{10}, BlacklistSource::User};
  const auto once = apply_blacklist(set, top);
  CHECK(apply_blacklist(once, top).rules.size() == once.rules.size());
  CHECK(rules::filter_by_confidence(apply_blacklist(set, top), 0.96).rules.size() ==
        apply_blacklist(rules::filter_by_confidence(set, 0.96), top).rules.size());

  features::FeatureScheme scheme;
  const Eigen::VectorXd x;
  CHECK(rules::match_rules(set, scheme, x)->rule->hash == 10);
  CHECK(rules::match_rules(once, scheme, x)->rule->hash == 11);
}

TEST_CASE("feedback ledger") {
  testing::TempDir dir;
  const auto path = ledger_path(dir.path() / "m.smdl");
  CHECK(path.filename() == "m.smdl.feedback.json");
  auto ledger = FeedbackLedger::load(path);
  CHECK(ledger.entries().empty());
  ledger.record(0xabc, 10, 9);
  ledger.record(0xabc, 5, 0);
  ledger.record(0x1, 3, 3);
  CHECK_THROWS_AS(ledger.record(0x2, 1, 2), ConfigError);
  CHECK(ledger.entries().at(0xabc).suggestions_made == 15);
  CHECK(ledger.entries().at(0xabc).suggestions_merged == 9);
  CHECK(ledger.automatic_blacklist().hashes.empty());
  ledger.record(0xabc, 10, 1);
  const auto automatic = ledger.automatic_blacklist();
  CHECK(automatic.hashes == std::set<std::uint32_t>{0xabc});
  CHECK(automatic.source == BlacklistSource::Automatic);

  ledger.save(path);
  const auto loaded = FeedbackLedger::load(path);
  CHECK(loaded.to_json() == ledger.to_json());
  CHECK_THROWS_AS(FeedbackLedger::from_json("{"), ConfigError);
}
