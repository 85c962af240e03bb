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
#include "stylemine/cli/config.hpp"
#include "stylemine/errors.hpp"

using namespace stylemine;
using namespace stylemine::cli;

TEST_CASE("configuration defaults") {
  const RunConfig c;
  CHECK(c.confidence_threshold == 0.92);
  CHECK(c.min_label_occurrences == 80);
  CHECK(c.n_trees == 10);
  CHECK(c.min_samples_leaf == 80);
  CHECK(c.training_byte_cap == 2u * 1024 * 1024);
  CHECK(c.max_line_length == 500);
  CHECK(c.feature_top_k == 500);
  CHECK(c.jaccard_threshold == 0.98);
  CHECK(c.blacklist.empty());
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("configuration precedence") {
  const auto file = parse_config("confidence_threshold: 0.95\nn_trees: 20\nblacklist: [0000abcd]\n");
  ConfigOverrides flags;
  flags.n_trees = 30;
  flags.seed = 4;

  const auto none = resolve_config({}, {});
  CHECK(none.n_trees == 10);
  const auto file_only = resolve_config(file, {});
  CHECK(file_only.confidence_threshold == 0.95);
  CHECK(file_only.n_trees == 20);
  CHECK(file_only.blacklist == std::set<std::uint32_t>{0xabcd});
  const auto both = resolve_config(file, flags);
  CHECK(both.n_trees == 30);
  CHECK(both.confidence_threshold == 0.95);
  CHECK(both.seed == 4);
  const auto flags_only = resolve_config({}, flags);
  CHECK(flags_only.confidence_threshold == 0.92);
  CHECK(flags_only.n_trees == 30);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(parse_config("colour: blue\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("n_trees: many\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("blacklist: [xyz]\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("- a\n- b\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("n_trees: [\n"), ConfigError);
  ConfigOverrides bad;
  bad.confidence_threshold = 1.5;
  CHECK_THROWS_AS(resolve_config(bad, {}), ConfigError);
  bad.confidence_threshold.reset();
  bad.search_folds = 1;
  CHECK_THROWS_AS(resolve_config({}, bad), ConfigError);
  CHECK_NOTHROW(parse_config(""));
}

TEST_CASE("configuration files") {
  testing::TempDir dir;
  const auto path = dir.path() / kConfigFileName;
  CHECK_FALSE(load_config_file(path).n_trees);

  write_blacklist(path, {0x1, 0xdeadbeef});
  auto loaded = load_config_file(path);
  CHECK(*loaded.blacklist == std::set<std::uint32_t>{0x1, 0xdeadbeef});
  CHECK(testing::read_text(path).find("deadbeef") != std::string::npos);

  testing::write_text(path, "n_trees: 12\nblacklist: [00000001]\n");
  write_blacklist(path, {});
  loaded = load_config_file(path);
  CHECK(*loaded.n_trees == 12);
  CHECK(loaded.blacklist->empty());

  testing::write_text(path, "bogus: 1\n");
  CHECK_THROWS_AS(write_blacklist(path, {1}), ConfigError);
  CHECK(testing::read_text(path) == "bogus: 1\n");
}
