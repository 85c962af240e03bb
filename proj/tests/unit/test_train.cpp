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
#include "stylemine/bench/generator.hpp"
#include "stylemine/cli/model_file.hpp"
#include "stylemine/errors.hpp"

using namespace stylemine;
using namespace stylemine::cli;

TEST_CASE("training is deterministic") {
  RunConfig config;
  config.search_budget = 4;
  config.search_max_samples = 2000;
  const auto files = bench::generate_corpus(20, 31);
  const auto a = train_model(files, config);
  const auto b = train_model(files, config);
  CHECK(encode_model({a.model, a.info}) == encode_model({b.model, b.info}));
  CHECK(model_digest({a.model, a.info}) == model_digest({b.model, b.info}));

  config.seed = 1;
  const auto c = train_model(files, config);
  CHECK(model_digest({a.model, a.info}) != model_digest({c.model, c.info}));
}

TEST_CASE("training summary") {
  const auto& r = testing::synthetic_model();
  CHECK(r.info.n_files == 60);
  CHECK(r.info.n_samples > 1000);
  CHECK(r.model.rules.rules.size() > 10);
  CHECK(r.model.vocabulary.size() >= 3);
  CHECK(r.info.corpus_digest.size() == 64);
  CHECK(r.skipped.empty());
  for (const auto& rule : r.model.rules.rules) {
    CHECK(rule.confidence >= 0.92);
    CHECK(rule.label < r.model.vocabulary.size());
  }
}

TEST_CASE("training corpus filters") {
  RunConfig config;
  config.search_budget = 0;
  SUBCASE("unparseable files only") {
    std::vector<SourceFile> files = {{"a.js", "var = ;\n"}, {"b.js", "function ( {\n"}};
    CHECK_THROWS_AS(train_model(files, config), EmptyCorpus);
  }
  SUBCASE("no files") { CHECK_THROWS_AS(train_model({}, config), EmptyCorpus); }
  SUBCASE("long lines and broken files are skipped") {
    auto files = bench::generate_corpus(20, 2);
    files.push_back({"long.js", "var x = \"" + std::string(600, 'a') + "\";\n"});
    files.push_back({"bad.js", "var = ;\n"});
    const auto r = train_model(files, config);
    CHECK(r.info.n_files == 20);
    CHECK(r.skipped.size() == 2);
  }
  SUBCASE("rare labels only") {
    config.min_label_occurrences = 1000000;
    CHECK_THROWS_AS(train_model(bench::generate_corpus(5, 2), config), EmptyVocabulary);
  }
  SUBCASE("sha256") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  }
}
