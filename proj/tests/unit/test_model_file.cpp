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

namespace {

ModelFile synthetic_file() {
  const auto& r = testing::synthetic_model();
  return {r.model, r.info};
}

}  // namespace

TEST_CASE("model file round trip") {
  const auto file = synthetic_file();
  const auto bytes = encode_model(file);
  CHECK(bytes.substr(0, 4) == "SMDL");
  const auto decoded = decode_model(bytes);
  CHECK(encode_model(decoded) == bytes);
  CHECK(model_digest(decoded) == model_digest(file));

  const auto& a = file.model;
  const auto& b = decoded.model;
  REQUIRE(a.rules.rules.size() == b.rules.rules.size());
  for (std::size_t i = 0; i < a.rules.rules.size(); ++i) {
    CHECK(a.rules.rules[i].hash == b.rules.rules[i].hash);
    CHECK(a.rules.rules[i].confidence == b.rules.rules[i].confidence);
    CHECK(a.rules.rules[i].clauses == b.rules.rules[i].clauses);
  }
  CHECK(a.scheme.keys() == b.scheme.keys());
  CHECK(a.scheme.selected() == b.scheme.selected());
  CHECK(a.vocabulary.size() == b.vocabulary.size());
  CHECK(b.forest.has_value() == a.forest.has_value());
  CHECK(decoded.info.corpus_digest == file.info.corpus_digest);
  CHECK(decoded.info.params.min_samples_leaf == file.info.params.min_samples_leaf);

  // Analysis results do not depend on the round trip.
  const auto content = bench::generate_corpus(1, 77)[0].content;
  const auto pa = apply::analyze_file(a, content).predictions;
  const auto pb = apply::analyze_file(b, content).predictions;
  REQUIRE(pa.size() == pb.size());
  for (std::size_t i = 0; i < pa.size(); ++i) {
    CHECK(pa[i].rule_hash == pb[i].rule_hash);
    CHECK(*pa[i].y_hat == *pb[i].y_hat);
  }

  testing::TempDir dir;
  save_model(file, dir.path() / "m.smdl");
  CHECK(encode_model(load_model(dir.path() / "m.smdl")) == bytes);
}

TEST_CASE("model file validation") {
  const auto bytes = encode_model(synthetic_file());
  SUBCASE("format version") {
    auto newer = bytes;
    newer[4] = static_cast<char>(kModelFormatVersion + 1);
    CHECK_THROWS_AS(decode_model(newer), IncompatibleModelVersion);
  }
  SUBCASE("magic") {
    auto other = bytes;
    other[0] = 'X';
    CHECK_THROWS_AS(decode_model(other), Error);
  }
  SUBCASE("payload tampering") {
    auto tampered = bytes;
    tampered[tampered.size() - 5] ^= 0x5a;
    CHECK_THROWS_AS(decode_model(tampered), Error);
  }
  SUBCASE("digest tampering") {
    auto tampered = bytes;
    tampered[10] ^= 0x01;
    CHECK_THROWS_AS(decode_model(tampered), Error);
  }
  SUBCASE("truncation") {
    CHECK_THROWS_AS(decode_model(bytes.substr(0, bytes.size() / 2)), Error);
    CHECK_THROWS_AS(decode_model(""), Error);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_model("/nonexistent/model.smdl"), Error);
  }
}
