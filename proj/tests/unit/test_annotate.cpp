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

#include <thread>

#include <json.hpp>

#include "fixtures.hpp"
#include "stylemine/bench/generator.hpp"
#include "stylemine/cli/annotate.hpp"
#include "stylemine/cli/config.hpp"
#include "stylemine/cli/server.hpp"
#include "stylemine/errors.hpp"

// After Eigen: <resolv.h> defines an `_res` macro.
#include <httplib.h>

using namespace stylemine;
using namespace stylemine::cli;
using nlohmann::json;

namespace {

std::size_t count(const AnnotationDocument& d, Agreement a) {
  return static_cast<std::size_t>(std::count_if(d.records.begin(), d.records.end(),
                                                [&](const GapRecord& r) { return r.agreement == a; }));
}

/// Server on a free port, stopped on destruction.
class RunningServer {
 public:
  RunningServer(const std::filesystem::path& root, const std::filesystem::path& config)
      : server_(ModelFile{testing::synthetic_model().model, testing::synthetic_model().info},
                ServerOptions{root, {}, config, "127.0.0.1", 0}) {
    port_ = server_.bind();
    thread_ = std::thread([this] { server_.run(); });
  }
  ~RunningServer() {
    server_.stop();
    thread_.join();
  }
  httplib::Client client() const { return httplib::Client("127.0.0.1", port_); }

 private:
  AnnotationServer server_;
  int port_ = 0;
  std::thread thread_;
};

}  // namespace

TEST_CASE("annotation document") {
  const auto& model = testing::synthetic_model().model;
  const auto file = bench::generate_corpus(1, 314)[0];

  SUBCASE("in-style code mostly matches") {
    const auto doc = annotate(model, file.path, file.content, {});
    REQUIRE(doc.records.size() > 50);
    CHECK(count(doc, Agreement::Match) >= 0.9 * doc.records.size());
    for (const auto& r : doc.records) {
      CHECK(r.begin <= r.end);
      CHECK(r.end <= doc.source.size());
      CHECK(r.predicted.has_value() == (r.agreement != Agreement::Disabled));
      if (r.agreement != Agreement::Disabled) {
        CHECK(r.has_rule);
        CHECK(r.confidence >= 0.92);
        CHECK((r.agreement == Agreement::Match) == (r.observed == *r.predicted));
      }
    }
  }
  SUBCASE("an unreachable threshold disables everything") {
    AnnotationOptions o;
    o.min_confidence = 1.01;
    const auto doc = annotate(model, file.path, file.content, o);
    CHECK(count(doc, Agreement::Disabled) == doc.records.size());
    CHECK(std::any_of(doc.records.begin(), doc.records.end(), [](const GapRecord& r) { return r.has_rule; }));
  }
  SUBCASE("higher thresholds never enable more gaps") {
    std::size_t previous = SIZE_MAX;
    for (const double t : {0.0, 0.92, 0.97, 0.99, 1.0}) {
      AnnotationOptions o;
      o.min_confidence = t;
      const auto doc = annotate(model, file.path, file.content, o);
      const auto enabled = doc.records.size() - count(doc, Agreement::Disabled);
      CHECK(enabled <= previous);
      previous = enabled;
    }
  }
  SUBCASE("blacklisted rules show as disabled with their rule") {
    const auto doc = annotate(model, file.path, file.content, {});
    const auto hash = doc.records.front().rule_hash;
    AnnotationOptions o;
    o.blacklist = {hash};
    const auto off = annotate(model, file.path, file.content, o);
    for (const auto& r : off.records) {
      if (r.rule_hash == hash) CHECK(r.agreement == Agreement::Disabled);
    }
  }
  SUBCASE("json schema") {
    const auto j = json::parse(to_json(annotate(model, "x.js", file.content, {})));
    CHECK(j.at("format_version") == kAnnotationFormatVersion);
    CHECK(j.at("file") == "x.js");
    CHECK(j.at("source") == file.content);
    CHECK(j.at("model").at("n_rules") == model.rules.rules.size());
    CHECK(j.at("thresholds").at("confidence") == 0.92);
    CHECK(j.at("blacklist").empty());
    for (const auto& r : j.at("records")) {
      for (const char* k : {"gap", "line", "column", "offset", "begin", "end", "observed",
                            "predicted", "agreement", "rule"}) {
        CHECK(r.contains(k));
      }
      const auto a = r.at("agreement").get<std::string>();
      CHECK((a == "match" || a == "mismatch" || a == "disabled"));
      if (!r.at("rule").is_null()) {
        CHECK(r.at("rule").at("hash").get<std::string>().size() == 8);
        CHECK(r.at("rule").at("clauses").is_array());
      }
    }
  }
  SUBCASE("parse errors") {
    CHECK_THROWS_AS(annotate(model, "x.js", "var = ;", {}), ParseError);
  }
}

TEST_CASE("annotation server") {
  testing::TempDir dir;
  const auto files = bench::generate_corpus(3, 21);
  for (const auto& f : files) testing::write_text(dir.path() / "repo" / f.path, f.content);
  testing::write_text(dir.path() / "repo" / "notes.txt", "x");
  testing::write_text(dir.path() / "repo" / "broken.js", "var = ;\n");
  const auto config = dir.path() / "repo" / kConfigFileName;
  RunningServer server(dir.path() / "repo", config);
  auto client = server.client();

  const auto listed = client.Get("/files");
  REQUIRE(listed);
  CHECK(listed->status == 200);
  const auto names = json::parse(listed->body).at("files");
  CHECK(names.size() == 4);
  CHECK(std::is_sorted(names.begin(), names.end()));

  const auto path = "/annotate?path=" + files[0].path;
  const auto first = client.Get(path);
  const auto second = client.Get(path);
  REQUIRE(first);
  REQUIRE(second);
  CHECK(first->status == 200);
  CHECK(first->body == second->body);
  const auto doc = json::parse(first->body);
  CHECK(doc.at("source") == files[0].content);

  CHECK(client.Get("/annotate?path=missing.js")->status == 404);
  CHECK(client.Get("/annotate?path=../x.js")->status == 404);
  CHECK(client.Get("/annotate?path=notes.txt")->status == 404);
  CHECK(client.Get("/annotate?path=broken.js")->status == 422);
  CHECK(client.Get(path + "&confidence=abc")->status == 400);
  CHECK(client.Get("/nothing")->status == 404);

  const auto strict = json::parse(client.Get(path + "&confidence=1.01")->body);
  for (const auto& r : strict.at("records")) CHECK(r.at("agreement") == "disabled");

  std::string hash;
  for (const auto& r : doc.at("records")) {
    if (r.at("agreement") == "match") {
      hash = r.at("rule").at("hash");
      break;
    }
  }
  REQUIRE_FALSE(hash.empty());
  const auto body = json{{"hash", hash}}.dump();
  const auto on = client.Post("/blacklist", body, "application/json");
  REQUIRE(on);
  CHECK(on->status == 200);
  CHECK(json::parse(on->body).at("blacklisted") == true);
  CHECK(*load_config_file(config).blacklist == std::set<std::uint32_t>{rules::parse_hash(hash)});

  const auto after = json::parse(client.Get(path)->body);
  for (const auto& r : after.at("records")) {
    if (!r.at("rule").is_null() && r.at("rule").at("hash") == hash) CHECK(r.at("agreement") == "disabled");
  }

  const auto off = client.Post("/blacklist", body, "application/json");
  CHECK(json::parse(off->body).at("blacklisted") == false);
  CHECK(load_config_file(config).blacklist->empty());
  CHECK(client.Get(path)->body == first->body);

  CHECK(client.Post("/blacklist", json{{"hash", "00000000"}}.dump(), "application/json")->status == 404);
  CHECK(client.Post("/blacklist", "{", "application/json")->status == 400);
}
