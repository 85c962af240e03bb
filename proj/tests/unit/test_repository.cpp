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

#include <cstdlib>
#include <random>

#include "fixtures.hpp"
#include "stylemine/apply/repository.hpp"
#include "stylemine/errors.hpp"

using namespace stylemine;
using apply::changed_lines;

namespace {

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::size_t b = 0;
  while (b < s.size()) {
    auto e = s.find('\n', b);
    if (e == std::string::npos) e = s.size();
    out.push_back(s.substr(b, e - b));
    b = e + 1;
  }
  return out;
}

/// Textbook dynamic-programming LCS length.
std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::vector<std::size_t>> t(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      t[i][j] = a[i - 1] == b[j - 1] ? t[i - 1][j - 1] + 1 : std::max(t[i - 1][j], t[i][j - 1]);
    }
  }
  return t[a.size()][b.size()];
}

void git(const std::filesystem::path& dir, const std::string& args) {
  const auto cmd = std::string(STYLEMINE_GIT_EXECUTABLE) + " -C '" + dir.string() + "' " + args +
                   " >/dev/null 2>&1";
  REQUIRE(std::system(cmd.c_str()) == 0);
}

}  // namespace

TEST_CASE("changed line detection") {
  CHECK(changed_lines("a\nb\nc\n", "a\nb\nc\n").empty());
  CHECK(changed_lines("a\nb\nc\n", "a\nB\nc\n") == std::set<std::uint32_t>{2});
  CHECK(changed_lines("a\nc\n", "a\nb\nc\n") == std::set<std::uint32_t>{2});
  CHECK(changed_lines("a\nb\nc\n", "a\nc\n").empty());
  CHECK(changed_lines("", "x\ny") == std::set<std::uint32_t>{1, 2});

  SUBCASE("unchanged lines form a longest common subsequence") {
    std::mt19937 rng(3);
    for (int round = 0; round < 50; ++round) {
      std::string before;
      std::string after;
      for (int i = 0; i < 30; ++i) {
        before += std::to_string(rng() % 5) + "\n";
        after += std::to_string(rng() % 5) + "\n";
      }
      const auto a = split_lines(before);
      const auto b = split_lines(after);
      const auto changed = changed_lines(before, after);
      CHECK(b.size() - changed.size() == lcs_length(a, b));
      // The kept lines appear in `before` in order.
      std::vector<std::string> kept;
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (!changed.count(static_cast<std::uint32_t>(i + 1))) kept.push_back(b[i]);
      }
      CHECK(lcs_length(a, kept) == kept.size());
    }
  }
}

TEST_CASE("unified diff parsing") {
  const std::string diff =
      "diff --git a/src/a.js b/src/a.js\n"
      "index 1..2 100644\n"
      "--- a/src/a.js\n"
      "+++ b/src/a.js\n"
      "@@ -3 +3 @@\n"
      "-x\n"
      "+y\n"
      "@@ -10,0 +11,2 @@\n"
      "+p\n"
      "+q\n"
      "diff --git a/gone.js b/gone.js\n"
      "--- a/gone.js\n"
      "+++ /dev/null\n"
      "@@ -1 +0,0 @@\n"
      "-z\n"
      "diff --git a/new.js b/new.js\n"
      "--- /dev/null\n"
      "+++ b/new.js\n"
      "@@ -0,0 +1 @@\n"
      "+w\n";
  const auto lines = apply::parse_unified_diff(diff);
  REQUIRE(lines.size() == 2);
  CHECK(lines.at("src/a.js") == std::set<std::uint32_t>{3, 11, 12});
  CHECK(lines.at("new.js") == std::set<std::uint32_t>{1});
  CHECK(apply::parse_unified_diff("").empty());
}

TEST_CASE("memory repository") {
  apply::MemoryRepository repo;
  repo.put("a", "x.js", "1\n2\n");
  repo.put("b", "x.js", "1\n3\n");
  repo.put("b", "y.js", "new\n");
  CHECK(repo.files("b") == std::vector<std::string>{"x.js", "y.js"});
  CHECK(repo.read("b", "y.js") == "new\n");
  const auto cs = repo.diff("a", "b");
  CHECK(cs.lines.at("x.js") == std::set<std::uint32_t>{2});
  CHECK(cs.lines.at("y.js") == std::set<std::uint32_t>{1});
  CHECK_THROWS_AS(repo.check_revision("c"), RevisionNotFound);
}

TEST_CASE("directory repository") {
  testing::TempDir dir;
  testing::write_text(dir.path() / "b.js", "b\n");
  testing::write_text(dir.path() / "sub" / "a.js", "a\n");
  apply::DirectoryRepository repo(dir.path());
  const auto files = repo.files(apply::kWorkingTree);
  CHECK(std::find(files.begin(), files.end(), "sub/a.js") != files.end());
  CHECK(std::is_sorted(files.begin(), files.end()));
  CHECK(repo.read(apply::kWorkingTree, "sub/a.js") == "a\n");
  CHECK_THROWS_AS(repo.check_revision("HEAD"), RevisionNotFound);
}

TEST_CASE("git repository") {
  testing::TempDir dir;
  git(dir.path(), "init -q");
  git(dir.path(), "config user.email t@example.com");
  git(dir.path(), "config user.name t");
  testing::write_text(dir.path() / "a.js", "var a = 1;\nvar b = 2;\n");
  testing::write_text(dir.path() / "lib" / "c.js", "c();\n");
  git(dir.path(), "add .");
  git(dir.path(), "commit -q -m one");
  testing::write_text(dir.path() / "a.js", "var a = 1;\nvar b=2;\nvar c = 3;\n");
  git(dir.path(), "commit -q -am two");
  testing::write_text(dir.path() / "lib" / "c.js", "c( );\n");

  apply::GitRepository repo(dir.path());
  CHECK(repo.files("HEAD") == std::vector<std::string>{"a.js", "lib/c.js"});
  CHECK(repo.read("HEAD~1", "a.js") == "var a = 1;\nvar b = 2;\n");
  CHECK_THROWS_AS(repo.check_revision("no-such-branch"), RevisionNotFound);

  const auto committed = repo.diff("HEAD~1", "HEAD");
  REQUIRE(committed.lines.size() == 1);
  CHECK(committed.lines.at("a.js") == std::set<std::uint32_t>{2, 3});

  const auto worktree = repo.diff("HEAD", apply::kWorkingTree);
  REQUIRE(worktree.lines.count("lib/c.js"));
  CHECK(worktree.lines.at("lib/c.js") == std::set<std::uint32_t>{1});
  CHECK(repo.read(apply::kWorkingTree, "lib/c.js") == "c( );\n");
}
