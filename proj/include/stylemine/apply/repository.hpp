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


#ifndef STYLEMINE_APPLY_REPOSITORY_HPP
#define STYLEMINE_APPLY_REPOSITORY_HPP

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "stylemine/apply/apply.hpp"

namespace stylemine::apply {

/// Revision name for the checked-out files.
inline constexpr const char* kWorkingTree = "WORKTREE";

struct ChangeSet {
  std::string base;
  std::string head;
  /// 1-based changed line numbers of each head file.
  std::map<std::string, std::set<std::uint32_t>> lines;
};

class Repository {
 public:
  virtual ~Repository() = default;
  /// Paths relative to the repository root, sorted.
  virtual std::vector<std::string> files(const std::string& revision) const = 0;
  virtual std::string read(const std::string& revision, const std::string& path) const = 0;
  /// Throws RevisionNotFound.
  virtual void check_revision(const std::string& revision) const = 0;
  /// Lines of `head` files that differ from `base`.
  virtual ChangeSet diff(const std::string& base, const std::string& head) const;
};

/// Shells out to git.
class GitRepository : public Repository {
 public:
  explicit GitRepository(std::filesystem::path root);
  std::vector<std::string> files(const std::string& revision) const override;
  std::string read(const std::string& revision, const std::string& path) const override;
  void check_revision(const std::string& revision) const override;
  ChangeSet diff(const std::string& base, const std::string& head) const override;

 private:
  std::filesystem::path root_;
};

/// A plain directory; the only revision is kWorkingTree.
class DirectoryRepository : public Repository {
 public:
  explicit DirectoryRepository(std::filesystem::path root);
  std::vector<std::string> files(const std::string& revision) const override;
  std::string read(const std::string& revision, const std::string& path) const override;
  void check_revision(const std::string& revision) const override;

 private:
  std::filesystem::path root_;
};

/// Revisions held in memory, for tests and benchmarks.
class MemoryRepository : public Repository {
 public:
  void put(const std::string& revision, const std::string& path, std::string content);
  std::vector<std::string> files(const std::string& revision) const override;
  std::string read(const std::string& revision, const std::string& path) const override;
  void check_revision(const std::string& revision) const override;

 private:
  std::map<std::string, std::map<std::string, std::string>> revisions_;
};

/// 1-based lines of `after` not matched by a longest common subsequence
/// with `before`.
std::set<std::uint32_t> changed_lines(std::string_view before, std::string_view after);

/// Parses unified diff output with zero context into head line sets.
std::map<std::string, std::set<std::uint32_t>> parse_unified_diff(std::string_view diff);

struct SkippedFile {
  std::string path;
  std::string reason;
};

struct ChangesetReport {
  std::vector<Suggestion> suggestions;
  std::vector<SkippedFile> skipped;
};

/// Analyzes changed JavaScript files of the head revision in path order.
/// Files past the byte budget or failing to parse are skipped and reported.
ChangesetReport analyze_changeset(const Model& model, const Repository& repository,
                                  const ChangeSet& changeset, const AnalysisOptions& options = {});

}  // namespace stylemine::apply

#endif  // STYLEMINE_APPLY_REPOSITORY_HPP
