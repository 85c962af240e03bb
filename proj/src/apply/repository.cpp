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


#include "stylemine/apply/repository.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <spdlog/spdlog.h>

#include "stylemine/errors.hpp"

namespace stylemine::apply {
namespace {

std::string shell_quote(const std::string& arg) {
  std::string out = "'";
  for (const char c : arg) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

struct CommandResult {
  std::string output;
  int status = 0;
};

CommandResult run(const std::vector<std::string>& args) {
  std::string command;
  for (const auto& a : args) command += shell_quote(a) + " ";
  command += "2>/dev/null";
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    result.status = -1;
    return result;
  }
  std::array<char, 65536> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), n);
  }
  result.status = pclose(pipe);
  return result;
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      out.emplace_back(text.substr(start));
      break;
    }
    out.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool is_javascript(const std::string& path) {
  const auto ext = std::filesystem::path(path).extension().string();
  return ext == ".js" || ext == ".mjs" || ext == ".cjs";
}

}  // namespace

ChangeSet Repository::diff(const std::string& base, const std::string& head) const {
  check_revision(base);
  check_revision(head);
  ChangeSet out{base, head, {}};
  const auto before = files(base);
  for (const auto& path : files(head)) {
    const auto content = read(head, path);
    std::set<std::uint32_t> lines;
    if (!std::binary_search(before.begin(), before.end(), path)) {
      const auto n = split_lines(content).size();
      for (std::uint32_t l = 1; l <= n; ++l) lines.insert(l);
    } else {
      lines = changed_lines(read(base, path), content);
    }
    if (!lines.empty()) out.lines.emplace(path, std::move(lines));
  }
  return out;
}

std::set<std::uint32_t> changed_lines(std::string_view before, std::string_view after) {
  const auto a = split_lines(before);
  const auto b = split_lines(after);
  std::size_t prefix = 0;
  while (prefix < a.size() && prefix < b.size() && a[prefix] == b[prefix]) ++prefix;
  std::size_t suffix = 0;
  while (suffix < a.size() - prefix && suffix < b.size() - prefix &&
         a[a.size() - 1 - suffix] == b[b.size() - 1 - suffix]) {
    ++suffix;
  }
  const std::size_t n = a.size() - prefix - suffix;
  const std::size_t m = b.size() - prefix - suffix;
  std::set<std::uint32_t> out;
  auto mark = [&](std::size_t j) { out.insert(static_cast<std::uint32_t>(prefix + j + 1)); };
  if (n == 0 || m == 0 || n * m > 40'000'000) {
    for (std::size_t j = 0; j < m; ++j) mark(j);
    return out;
  }
  // table[i][j]: LCS length of a[prefix+i..] and b[prefix+j..].
  std::vector<std::uint32_t> table((n + 1) * (m + 1), 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return table[i * (m + 1) + j]; };
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      at(i, j) = a[prefix + i] == b[prefix + j] ? at(i + 1, j + 1) + 1
                                                : std::max(at(i + 1, j), at(i, j + 1));
    }
  }
  std::size_t i = 0;
  std::size_t j = 0;
  while (j < m) {
    if (i < n && a[prefix + i] == b[prefix + j]) {
      ++i;
      ++j;
    } else if (i < n && at(i + 1, j) >= at(i, j + 1)) {
      ++i;
    } else {
      mark(j++);
    }
  }
  return out;
}

std::map<std::string, std::set<std::uint32_t>> parse_unified_diff(std::string_view diff) {
  std::map<std::string, std::set<std::uint32_t>> out;
  std::string current;
  for (const auto& line : split_lines(diff)) {
    if (line.rfind("+++ ", 0) == 0) {
      current = line.substr(4);
      if (current == "/dev/null") {
        current.clear();
      } else if (current.rfind("b/", 0) == 0) {
        current = current.substr(2);
      }
      continue;
    }
    if (line.rfind("@@ ", 0) != 0 || current.empty()) continue;
    const auto plus = line.find(" +");
    if (plus == std::string::npos) continue;
    std::uint32_t start = 0;
    std::uint32_t count = 1;
    std::istringstream in(line.substr(plus + 2));
    in >> start;
    if (in.peek() == ',') {
      in.get();
      in >> count;
    }
    for (std::uint32_t l = start; l < start + count; ++l) out[current].insert(l);
  }
  return out;
}

// ---- git ---------------------------------------------------------------------

GitRepository::GitRepository(std::filesystem::path root) : root_(std::move(root)) {}

std::vector<std::string> GitRepository::files(const std::string& revision) const {
  check_revision(revision);
  const auto result =
      revision == kWorkingTree
          ? run({"git", "-C", root_.string(), "ls-files", "--cached", "--others",
                 "--exclude-standard"})
          : run({"git", "-C", root_.string(), "ls-tree", "-r", "--name-only", revision});
  auto out = split_lines(result.output);
  if (revision == kWorkingTree) {
    std::erase_if(out, [&](const std::string& p) {
      return !std::filesystem::is_regular_file(root_ / p);
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string GitRepository::read(const std::string& revision, const std::string& path) const {
  if (revision == kWorkingTree) return read_file(root_ / path);
  const auto result = run({"git", "-C", root_.string(), "show", revision + ":" + path});
  if (result.status != 0) throw RevisionNotFound(revision + ":" + path);
  return result.output;
}

void GitRepository::check_revision(const std::string& revision) const {
  if (revision == kWorkingTree) return;
  const auto result = run({"git", "-C", root_.string(), "rev-parse", "--verify", "--quiet",
                           revision + "^{commit}"});
  if (result.status != 0) throw RevisionNotFound("unknown revision: " + revision);
}

ChangeSet GitRepository::diff(const std::string& base, const std::string& head) const {
  check_revision(base);
  check_revision(head);
  std::vector<std::string> args{"git", "-C", root_.string(), "diff", "-U0", "--no-color",
                                "--no-ext-diff", "--no-renames", base};
  if (head != kWorkingTree) args.push_back(head);
  ChangeSet out{base, head, parse_unified_diff(run(args).output)};
  if (head == kWorkingTree) {
    // Untracked files are new in their entirety.
    const auto untracked = run({"git", "-C", root_.string(), "ls-files", "--others",
                                "--exclude-standard"});
    for (const auto& path : split_lines(untracked.output)) {
      const auto n = split_lines(read(kWorkingTree, path)).size();
      for (std::uint32_t l = 1; l <= n; ++l) out.lines[path].insert(l);
    }
  }
  return out;
}

// ---- directory -----------------------------------------------------------------

DirectoryRepository::DirectoryRepository(std::filesystem::path root) : root_(std::move(root)) {}

std::vector<std::string> DirectoryRepository::files(const std::string& revision) const {
  check_revision(revision);
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(root_)) {
    if (entry.is_regular_file()) {
      out.push_back(std::filesystem::relative(entry.path(), root_).generic_string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string DirectoryRepository::read(const std::string& revision, const std::string& path) const {
  check_revision(revision);
  if (!std::filesystem::is_regular_file(root_ / path)) throw RevisionNotFound("no file " + path);
  return read_file(root_ / path);
}

void DirectoryRepository::check_revision(const std::string& revision) const {
  if (revision != kWorkingTree) {
    throw RevisionNotFound("a plain directory has no revision " + revision);
  }
}

// ---- memory --------------------------------------------------------------------

void MemoryRepository::put(const std::string& revision, const std::string& path,
                           std::string content) {
  revisions_[revision][path] = std::move(content);
}

std::vector<std::string> MemoryRepository::files(const std::string& revision) const {
  check_revision(revision);
  std::vector<std::string> out;
  for (const auto& [path, content] : revisions_.at(revision)) out.push_back(path);
  return out;
}

std::string MemoryRepository::read(const std::string& revision, const std::string& path) const {
  check_revision(revision);
  const auto& files = revisions_.at(revision);
  const auto it = files.find(path);
  if (it == files.end()) throw RevisionNotFound(revision + ":" + path);
  return it->second;
}

void MemoryRepository::check_revision(const std::string& revision) const {
  if (!revisions_.count(revision)) throw RevisionNotFound("unknown revision: " + revision);
}

// ---- changesets ------------------------------------------------------------------

ChangesetReport analyze_changeset(const Model& model, const Repository& repository,
                                  const ChangeSet& changeset, const AnalysisOptions& options) {
  repository.check_revision(changeset.base);
  repository.check_revision(changeset.head);
  ChangesetReport report;
  std::size_t budget_used = 0;
  for (const auto& [path, lines] : changeset.lines) {
    if (lines.empty() || !is_javascript(path)) continue;
    auto content = repository.read(changeset.head, path);
    if (content.size() > options.max_bytes) {
      report.skipped.push_back({path, SizeExceeded("file exceeds the analysis cap").what()});
      continue;
    }
    if (budget_used + content.size() > options.max_bytes) {
      report.skipped.push_back({path, "analysis byte budget exhausted"});
      continue;
    }
    budget_used += content.size();
    try {
      for (auto& s : suggest(model, path, std::move(content), lines, options)) {
        report.suggestions.push_back(std::move(s));
      }
    } catch (const Error& e) {
      spdlog::warn("skipping {}: {}", path, e.what());
      report.skipped.push_back({path, e.what()});
    }
  }
  return report;
}

}  // namespace stylemine::apply
