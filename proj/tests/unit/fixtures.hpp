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


#ifndef STYLEMINE_TESTS_FIXTURES_HPP
#define STYLEMINE_TESTS_FIXTURES_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "stylemine/cli/train.hpp"

namespace stylemine::testing {

/// Trained once per process: 60 generated jQuery-style files, no search.
const cli::TrainResult& synthetic_model();
/// Trained once per process on the bundled jQuery sources, no search.
const cli::TrainResult& jquery_model();

std::vector<cli::SourceFile> jquery_files();
std::filesystem::path jquery_root();

/// Small snippet with one misplaced newline, one quote and one padded call.
extern const char* const kIsArraySnippet;
/// The same function in consistent jQuery style.
extern const char* const kIsArraySnippetClean;
/// The isArray snippet with four seeded defects: no padding in calls, four
/// spaces for a tab, a one-line if-block and single quotes.
extern const char* const kIsArraySnippetDefects;

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace stylemine::testing

#endif  // STYLEMINE_TESTS_FIXTURES_HPP
