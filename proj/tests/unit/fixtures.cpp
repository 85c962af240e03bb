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


#include "fixtures.hpp"

#include <atomic>
#include <fstream>
#include <random>
#include <sstream>

#include "stylemine/apply/repository.hpp"
#include "stylemine/bench/generator.hpp"

namespace stylemine::testing {

const char* const kIsArraySnippet =
    "function classesToArray( value ) {\n"
    "\tif ( isArray( value ) ) {return value;}\n"
    "\tif ( typeof value === \"string\" ) {\n"
    "\t\treturn value.match( rnothtml ) || [];\n"
    "\t}\n"
    "\treturn [];\n"
    "}";

const char* const kIsArraySnippetClean =
    "function classesToArray( value ) {\n"
    "\tif ( isArray( value ) ) {\n"
    "\t\treturn value;\n"
    "\t}\n"
    "\tif ( typeof value === \"string\" ) {\n"
    "\t\treturn value.match( rnothtml ) || [];\n"
    "\t}\n"
    "\treturn [];\n"
    "}\n";

const char* const kIsArraySnippetDefects =
    "function classesToArray(value) {\n"
    "\tif ( isArray(value) ) {return value;}\n"
    "\tif ( typeof value === 'string' ) {\n"
    "\t    return value.match(rnothtml) || [];\n"
    "\t}\n"
    "\treturn [];\n"
    "}\n";

const cli::TrainResult& synthetic_model() {
  static const cli::TrainResult result = [] {
    cli::RunConfig config;
    config.search_budget = 0;
    return cli::train_model(bench::generate_corpus(60, 7), config);
  }();
  return result;
}

std::filesystem::path jquery_root() {
  return std::filesystem::path(STYLEMINE_DATA_DIR) / "corpus" / "jquery-3.7.1";
}

std::vector<cli::SourceFile> jquery_files() {
  return cli::collect_files(apply::DirectoryRepository(jquery_root()), apply::kWorkingTree);
}

const cli::TrainResult& jquery_model() {
  static const cli::TrainResult result = [] {
    cli::RunConfig config;
    config.search_budget = 0;
    return cli::train_model(jquery_files(), config);
  }();
  return result;
}

TempDir::TempDir() {
  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  path_ = std::filesystem::temp_directory_path() /
          ("stylemine-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace stylemine::testing
