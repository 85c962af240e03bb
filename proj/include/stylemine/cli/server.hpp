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


#ifndef STYLEMINE_CLI_SERVER_HPP
#define STYLEMINE_CLI_SERVER_HPP

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stylemine/cli/config.hpp"
#include "stylemine/cli/model_file.hpp"

namespace stylemine::cli {

struct ServerOptions {
  std::filesystem::path corpus_root;
  /// Directory of static visualizer files mounted at `/`; none when empty.
  std::filesystem::path assets;
  /// Defaults to `<corpus_root>/.stylemine.yml`.
  std::optional<std::filesystem::path> config_path;
  std::string host = "127.0.0.1";
  int port = 8080;
};

/// HTTP backend of the visualizer.
///
///   GET  /files                                   {"files": [path...]}
///   GET  /annotate?path=&confidence=&support=     annotation document
///   POST /blacklist  {"hash": "<hex>"}           {"hash", "blacklisted", "blacklist"}
///
/// Errors are JSON objects {"error": message} with 400, 404, 413 or 422.
/// Read requests run concurrently; blacklist writes hold an exclusive lock
/// on `<config>.lock`.
class AnnotationServer {
 public:
  AnnotationServer(ModelFile model, ServerOptions options);
  ~AnnotationServer();
  AnnotationServer(const AnnotationServer&) = delete;
  AnnotationServer& operator=(const AnnotationServer&) = delete;

  /// JavaScript files under the corpus root, relative and sorted.
  std::vector<std::string> files() const;

  /// Binds to `options.port`, or any free port when it is 0, and returns the
  /// bound port.
  int bind();
  /// Serves until stop(); call bind() first.
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace stylemine::cli

#endif  // STYLEMINE_CLI_SERVER_HPP
