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


#ifndef STYLEMINE_CLI_TRAIN_HPP
#define STYLEMINE_CLI_TRAIN_HPP

#include <string>
#include <vector>

#include "stylemine/apply/model.hpp"
#include "stylemine/apply/repository.hpp"
#include "stylemine/cli/config.hpp"
#include "stylemine/syntax/token_stream.hpp"

namespace stylemine::cli {

struct SourceFile {
  std::string path;
  std::string content;
};

/// Training settings recorded in the model file.
struct TrainingInfo {
  std::uint64_t seed = 0;
  std::size_t training_byte_cap = 0;
  std::size_t max_line_length = 0;
  std::size_t min_label_occurrences = 0;
  std::size_t feature_top_k = 0;
  double confidence_threshold = 0.0;
  double jaccard_threshold = 0.0;
  std::size_t search_budget = 0;
  std::string corpus_digest;
  std::size_t n_files = 0;
  std::size_t n_bytes = 0;
  std::size_t n_samples = 0;
  forest::HyperParams params;
  double search_score = 0.0;
};

struct Corpus {
  std::vector<std::string> paths;
  std::vector<syntax::TokenStream> streams;
  std::vector<apply::SkippedFile> skipped;
  std::size_t bytes = 0;
};

/// Drops files that fail to parse or have a line longer than the limit, then
/// keeps a seeded random subset within the byte cap. Kept files are in path
/// order.
Corpus prepare_corpus(std::vector<SourceFile> files, const RunConfig& config);

struct TrainResult {
  apply::Model model;
  TrainingInfo info;
  std::vector<apply::SkippedFile> skipped;
  double seconds = 0.0;
};

/// Full pipeline from source files to a rule model. The hyper-parameter
/// search keeps the configured tree count and leaf size; a zero search
/// budget trains with the default parameters. Throws EmptyCorpus and
/// EmptyVocabulary.
TrainResult train_model(std::vector<SourceFile> files, const RunConfig& config);

/// JavaScript files of a repository revision.
std::vector<SourceFile> collect_files(const apply::Repository& repository,
                                      const std::string& revision);

/// Hex SHA-256.
std::string sha256_hex(std::string_view bytes);

}  // namespace stylemine::cli

#endif  // STYLEMINE_CLI_TRAIN_HPP
