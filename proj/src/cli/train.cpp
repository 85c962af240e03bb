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


#include "stylemine/cli/train.hpp"

#include <algorithm>
#include <chrono>

#include <openssl/evp.h>
#include <spdlog/spdlog.h>

#include "stylemine/errors.hpp"
#include "stylemine/features/selection.hpp"
#include "stylemine/forest/random.hpp"
#include "stylemine/forest/search.hpp"

namespace stylemine::cli {
namespace {

std::size_t longest_line(std::string_view text) {
  std::size_t longest = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    longest = std::max(longest, nl - start);
    start = nl + 1;
  }
  return longest;
}

bool is_javascript(const std::string& path) {
  const auto ext = std::filesystem::path(path).extension().string();
  return ext == ".js" || ext == ".mjs" || ext == ".cjs";
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

std::vector<SourceFile> collect_files(const apply::Repository& repository,
                                      const std::string& revision) {
  std::vector<SourceFile> out;
  for (const auto& path : repository.files(revision)) {
    if (is_javascript(path)) out.push_back({path, repository.read(revision, path)});
  }
  return out;
}

Corpus prepare_corpus(std::vector<SourceFile> files, const RunConfig& config) {
  Corpus corpus;
  std::sort(files.begin(), files.end(),
            [](const SourceFile& a, const SourceFile& b) { return a.path < b.path; });
  forest::Rng rng(config.seed);
  rng.shuffle(files);
  std::vector<std::pair<std::string, syntax::TokenStream>> kept;
  for (auto& f : files) {
    if (longest_line(f.content) > config.max_line_length) {
      corpus.skipped.push_back({f.path, "line longer than " +
                                            std::to_string(config.max_line_length) + " bytes"});
      continue;
    }
    if (corpus.bytes + f.content.size() > config.training_byte_cap) {
      corpus.skipped.push_back({f.path, "training byte cap reached"});
      continue;
    }
    try {
      auto stream = syntax::tokenize(std::move(f.content));
      corpus.bytes += stream.source.size();
      kept.emplace_back(f.path, std::move(stream));
    } catch (const Error& e) {
      corpus.skipped.push_back({f.path, e.what()});
    }
  }
  std::sort(kept.begin(), kept.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [path, stream] : kept) {
    corpus.paths.push_back(path);
    corpus.streams.push_back(std::move(stream));
  }
  std::sort(corpus.skipped.begin(), corpus.skipped.end(),
            [](const auto& a, const auto& b) { return a.path < b.path; });
  return corpus;
}

TrainResult train_model(std::vector<SourceFile> files, const RunConfig& config) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();
  TrainResult result;
  auto corpus = prepare_corpus(std::move(files), config);
  result.skipped = corpus.skipped;
  if (corpus.streams.empty()) throw EmptyCorpus("no parseable files to train on");

  auto& model = result.model;
  model.vocabulary =
      features::build_label_vocabulary(corpus.streams, config.min_label_occurrences);
  auto scheme = features::FeatureScheme::build(corpus.streams, model.vocabulary,
                                               syntax::RoleTaxonomy::javascript());
  std::vector<features::Sample> samples;
  for (std::size_t i = 0; i < corpus.streams.size(); ++i) {
    auto s = features::extract_samples(corpus.streams[i], model.vocabulary, scheme,
                                       static_cast<std::uint32_t>(i));
    std::move(s.begin(), s.end(), std::back_inserter(samples));
  }
  if (samples.empty()) throw EmptyCorpus("corpus yields no labelled samples");
  model.scheme = features::select_features(samples, std::move(scheme), config.feature_top_k);
  const auto data = forest::make_dataset(samples, model.scheme.selected(), model.scheme.width(),
                                         model.vocabulary.size());
  samples.clear();
  samples.shrink_to_fit();

  forest::HyperParams params;
  params.n_trees = config.n_trees;
  params.min_samples_leaf = config.min_samples_leaf;
  params = params.normalized();
  double search_score = 0.0;
  if (config.search_budget > 0) {
    auto space = forest::SearchSpace::with_leaf(config.min_samples_leaf);
    space.n_trees = config.n_trees;
    forest::RandomSearch strategy(space);
    forest::SearchOptions options;
    options.budget = config.search_budget;
    options.folds = config.search_folds;
    options.seed = config.seed;
    options.max_samples = config.search_max_samples;
    const auto search = forest::optimize_hyperparams(data, strategy, options);
    params = search.best;
    search_score = search.best_score;
    spdlog::info("search: {} candidates, best {} ({:.4f})", search.trials.size(),
                 params.text(), search_score);
  }
  model.forest = forest::train_forest(data, params, config.seed);
  const rules::SampleIndex index(data, model.scheme);
  auto raw = rules::extract_rules(*model.forest, index);
  model.rules = rules::postprocess(
      std::move(raw), index,
      {config.confidence_threshold, config.jaccard_threshold, /*prune=*/true});

  std::string digest_input;
  for (std::size_t i = 0; i < corpus.paths.size(); ++i) {
    digest_input += corpus.paths[i];
    digest_input += '\0';
    digest_input += std::to_string(corpus.streams[i].source.size());
    digest_input += '\0';
    digest_input += corpus.streams[i].source;
  }
  auto& info = result.info;
  info.seed = config.seed;
  info.training_byte_cap = config.training_byte_cap;
  info.max_line_length = config.max_line_length;
  info.min_label_occurrences = config.min_label_occurrences;
  info.feature_top_k = config.feature_top_k;
  info.confidence_threshold = config.confidence_threshold;
  info.jaccard_threshold = config.jaccard_threshold;
  info.search_budget = config.search_budget;
  info.corpus_digest = sha256_hex(digest_input);
  info.n_files = corpus.paths.size();
  info.n_bytes = corpus.bytes;
  info.n_samples = data.rows();
  info.params = params;
  info.search_score = search_score;
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace stylemine::cli
