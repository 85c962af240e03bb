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


#ifndef STYLEMINE_CLI_CONFIG_HPP
#define STYLEMINE_CLI_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace stylemine::cli {

inline constexpr const char* kConfigFileName = ".stylemine.yml";

struct RunConfig {
  double confidence_threshold = 0.92;
  std::uint64_t min_support = 0;
  std::size_t min_label_occurrences = 80;
  std::uint32_t n_trees = 10;
  std::uint32_t min_samples_leaf = 80;
  std::size_t training_byte_cap = 2u << 20;
  std::size_t max_line_length = 500;
  std::size_t feature_top_k = 500;
  double jaccard_threshold = 0.98;
  std::uint64_t seed = 0;
  std::size_t search_budget = 100;
  std::size_t search_folds = 3;
  std::size_t search_max_samples = 10000;
  std::set<std::uint32_t> blacklist;

  /// Throws ConfigError for out-of-range values.
  void validate() const;
};

/// Values set in a config file or on the command line; unset fields fall
/// through to the next source.
struct ConfigOverrides {
  std::optional<double> confidence_threshold;
  std::optional<std::uint64_t> min_support;
  std::optional<std::size_t> min_label_occurrences;
  std::optional<std::uint32_t> n_trees;
  std::optional<std::uint32_t> min_samples_leaf;
  std::optional<std::size_t> training_byte_cap;
  std::optional<std::size_t> max_line_length;
  std::optional<std::size_t> feature_top_k;
  std::optional<double> jaccard_threshold;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> search_budget;
  std::optional<std::size_t> search_folds;
  std::optional<std::size_t> search_max_samples;
  std::optional<std::set<std::uint32_t>> blacklist;

  void apply_to(RunConfig& config) const;
};

/// Parses `.stylemine.yml` text. Unknown keys and malformed values raise
/// ConfigError.
ConfigOverrides parse_config(std::string_view yaml);
/// Empty overrides when the file does not exist.
ConfigOverrides load_config_file(const std::filesystem::path& path);

/// Defaults, then the repository file, then command-line flags.
RunConfig resolve_config(const ConfigOverrides& file, const ConfigOverrides& flags);

/// Rewrites the `blacklist` key of a config file, keeping other keys.
void write_blacklist(const std::filesystem::path& path, const std::set<std::uint32_t>& blacklist);

}  // namespace stylemine::cli

#endif  // STYLEMINE_CLI_CONFIG_HPP
