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


#include "stylemine/cli/config.hpp"

#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "stylemine/errors.hpp"
#include "stylemine/rules/rules.hpp"

namespace stylemine::cli {
namespace {

template <typename T>
void set_if(const std::optional<T>& value, T& target) {
  if (value) target = *value;
}

template <typename T>
T scalar(const YAML::Node& node, const std::string& key) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError("invalid value for '" + key + "'");
  }
}

}  // namespace

void RunConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ConfigError(what);
  };
  require(confidence_threshold >= 0.0 && confidence_threshold <= 1.0,
          "confidence_threshold must lie in [0, 1]");
  require(jaccard_threshold >= 0.0 && jaccard_threshold <= 1.0,
          "jaccard_threshold must lie in [0, 1]");
  require(min_label_occurrences >= 1, "min_label_occurrences must be positive");
  require(n_trees >= 1, "n_trees must be positive");
  require(min_samples_leaf >= 1, "min_samples_leaf must be positive");
  require(training_byte_cap >= 1, "training_byte_cap must be positive");
  require(max_line_length >= 1, "max_line_length must be positive");
  require(feature_top_k >= 1, "feature_top_k must be positive");
  require(search_folds >= 2, "search_folds must be at least 2");
}

void ConfigOverrides::apply_to(RunConfig& c) const {
  set_if(confidence_threshold, c.confidence_threshold);
  set_if(min_support, c.min_support);
  set_if(min_label_occurrences, c.min_label_occurrences);
  set_if(n_trees, c.n_trees);
  set_if(min_samples_leaf, c.min_samples_leaf);
  set_if(training_byte_cap, c.training_byte_cap);
  set_if(max_line_length, c.max_line_length);
  set_if(feature_top_k, c.feature_top_k);
  set_if(jaccard_threshold, c.jaccard_threshold);
  set_if(seed, c.seed);
  set_if(search_budget, c.search_budget);
  set_if(search_folds, c.search_folds);
  set_if(search_max_samples, c.search_max_samples);
  set_if(blacklist, c.blacklist);
}

ConfigOverrides parse_config(std::string_view yaml) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml));
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  ConfigOverrides out;
  if (!root || root.IsNull()) return out;
  if (!root.IsMap()) throw ConfigError("config must be a mapping");
  for (const auto& entry : root) {
    const auto key = entry.first.as<std::string>();
    const auto& v = entry.second;
    if (key == "confidence_threshold") {
      out.confidence_threshold = scalar<double>(v, key);
    } else if (key == "min_support") {
      out.min_support = scalar<std::uint64_t>(v, key);
    } else if (key == "min_label_occurrences") {
      out.min_label_occurrences = scalar<std::size_t>(v, key);
    } else if (key == "n_trees") {
      out.n_trees = scalar<std::uint32_t>(v, key);
    } else if (key == "min_samples_leaf") {
      out.min_samples_leaf = scalar<std::uint32_t>(v, key);
    } else if (key == "training_byte_cap") {
      out.training_byte_cap = scalar<std::size_t>(v, key);
    } else if (key == "max_line_length") {
      out.max_line_length = scalar<std::size_t>(v, key);
    } else if (key == "feature_top_k") {
      out.feature_top_k = scalar<std::size_t>(v, key);
    } else if (key == "jaccard_threshold") {
      out.jaccard_threshold = scalar<double>(v, key);
    } else if (key == "seed") {
      out.seed = scalar<std::uint64_t>(v, key);
    } else if (key == "search_budget") {
      out.search_budget = scalar<std::size_t>(v, key);
    } else if (key == "search_folds") {
      out.search_folds = scalar<std::size_t>(v, key);
    } else if (key == "search_max_samples") {
      out.search_max_samples = scalar<std::size_t>(v, key);
    } else if (key == "blacklist") {
      if (!v.IsSequence() && !v.IsNull()) throw ConfigError("blacklist must be a list");
      std::set<std::uint32_t> hashes;
      for (const auto& h : v) hashes.insert(rules::parse_hash(scalar<std::string>(h, key)));
      out.blacklist = std::move(hashes);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return out;
}

ConfigOverrides load_config_file(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return {};
  std::ifstream in(path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

RunConfig resolve_config(const ConfigOverrides& file, const ConfigOverrides& flags) {
  RunConfig config;
  file.apply_to(config);
  flags.apply_to(config);
  config.validate();
  return config;
}

void write_blacklist(const std::filesystem::path& path, const std::set<std::uint32_t>& blacklist) {
  YAML::Node root;
  if (std::filesystem::exists(path)) {
    load_config_file(path);  // reject malformed files before rewriting them
    root = YAML::LoadFile(path.string());
  }
  if (!root || root.IsNull()) root = YAML::Node(YAML::NodeType::Map);
  YAML::Node list(YAML::NodeType::Sequence);
  for (const auto h : blacklist) list.push_back(rules::hash_hex(h));
  root["blacklist"] = list;
  YAML::Emitter out;
  out << root;
  std::ofstream file(path, std::ios::trunc);
  file << out.c_str() << "\n";
}

}  // namespace stylemine::cli
