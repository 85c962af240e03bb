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


#ifndef STYLEMINE_CLI_MODEL_FILE_HPP
#define STYLEMINE_CLI_MODEL_FILE_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "stylemine/apply/model.hpp"
#include "stylemine/cli/train.hpp"

namespace stylemine::cli {

inline constexpr std::uint32_t kModelFormatVersion = 1;

struct ModelFile {
  apply::Model model;
  TrainingInfo info;
};

/// Layout: "SMDL", format version (u32 LE), SHA-256 of the payload, then
/// the zlib-compressed payload. The payload is a sequence of named entries
/// (manifest.json, vocabulary.json, scheme.json, rules.json, forest.bin) in
/// name order. Identical models give identical bytes.
std::string encode_model(const ModelFile& file);
/// Throws IncompatibleModelVersion for other format versions and Error for
/// corrupt or tampered files.
ModelFile decode_model(std::string_view bytes);

void save_model(const ModelFile& file, const std::filesystem::path& path);
ModelFile load_model(const std::filesystem::path& path);

/// Hex SHA-256 of the encoded model.
std::string model_digest(const ModelFile& file);

}  // namespace stylemine::cli

#endif  // STYLEMINE_CLI_MODEL_FILE_HPP
