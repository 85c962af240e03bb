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


#ifndef STYLEMINE_BENCH_GENERATOR_HPP
#define STYLEMINE_BENCH_GENERATOR_HPP

#include <cstdint>
#include <vector>

#include "stylemine/cli/train.hpp"

namespace stylemine::bench {

/// Formatting conventions applied by the generator. The defaults follow the
/// jQuery code style.
struct GeneratorStyle {
  char quote = '"';
  bool tabs = true;
  std::uint32_t indent_width = 1;  // characters per level
  bool paren_padding = true;       // `f( a, b )`
  bool bracket_padding = true;     // `[ a, b ]`
  bool space_before_function_paren = false;
  bool space_after_keyword = true;  // `if (`
  bool semicolons = true;
};

/// Random but syntactically valid JavaScript files formatted strictly by
/// `style`. Identical arguments give identical files.
std::vector<cli::SourceFile> generate_corpus(std::size_t n_files, std::uint64_t seed,
                                             const GeneratorStyle& style = {});

}  // namespace stylemine::bench

#endif  // STYLEMINE_BENCH_GENERATOR_HPP
