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


#ifndef STYLEMINE_ERRORS_HPP
#define STYLEMINE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stylemine {

/// Base of every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define STYLEMINE_DEFINE_ERROR(Name)      \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

// syntax
STYLEMINE_DEFINE_ERROR(ParseError);
STYLEMINE_DEFINE_ERROR(EncodingError);
STYLEMINE_DEFINE_ERROR(ReconstructionError);
// features
STYLEMINE_DEFINE_ERROR(UnsupportedCharacter);
STYLEMINE_DEFINE_ERROR(EmptyVocabulary);
STYLEMINE_DEFINE_ERROR(DegenerateInput);
// rules
STYLEMINE_DEFINE_ERROR(HashCollision);
// apply
STYLEMINE_DEFINE_ERROR(RenderError);
STYLEMINE_DEFINE_ERROR(SizeExceeded);
STYLEMINE_DEFINE_ERROR(RevisionNotFound);
// bench
STYLEMINE_DEFINE_ERROR(TooFewFiles);
STYLEMINE_DEFINE_ERROR(NoEligibleSite);
// cli
STYLEMINE_DEFINE_ERROR(EmptyCorpus);
STYLEMINE_DEFINE_ERROR(IncompatibleModelVersion);
STYLEMINE_DEFINE_ERROR(ConfigError);

#undef STYLEMINE_DEFINE_ERROR

}  // namespace stylemine

#endif  // STYLEMINE_ERRORS_HPP
