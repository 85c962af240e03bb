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


#ifndef STYLEMINE_SYNTAX_ROLES_HPP
#define STYLEMINE_SYNTAX_ROLES_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stylemine/syntax/tree.hpp"

namespace stylemine::syntax {

/// Fixed set of role tags plus a per-language mapping from node kinds to
/// role sets. Kinds absent from the mapping have no roles.
class RoleTaxonomy {
 public:
  static RoleTaxonomy from_json(std::string_view text);
  /// The mapping shipped with the library (data/roles/javascript.json).
  static const RoleTaxonomy& javascript();

  const std::string& language() const { return language_; }
  int version() const { return version_; }
  const std::vector<std::string>& roles() const { return roles_; }

  RoleSet roles_for(std::string_view internal_type) const;
  /// Index of a role tag, or -1.
  int role_index(std::string_view role) const;
  std::vector<std::string> names(const RoleSet& set) const;

 private:
  std::string language_;
  int version_ = 0;
  std::vector<std::string> roles_;
  std::map<std::string, RoleSet, std::less<>> mapping_;
};

}  // namespace stylemine::syntax

#endif  // STYLEMINE_SYNTAX_ROLES_HPP
