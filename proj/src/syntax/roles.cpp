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


#include "stylemine/syntax/roles.hpp"

#include <json.hpp>

#include "stylemine/errors.hpp"
#include "stylemine_roles_javascript.inc"

namespace stylemine::syntax {

RoleTaxonomy RoleTaxonomy::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid role taxonomy: ") + e.what());
  }
  RoleTaxonomy out;
  out.language_ = doc.at("language").get<std::string>();
  out.version_ = doc.at("version").get<int>();
  out.roles_ = doc.at("roles").get<std::vector<std::string>>();
  if (out.roles_.size() > kMaxRoles) throw ConfigError("too many roles in taxonomy");
  for (const auto& [type, roles] : doc.at("mapping").items()) {
    RoleSet set;
    for (const auto& role : roles) {
      const int idx = out.role_index(role.get<std::string>());
      if (idx < 0) throw ConfigError("unknown role '" + role.get<std::string>() + "' for " + type);
      set.set(static_cast<std::size_t>(idx));
    }
    out.mapping_.emplace(type, set);
  }
  return out;
}

const RoleTaxonomy& RoleTaxonomy::javascript() {
  static const RoleTaxonomy taxonomy = from_json(kJavaScriptRolesJson);
  return taxonomy;
}

RoleSet RoleTaxonomy::roles_for(std::string_view internal_type) const {
  const auto it = mapping_.find(internal_type);
  return it == mapping_.end() ? RoleSet{} : it->second;
}

int RoleTaxonomy::role_index(std::string_view role) const {
  for (std::size_t i = 0; i < roles_.size(); ++i) {
    if (roles_[i] == role) return static_cast<int>(i);
  }
  return -1;
}

std::vector<std::string> RoleTaxonomy::names(const RoleSet& set) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < roles_.size(); ++i) {
    if (set.test(i)) out.push_back(roles_[i]);
  }
  return out;
}

}  // namespace stylemine::syntax
