// Copyright 2026 The Bridge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BRIDGE_TESTS_SUPPORT_FIXTURES_HPP_
#define BRIDGE_TESTS_SUPPORT_FIXTURES_HPP_

#include <string>
#include <vector>

#include "bridge/kb.hpp"
#include "bridge/kb_loader.hpp"
#include "bridge/path_finder.hpp"

namespace bridge::testing {

inline std::string data_path(const std::string& file) {
  return std::string(BRIDGE_DATA_DIR) + "/" + file;
}

inline KnowledgeBase demo_kb() { return load_kb_file(data_path("demo.kb")); }

inline std::vector<RelationId> relations(const Schema& schema,
                                         const std::vector<std::string>& names) {
  std::vector<RelationId> out;
  for (const auto& name : names) out.push_back(schema.relation_ref(name));
  return out;
}

inline bool contains_path(const std::vector<ConceptualPath>& paths, const Schema& schema,
                          const std::vector<std::string>& names) {
  std::vector<RelationId> wanted = relations(schema, names);
  for (const auto& path : paths)
    if (path.relations == wanted) return true;
  return false;
}

}  // namespace bridge::testing

#endif  // BRIDGE_TESTS_SUPPORT_FIXTURES_HPP_
