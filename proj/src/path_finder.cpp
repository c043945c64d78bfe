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

#include "bridge/path_finder.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace bridge {

bool is_cyclic(std::span<const RelationId> relations, const Schema& schema) {
  // (r_i ... r_j) is cyclic iff some s exists with r_i below s and r_j below
  // s's inverse, i != j. Equivalent pairwise test: the ancestor set of one
  // relation intersects the inverted ancestor set of the other.
  for (std::size_t i = 0; i < relations.size(); ++i) {
    for (std::size_t j = i + 1; j < relations.size(); ++j) {
      for (RelationId ancestor : schema.relation_ancestors(relations[i])) {
        if (schema.subsumes(schema.inverse(ancestor), relations[j])) return true;
      }
    }
  }
  return false;
}

bool is_cyclic(const ConceptualPath& path, const Schema& schema) {
  return is_cyclic(std::span<const RelationId>(path.relations), schema);
}

bool path_order_less(const ConceptualPath& a, const ConceptualPath& b, const Schema& schema) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (std::size_t i = 0; i < a.length(); ++i) {
    const std::string& left = schema.name(a.relations[i]);
    const std::string& right = schema.name(b.relations[i]);
    if (left != right) return left < right;
  }
  return false;
}

std::vector<ConceptualPath> find_connected_paths(ConceptId from, ConceptId to,
                                                 const Schema& schema,
                                                 const SearchConfig& config) {
  const std::size_t relation_count = schema.relation_count();
  std::vector<ConceptualPath> results;

  // Multiset of inverted ancestors of the relations on the current partial
  // path; a candidate relation closes a cycle iff one of its ancestors is in
  // here.
  std::vector<int> forbidden(relation_count, 0);
  std::vector<std::uint8_t> visited(schema.concept_count(), 0);
  ConceptualPath current;
  current.waypoints.push_back(from);
  visited[index_of(from)] = 1;

  std::function<void(ConceptId)> expand = [&](ConceptId at) {
    if (!current.relations.empty() && schema.comparable(current.waypoints.back(), to))
      results.push_back(current);
    if (config.max_length && current.relations.size() >= *config.max_length) return;

    for (RelationId relation : schema.roles_of(at)) {
      if (config.prune_cyclic) {
        bool cyclic = false;
        for (RelationId ancestor : schema.relation_ancestors(relation)) {
          if (forbidden[index_of(ancestor)] > 0) {
            cyclic = true;
            break;
          }
        }
        if (cyclic) continue;
      }
      ConceptId next = schema.range(relation);
      if (config.distinct_waypoints && visited[index_of(next)]) continue;

      current.relations.push_back(relation);
      current.waypoints.push_back(next);
      visited[index_of(next)] = 1;
      for (RelationId ancestor : schema.relation_ancestors(relation))
        ++forbidden[index_of(schema.inverse(ancestor))];

      expand(next);

      for (RelationId ancestor : schema.relation_ancestors(relation))
        --forbidden[index_of(schema.inverse(ancestor))];
      visited[index_of(next)] = 0;
      current.waypoints.pop_back();
      current.relations.pop_back();
    }
  };
  expand(from);

  std::sort(results.begin(), results.end(), [&](const ConceptualPath& a, const ConceptualPath& b) {
    return path_order_less(a, b, schema);
  });
  return results;
}

std::vector<ConceptualPath> well_formed_paths(ConceptId from, ConceptId to,
                                              const Schema& schema, const SearchConfig& config) {
  SearchConfig pruned = config;
  pruned.prune_cyclic = true;
  return find_connected_paths(from, to, schema, pruned);
}

std::string format_path(std::span<const RelationId> relations, const Schema& schema) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (i > 0) out << ' ';
    out << schema.name(relations[i]);
  }
  out << ')';
  return out.str();
}

std::string format_path(const ConceptualPath& path, const Schema& schema) {
  return format_path(std::span<const RelationId>(path.relations), schema);
}

}  // namespace bridge
