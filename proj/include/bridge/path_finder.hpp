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

#ifndef BRIDGE_PATH_FINDER_HPP_
#define BRIDGE_PATH_FINDER_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bridge/kb.hpp"

namespace bridge {

// A conceptual path (r_1 ... r_n) between two concepts, together with the
// concept waypoints it passes through. waypoints[0] is the start concept,
// waypoints[i] the range of relations[i-1].
struct ConceptualPath {
  std::vector<RelationId> relations;
  std::vector<ConceptId> waypoints;

  std::size_t length() const noexcept { return relations.size(); }
  bool operator==(const ConceptualPath&) const = default;
};

struct SearchConfig {
  // Maximum number of relations per path; unbounded when absent.
  std::optional<std::size_t> max_length;
  // Prune paths that revisit a waypoint concept. Guarantees termination on
  // any finite schema even without max_length.
  bool distinct_waypoints = true;
  // Drop cyclic paths during expansion. Disabled only for diagnostics and
  // for the connected-path counts of the evaluation command.
  bool prune_cyclic = true;
};

// Cyclic path criterion: a path is cyclic iff two of its relations descend
// from some relation and from its inverse, respectively. Such a path walks
// back on itself at the level of the relation hierarchy and carries no
// bridging information.
bool is_cyclic(std::span<const RelationId> relations, const Schema& schema);
bool is_cyclic(const ConceptualPath& path, const Schema& schema);

// Enumerates all connected paths from `from` to `to`: every step applies a
// role available at the current waypoint (generalization only), and the end
// point must be comparable with `to` in either direction. Cyclic paths are
// pruned during expansion when the config says so. Output is sorted by
// length, then lexicographically by relation names.
std::vector<ConceptualPath> find_connected_paths(ConceptId from, ConceptId to,
                                                 const Schema& schema,
                                                 const SearchConfig& config = {});

// Connected and non-cyclic paths, regardless of config.prune_cyclic.
std::vector<ConceptualPath> well_formed_paths(ConceptId from, ConceptId to,
                                              const Schema& schema,
                                              const SearchConfig& config = {});

// "(charge-time-of accumulator-of)"
std::string format_path(const ConceptualPath& path, const Schema& schema);
std::string format_path(std::span<const RelationId> relations, const Schema& schema);

// Deterministic output order: by length, then by relation names.
bool path_order_less(const ConceptualPath& a, const ConceptualPath& b, const Schema& schema);

}  // namespace bridge

#endif  // BRIDGE_PATH_FINDER_HPP_
