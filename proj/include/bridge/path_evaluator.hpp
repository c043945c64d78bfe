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

#ifndef BRIDGE_PATH_EVALUATOR_HPP_
#define BRIDGE_PATH_EVALUATOR_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bridge/kb.hpp"
#include "bridge/path_finder.hpp"

namespace bridge {

// Conceptual strength of a path, strongest first.
enum class PathMarker { plausible = 0, metonymic = 1, implausible = 2 };

const char* to_string(PathMarker marker);

// The relation bases the path patterns are built from. Bases that a given
// schema does not declare are simply absent.
struct PatternSets {
  // Transitive part-whole subtypes and their inverses. A chain staying
  // within one of these behaves like a single relation of that subtype.
  std::vector<RelationId> transitive_bases;
  // Additional plausible chain bases (spatial containment, connection).
  std::vector<RelationId> extra_plausible;
  // Relations that may terminate a metonymic path (searching forward).
  std::vector<RelationId> metonymic_tail;
  // Relations that may start a metonymic path (searching backward).
  std::vector<RelationId> metonymic_head;

  // Built-in bases plus the metonymy-relation extensions of the KB file.
  static PatternSets defaults(const KnowledgeBase& kb);

  std::vector<RelationId> plausible_bases() const;
};

// Path inclusion criterion: p1 properly contains p2 as a contiguous
// sub-sequence and both paths start and end at comparable concepts. A path
// that includes another one is conceptually weaker and gets discarded.
bool includes(const ConceptualPath& p1, const ConceptualPath& p2, const Schema& schema);

// True iff every relation of the chain descends from `base`.
bool matches_star_pattern(std::span<const RelationId> relations, RelationId base,
                          const Schema& schema);

// Plausible: unit length, or a uniform chain of one transitive part-whole
// subtype (or containment/connection).
bool is_plausible(std::span<const RelationId> relations, const Schema& schema,
                  const PatternSets& patterns);

// Metonymic: not plausible, but a plausible front extended by a metonymic
// tail relation, or a metonymic head relation followed by a plausible rest.
// A uniform part-whole segment counts as a single metonymic relation.
bool is_metonymic(std::span<const RelationId> relations, const Schema& schema,
                  const PatternSets& patterns);

PathMarker classify_path(std::span<const RelationId> relations, const Schema& schema,
                         const PatternSets& patterns);
PathMarker classify_path(const ConceptualPath& path, const Schema& schema,
                         const PatternSets& patterns);

// The surviving strongest paths between two concepts. All member paths share
// one marker; empty when the concepts are not connected at all.
struct CpList {
  ConceptId from{};
  ConceptId to{};
  std::vector<ConceptualPath> paths;
  std::optional<PathMarker> marker;

  bool empty() const noexcept { return paths.empty(); }
};

// Why a candidate path did not make it into the CP list.
enum class PathFate { kept, cyclic, included, weaker_marker };

struct PathAudit {
  ConceptualPath path;
  PathFate fate;
  std::optional<PathMarker> marker;            // set unless fate == cyclic
  std::optional<std::size_t> included_target;  // audit index of the stronger path
};

struct CpListTrace {
  std::vector<PathAudit> audits;  // all connected paths in deterministic order
  CpList result;
};

// Pipeline: well-formed paths -> drop paths that include another member ->
// classify -> keep only the strongest marker class present.
CpList build_cp_list(ConceptId from, ConceptId to, const Schema& schema,
                     const PatternSets& patterns, const SearchConfig& config = {});

// Same pipeline, but also reports every rejected path with its reason.
CpListTrace build_cp_list_trace(ConceptId from, ConceptId to, const Schema& schema,
                                const PatternSets& patterns, const SearchConfig& config = {});

std::optional<PathMarker> path_marker_of_list(const CpList& list);

// Strength order over CP lists: by marker, any non-empty list beats an
// empty one. Both comparisons expect lists sharing their `from` concept.
bool is_stronger_than(const CpList& a, const CpList& b);
bool equally_strong_as(const CpList& a, const CpList& b);

// plausible 0, metonymic 1, implausible 2, empty 3.
int strength_rank(const CpList& list);

}  // namespace bridge

#endif  // BRIDGE_PATH_EVALUATOR_HPP_
