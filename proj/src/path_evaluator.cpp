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

#include "bridge/path_evaluator.hpp"

#include <algorithm>

namespace bridge {

namespace {

const char* const kTransitiveBaseNames[] = {
    "has-physical-part", "collection-member", "mass-portion",
    "process-phase",     "event-feature",     "area-place",
};
const char* const kExtraPlausibleNames[] = {"spatial-containment", "connection"};
const char* const kMetonymicTailNames[] = {"has-part", "part-of", "produced-by"};
const char* const kMetonymicHeadNames[] = {"part-of", "has-part", "produces"};

void push_unique(std::vector<RelationId>& list, RelationId id) {
  if (std::find(list.begin(), list.end(), id) == list.end()) list.push_back(id);
}

// A segment counts as one metonymic relation when it is a single relation
// below one of the bases, or a uniform part-whole chain whose subtype base
// is below one of the bases.
bool is_metonymic_segment(std::span<const RelationId> segment,
                          const std::vector<RelationId>& bases, const Schema& schema,
                          const PatternSets& patterns) {
  if (segment.empty()) return false;
  if (segment.size() == 1) {
    for (RelationId base : bases)
      if (schema.subsumes(base, segment[0])) return true;
    return false;
  }
  for (RelationId subtype : patterns.transitive_bases) {
    if (!matches_star_pattern(segment, subtype, schema)) continue;
    for (RelationId base : bases)
      if (schema.subsumes(base, subtype)) return true;
  }
  return false;
}

}  // namespace

const char* to_string(PathMarker marker) {
  switch (marker) {
    case PathMarker::plausible: return "plausible";
    case PathMarker::metonymic: return "metonymic";
    case PathMarker::implausible: return "implausible";
  }
  return "?";
}

PatternSets PatternSets::defaults(const KnowledgeBase& kb) {
  PatternSets sets;
  const Schema& schema = kb.schema;
  for (const char* name : kTransitiveBaseNames) {
    if (auto id = schema.find_relation(name)) {
      push_unique(sets.transitive_bases, *id);
      push_unique(sets.transitive_bases, schema.inverse(*id));
    }
  }
  for (const char* name : kExtraPlausibleNames)
    if (auto id = schema.find_relation(name)) push_unique(sets.extra_plausible, *id);
  for (const char* name : kMetonymicTailNames)
    if (auto id = schema.find_relation(name)) push_unique(sets.metonymic_tail, *id);
  for (const char* name : kMetonymicHeadNames)
    if (auto id = schema.find_relation(name)) push_unique(sets.metonymic_head, *id);
  for (const auto& [relation, inverse] : kb.metonymy_extensions) {
    push_unique(sets.metonymic_tail, schema.relation_ref(relation));
    push_unique(sets.metonymic_head, schema.relation_ref(inverse));
  }
  return sets;
}

std::vector<RelationId> PatternSets::plausible_bases() const {
  std::vector<RelationId> bases = transitive_bases;
  for (RelationId id : extra_plausible) push_unique(bases, id);
  return bases;
}

bool includes(const ConceptualPath& p1, const ConceptualPath& p2, const Schema& schema) {
  const std::size_t n = p1.length();
  const std::size_t m = p2.length();
  if (m == 0 || m > n) return false;

  bool window_found = false;
  for (std::size_t i = 0; i + m <= n && !window_found; ++i) {
    if (i == 0 && m == n) continue;  // proper containment only
    bool equal = true;
    for (std::size_t k = 0; k < m; ++k) {
      if (p1.relations[i + k] != p2.relations[k]) {
        equal = false;
        break;
      }
    }
    window_found = equal;
  }
  if (!window_found) return false;

  ConceptId p1_start = schema.domain(p1.relations.front());
  ConceptId p2_start = schema.domain(p2.relations.front());
  ConceptId p1_end = schema.range(p1.relations.back());
  ConceptId p2_end = schema.range(p2.relations.back());
  return schema.comparable(p1_start, p2_start) && schema.comparable(p1_end, p2_end);
}

bool matches_star_pattern(std::span<const RelationId> relations, RelationId base,
                          const Schema& schema) {
  if (relations.empty()) return false;
  for (RelationId relation : relations)
    if (!schema.subsumes(base, relation)) return false;
  return true;
}

bool is_plausible(std::span<const RelationId> relations, const Schema& schema,
                  const PatternSets& patterns) {
  if (relations.size() == 1) return true;
  for (RelationId base : patterns.transitive_bases)
    if (matches_star_pattern(relations, base, schema)) return true;
  for (RelationId base : patterns.extra_plausible)
    if (matches_star_pattern(relations, base, schema)) return true;
  return false;
}

bool is_metonymic(std::span<const RelationId> relations, const Schema& schema,
                  const PatternSets& patterns) {
  const std::size_t n = relations.size();
  if (n < 2) return false;
  if (is_plausible(relations, schema, patterns)) return false;

  for (std::size_t split = 1; split < n; ++split) {
    auto front = relations.subspan(0, split);
    auto back = relations.subspan(split);
    if (is_plausible(front, schema, patterns) &&
        is_metonymic_segment(back, patterns.metonymic_tail, schema, patterns))
      return true;
    if (is_metonymic_segment(front, patterns.metonymic_head, schema, patterns) &&
        is_plausible(back, schema, patterns))
      return true;
  }
  return false;
}

PathMarker classify_path(std::span<const RelationId> relations, const Schema& schema,
                         const PatternSets& patterns) {
  if (is_plausible(relations, schema, patterns)) return PathMarker::plausible;
  if (is_metonymic(relations, schema, patterns)) return PathMarker::metonymic;
  return PathMarker::implausible;
}

PathMarker classify_path(const ConceptualPath& path, const Schema& schema,
                         const PatternSets& patterns) {
  return classify_path(std::span<const RelationId>(path.relations), schema, patterns);
}

CpListTrace build_cp_list_trace(ConceptId from, ConceptId to, const Schema& schema,
                                const PatternSets& patterns, const SearchConfig& config) {
  SearchConfig unpruned = config;
  unpruned.prune_cyclic = false;
  std::vector<ConceptualPath> connected = find_connected_paths(from, to, schema, unpruned);

  CpListTrace trace;
  trace.result.from = from;
  trace.result.to = to;

  std::vector<std::size_t> well_formed;  // audit indices
  for (auto& path : connected) {
    PathAudit audit;
    audit.path = std::move(path);
    audit.fate = is_cyclic(audit.path, schema) ? PathFate::cyclic : PathFate::kept;
    trace.audits.push_back(std::move(audit));
    if (trace.audits.back().fate == PathFate::kept)
      well_formed.push_back(trace.audits.size() - 1);
  }

  // A path that properly includes another well-formed path is weaker.
  for (std::size_t i : well_formed) {
    for (std::size_t j : well_formed) {
      if (i == j) continue;
      if (includes(trace.audits[i].path, trace.audits[j].path, schema)) {
        trace.audits[i].fate = PathFate::included;
        trace.audits[i].included_target = j;
        break;
      }
    }
  }

  std::optional<PathMarker> strongest;
  for (std::size_t i : well_formed) {
    PathAudit& audit = trace.audits[i];
    audit.marker = classify_path(audit.path, schema, patterns);
    if (audit.fate != PathFate::kept) continue;
    if (!strongest || *audit.marker < *strongest) strongest = audit.marker;
  }
  for (std::size_t i : well_formed) {
    PathAudit& audit = trace.audits[i];
    if (audit.fate != PathFate::kept) continue;
    if (*audit.marker != *strongest) {
      audit.fate = PathFate::weaker_marker;
      continue;
    }
    trace.result.paths.push_back(audit.path);
  }
  trace.result.marker = strongest;
  return trace;
}

CpList build_cp_list(ConceptId from, ConceptId to, const Schema& schema,
                     const PatternSets& patterns, const SearchConfig& config) {
  std::vector<ConceptualPath> candidates = well_formed_paths(from, to, schema, config);

  std::vector<bool> dominated(candidates.size(), false);
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = 0; j < candidates.size() && !dominated[i]; ++j)
      if (i != j && includes(candidates[i], candidates[j], schema)) dominated[i] = true;

  CpList list;
  list.from = from;
  list.to = to;
  std::vector<PathMarker> markers(candidates.size());
  std::optional<PathMarker> strongest;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (dominated[i]) continue;
    markers[i] = classify_path(candidates[i], schema, patterns);
    if (!strongest || markers[i] < *strongest) strongest = markers[i];
  }
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (!dominated[i] && markers[i] == *strongest) list.paths.push_back(std::move(candidates[i]));
  list.marker = strongest;
  return list;
}

std::optional<PathMarker> path_marker_of_list(const CpList& list) { return list.marker; }

int strength_rank(const CpList& list) {
  if (!list.marker) return 3;
  return static_cast<int>(*list.marker);
}

bool is_stronger_than(const CpList& a, const CpList& b) {
  return strength_rank(a) < strength_rank(b);
}

bool equally_strong_as(const CpList& a, const CpList& b) {
  return strength_rank(a) == strength_rank(b);
}

}  // namespace bridge
