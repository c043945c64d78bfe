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

#include "bridge/kb.hpp"

#include <algorithm>
#include <functional>

namespace bridge {

namespace {

// Computes the reflexive-transitive ancestor closure of a DAG given as
// child -> parents adjacency. Throws KbError naming the kind on a cycle.
std::vector<std::vector<std::uint8_t>> ancestor_closure(
    std::size_t n, const std::function<std::vector<std::size_t>(std::size_t)>& parents,
    const std::function<std::string(std::size_t)>& name_of, const char* kind) {
  std::vector<std::vector<std::uint8_t>> closure(n, std::vector<std::uint8_t>(n, 0));
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<int> state(n, 0);

  std::function<void(std::size_t)> visit = [&](std::size_t node) {
    if (state[node] == 2) return;
    if (state[node] == 1)
      throw KbError(std::string("cycle in ") + kind + " hierarchy involving '" +
                    name_of(node) + "'");
    state[node] = 1;
    closure[node][node] = 1;
    for (std::size_t parent : parents(node)) {
      visit(parent);
      for (std::size_t k = 0; k < n; ++k)
        if (closure[parent][k]) closure[node][k] = 1;
    }
    state[node] = 2;
  };
  for (std::size_t i = 0; i < n; ++i) visit(i);
  return closure;
}

}  // namespace

void Schema::require_open(int line) const {
  if (finalized_) throw KbError("schema is sealed; no further declarations accepted", line);
}

void Schema::require_finalized() const {
  if (!finalized_) throw KbError("schema query before finalize()");
}

ConceptId Schema::declare_concept(const std::string& name, int line) {
  require_open(line);
  if (name.empty()) throw KbError("empty concept name", line);
  auto it = concept_index_.find(name);
  if (it != concept_index_.end()) return it->second;
  ConceptId id{static_cast<std::uint32_t>(concepts_.size())};
  concepts_.push_back(ConceptNode{name, {}});
  concept_index_.emplace(name, id);
  return id;
}

void Schema::add_concept_parent(const std::string& child, const std::string& parent, int line) {
  require_open(line);
  pending_concept_edges_.push_back({{child, parent}, line});
}

void Schema::declare_relation(const std::string& name, const std::string& domain,
                              const std::string& range, const std::string& inverse,
                              const std::vector<std::string>& parents, int line) {
  require_open(line);
  if (name.empty()) throw KbError("empty relation name", line);
  if (inverse.empty()) throw KbError("relation '" + name + "' declares no inverse", line);
  for (const auto& pending : pending_relations_)
    if (pending.name == name)
      throw KbError("relation '" + name + "' declared twice", line);
  pending_relations_.push_back(PendingRelation{name, domain, range, inverse, parents, line});
}

void Schema::synthesize_missing_inverses() {
  require_open(0);
  std::unordered_map<std::string, const PendingRelation*> declared;
  for (const auto& rel : pending_relations_) declared.emplace(rel.name, &rel);

  // Name of the inverse of a declared relation, needed to mirror parents.
  auto inverse_name = [&](const std::string& rel) -> std::optional<std::string> {
    if (auto it = declared.find(rel); it != declared.end()) return it->second->inverse;
    for (const auto& [name, pending] : declared)
      if (pending->inverse == rel) return name;
    return std::nullopt;
  };

  std::vector<PendingRelation> synthesized;
  for (const auto& rel : pending_relations_) {
    if (declared.count(rel.inverse)) continue;
    if (std::any_of(synthesized.begin(), synthesized.end(),
                    [&](const PendingRelation& s) { return s.name == rel.inverse; }))
      continue;
    PendingRelation mirror;
    mirror.name = rel.inverse;
    mirror.domain = rel.range;
    mirror.range = rel.domain;
    mirror.inverse = rel.name;
    mirror.line = rel.line;
    for (const auto& parent : rel.parents) {
      auto mirrored = inverse_name(parent);
      if (!mirrored)
        throw KbError("relation '" + rel.name + "' has parent '" + parent +
                          "' with no resolvable inverse",
                      rel.line);
      mirror.parents.push_back(*mirrored);
    }
    synthesized.push_back(std::move(mirror));
  }
  for (auto& rel : synthesized) pending_relations_.push_back(std::move(rel));
}

void Schema::finalize() {
  require_open(0);

  // Resolve concept parent edges.
  for (const auto& [edge, line] : pending_concept_edges_) {
    auto child = concept_index_.find(edge.first);
    auto parent = concept_index_.find(edge.second);
    if (child == concept_index_.end())
      throw KbError("unknown concept '" + edge.first + "'", line);
    if (parent == concept_index_.end())
      throw KbError("unknown concept '" + edge.second + "'", line);
    auto& parents = concepts_[index_of(child->second)].parents;
    if (std::find(parents.begin(), parents.end(), parent->second) == parents.end())
      parents.push_back(parent->second);
  }
  pending_concept_edges_.clear();

  // Materialize relations.
  relations_.clear();
  relation_index_.clear();
  for (const auto& pending : pending_relations_) {
    RelationId id{static_cast<std::uint32_t>(relations_.size())};
    if (!relation_index_.emplace(pending.name, id).second)
      throw KbError("relation '" + pending.name + "' declared twice", pending.line);
    RelationNode node;
    node.name = pending.name;
    relations_.push_back(std::move(node));
  }
  for (std::size_t i = 0; i < pending_relations_.size(); ++i) {
    const auto& pending = pending_relations_[i];
    auto& node = relations_[i];
    auto domain_it = concept_index_.find(pending.domain);
    if (domain_it == concept_index_.end())
      throw KbError("relation '" + pending.name + "': unknown domain concept '" +
                        pending.domain + "'",
                    pending.line);
    auto range_it = concept_index_.find(pending.range);
    if (range_it == concept_index_.end())
      throw KbError("relation '" + pending.name + "': unknown range concept '" +
                        pending.range + "'",
                    pending.line);
    auto inverse_it = relation_index_.find(pending.inverse);
    if (inverse_it == relation_index_.end())
      throw KbError("relation '" + pending.name + "': unknown inverse relation '" +
                        pending.inverse + "'",
                    pending.line);
    node.domain = domain_it->second;
    node.range = range_it->second;
    node.inverse = inverse_it->second;
    for (const auto& parent : pending.parents) {
      auto parent_it = relation_index_.find(parent);
      if (parent_it == relation_index_.end())
        throw KbError("relation '" + pending.name + "': unknown parent relation '" +
                          parent + "'",
                      pending.line);
      if (std::find(node.parents.begin(), node.parents.end(), parent_it->second) ==
          node.parents.end())
        node.parents.push_back(parent_it->second);
    }
  }

  // Inverse pairing must be symmetric and must swap domain and range.
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const auto& rel = relations_[i];
    const auto& inv = relations_[index_of(rel.inverse)];
    if (index_of(inv.inverse) != i)
      throw KbError("inverse mismatch: '" + rel.name + "' names '" + inv.name +
                    "' but '" + inv.name + "' names '" + relations_[index_of(inv.inverse)].name +
                    "'");
    if (inv.domain != rel.range || inv.range != rel.domain)
      throw KbError("inverse domain/range mismatch between '" + rel.name + "' and '" +
                    inv.name + "'");
  }

  // Closures (also detects cycles).
  concept_closure_ = ancestor_closure(
      concepts_.size(),
      [this](std::size_t i) {
        std::vector<std::size_t> out;
        for (ConceptId parent : concepts_[i].parents) out.push_back(index_of(parent));
        return out;
      },
      [this](std::size_t i) { return concepts_[i].name; }, "concept");
  relation_closure_ = ancestor_closure(
      relations_.size(),
      [this](std::size_t i) {
        std::vector<std::size_t> out;
        for (RelationId parent : relations_[i].parents) out.push_back(index_of(parent));
        return out;
      },
      [this](std::size_t i) { return relations_[i].name; }, "relation");

  // A subrelation may only narrow its parent's domain and range.
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const auto& rel = relations_[i];
    for (RelationId parent : rel.parents) {
      const auto& parent_node = relations_[index_of(parent)];
      bool domain_ok = concept_closure_[index_of(rel.domain)][index_of(parent_node.domain)];
      bool range_ok = concept_closure_[index_of(rel.range)][index_of(parent_node.range)];
      if (!domain_ok || !range_ok)
        throw KbError("relation '" + rel.name + "' does not narrow its parent '" +
                      parent_node.name + "' (domain/range violation)");
    }
  }

  // Applicable-role table, sorted by relation name for deterministic search.
  roles_.assign(concepts_.size(), {});
  std::vector<RelationId> by_name(relations_.size());
  for (std::size_t i = 0; i < relations_.size(); ++i)
    by_name[i] = RelationId{static_cast<std::uint32_t>(i)};
  std::sort(by_name.begin(), by_name.end(), [this](RelationId a, RelationId b) {
    return relations_[index_of(a)].name < relations_[index_of(b)].name;
  });
  for (std::size_t c = 0; c < concepts_.size(); ++c)
    for (RelationId r : by_name)
      if (concept_closure_[c][index_of(relations_[index_of(r)].domain)])
        roles_[c].push_back(r);

  relation_ancestor_lists_.assign(relations_.size(), {});
  for (std::size_t r = 0; r < relations_.size(); ++r)
    for (std::size_t s = 0; s < relations_.size(); ++s)
      if (relation_closure_[r][s])
        relation_ancestor_lists_[r].push_back(RelationId{static_cast<std::uint32_t>(s)});

  pending_relations_.clear();
  finalized_ = true;
}

std::optional<ConceptId> Schema::find_concept(std::string_view name) const {
  auto it = concept_index_.find(std::string(name));
  if (it == concept_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<RelationId> Schema::find_relation(std::string_view name) const {
  auto it = relation_index_.find(std::string(name));
  if (it == relation_index_.end()) return std::nullopt;
  return it->second;
}

ConceptId Schema::concept_ref(std::string_view name) const {
  auto id = find_concept(name);
  if (!id) throw KbError("unknown concept '" + std::string(name) + "'");
  return *id;
}

RelationId Schema::relation_ref(std::string_view name) const {
  auto id = find_relation(name);
  if (!id) throw KbError("unknown relation '" + std::string(name) + "'");
  return *id;
}

bool Schema::subsumes_concept(std::string_view ancestor, std::string_view descendant) const {
  return subsumes(concept_ref(ancestor), concept_ref(descendant));
}

bool Schema::subsumes_relation(std::string_view ancestor, std::string_view descendant) const {
  return subsumes(relation_ref(ancestor), relation_ref(descendant));
}

std::vector<ConceptId> Schema::all_concepts() const {
  std::vector<ConceptId> out;
  out.reserve(concepts_.size());
  for (std::size_t i = 0; i < concepts_.size(); ++i)
    out.push_back(ConceptId{static_cast<std::uint32_t>(i)});
  return out;
}

std::vector<RelationId> Schema::all_relations() const {
  std::vector<RelationId> out;
  out.reserve(relations_.size());
  for (std::size_t i = 0; i < relations_.size(); ++i)
    out.push_back(RelationId{static_cast<std::uint32_t>(i)});
  return out;
}

InstanceId TextKb::add_instance(const std::string& id, ConceptId type, int line) {
  if (id.empty()) throw KbError("empty instance id", line);
  if (instance_index_.count(id))
    throw KbError("instance '" + id + "' declared twice", line);
  InstanceId inst{static_cast<std::uint32_t>(instances_.size())};
  instances_.push_back(Instance{id, type, true});
  instance_index_.emplace(id, inst);
  return inst;
}

InstanceId TextKb::add_anonymous_instance(const Schema& schema, ConceptId type) {
  int& counter = anon_counters_[index_of(type)];
  std::string id;
  do {
    ++counter;
    id = schema.name(type) + "-" + std::to_string(counter);
  } while (instance_index_.count(id));
  InstanceId inst{static_cast<std::uint32_t>(instances_.size())};
  instances_.push_back(Instance{id, type, false});
  instance_index_.emplace(id, inst);
  return inst;
}

std::optional<InstanceId> TextKb::find_instance(std::string_view id) const {
  auto it = instance_index_.find(std::string(id));
  if (it == instance_index_.end()) return std::nullopt;
  return it->second;
}

InstanceId TextKb::instance_ref(std::string_view id) const {
  auto inst = find_instance(id);
  if (!inst) throw KbError("unknown instance '" + std::string(id) + "'");
  return *inst;
}

void TextKb::assert_fact(const Schema& schema, InstanceId subject, RelationId relation,
                         InstanceId object) {
  ConceptId subject_type = type_of(subject);
  ConceptId object_type = type_of(object);
  if (!schema.subsumes(schema.domain(relation), subject_type))
    throw KbError("typing violation: subject '" + id_of(subject) + "' (" +
                  schema.name(subject_type) + ") is not subsumed by domain '" +
                  schema.name(schema.domain(relation)) + "' of relation '" +
                  schema.name(relation) + "'");
  if (!schema.subsumes(schema.range(relation), object_type))
    throw KbError("typing violation: object '" + id_of(object) + "' (" +
                  schema.name(object_type) + ") is not subsumed by range '" +
                  schema.name(schema.range(relation)) + "' of relation '" +
                  schema.name(relation) + "'");
  facts_.insert(Fact{subject, relation, object});
  facts_.insert(Fact{object, schema.inverse(relation), subject});
}

bool TextKb::has_fact(InstanceId subject, RelationId relation, InstanceId object) const {
  return facts_.count(Fact{subject, relation, object}) != 0;
}

std::vector<Fact> TextKb::facts_from(InstanceId subject) const {
  std::vector<Fact> out;
  for (const Fact& fact : facts_)
    if (fact.subject == subject) out.push_back(fact);
  return out;
}

void TextKb::validate(const Schema& schema) const {
  for (const Fact& fact : facts_) {
    if (!schema.subsumes(schema.domain(fact.relation), type_of(fact.subject)) ||
        !schema.subsumes(schema.range(fact.relation), type_of(fact.object)))
      throw KbError("stored fact violates typing: (" + id_of(fact.subject) + ", " +
                    schema.name(fact.relation) + ", " + id_of(fact.object) + ")");
    if (!has_fact(fact.object, schema.inverse(fact.relation), fact.subject))
      throw KbError("stored fact lacks its inverse: (" + id_of(fact.subject) + ", " +
                    schema.name(fact.relation) + ", " + id_of(fact.object) + ")");
  }
}

}  // namespace bridge
