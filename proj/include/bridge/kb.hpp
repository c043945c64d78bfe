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

#ifndef BRIDGE_KB_HPP_
#define BRIDGE_KB_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bridge {

// Error raised by loaders and knowledge-base operations. Carries the input
// line number when the error originates from a file, 0 otherwise.
class KbError : public std::runtime_error {
 public:
  explicit KbError(const std::string& message, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

enum class ConceptId : std::uint32_t {};
enum class RelationId : std::uint32_t {};
enum class InstanceId : std::uint32_t {};

constexpr std::size_t index_of(ConceptId id) { return static_cast<std::size_t>(id); }
constexpr std::size_t index_of(RelationId id) { return static_cast<std::size_t>(id); }
constexpr std::size_t index_of(InstanceId id) { return static_cast<std::size_t>(id); }

// Terminological schema: a concept hierarchy (acyclic, multiple parents
// allowed) plus a relation hierarchy where every relation is paired with an
// inverse and carries a domain and a range concept.
//
// A schema is built incrementally, then sealed with finalize(). finalize()
// validates all cross-references and structural invariants and precomputes
// the reflexive-transitive closures of both hierarchies, so closure queries
// during path search are table lookups. After finalize() the schema is
// immutable and safe to share between threads.
class Schema {
 public:
  // --- declaration phase -------------------------------------------------
  ConceptId declare_concept(const std::string& name, int line = 0);
  void add_concept_parent(const std::string& child, const std::string& parent, int line = 0);
  void declare_relation(const std::string& name, const std::string& domain,
                        const std::string& range, const std::string& inverse,
                        const std::vector<std::string>& parents, int line = 0);

  // Declares a mirrored relation for every inverse that is named but not
  // declared itself: swapped domain/range and the inverses of the parents.
  void synthesize_missing_inverses();

  void finalize();
  bool finalized() const noexcept { return finalized_; }

  // --- queries (valid after finalize) ------------------------------------
  std::optional<ConceptId> find_concept(std::string_view name) const;
  std::optional<RelationId> find_relation(std::string_view name) const;
  ConceptId concept_ref(std::string_view name) const;    // throws KbError on unknown
  RelationId relation_ref(std::string_view name) const;  // throws KbError on unknown

  std::size_t concept_count() const noexcept { return concepts_.size(); }
  std::size_t relation_count() const noexcept { return relations_.size(); }

  const std::string& name(ConceptId id) const { return concepts_[index_of(id)].name; }
  const std::string& name(RelationId id) const { return relations_[index_of(id)].name; }
  ConceptId domain(RelationId id) const { return relations_[index_of(id)].domain; }
  ConceptId range(RelationId id) const { return relations_[index_of(id)].range; }
  RelationId inverse(RelationId id) const { return relations_[index_of(id)].inverse; }
  const std::vector<ConceptId>& parents(ConceptId id) const {
    return concepts_[index_of(id)].parents;
  }
  const std::vector<RelationId>& parents(RelationId id) const {
    return relations_[index_of(id)].parents;
  }

  // Reflexive-transitive subsumption over the concept hierarchy.
  bool subsumes(ConceptId ancestor, ConceptId descendant) const {
    return concept_closure_[index_of(descendant)][index_of(ancestor)] != 0;
  }
  // Reflexive-transitive subsumption over the relation hierarchy.
  bool subsumes(RelationId ancestor, RelationId descendant) const {
    return relation_closure_[index_of(descendant)][index_of(ancestor)] != 0;
  }
  // True when one concept subsumes the other, in either direction.
  bool comparable(ConceptId a, ConceptId b) const {
    return subsumes(a, b) || subsumes(b, a);
  }

  bool subsumes_concept(std::string_view ancestor, std::string_view descendant) const;
  bool subsumes_relation(std::string_view ancestor, std::string_view descendant) const;

  // All relations applicable at a concept: r such that c is subsumed by
  // domain(r). Sorted by relation name.
  const std::vector<RelationId>& roles_of(ConceptId c) const {
    return roles_[index_of(c)];
  }

  // All ancestors of a relation in the relation hierarchy, itself included.
  const std::vector<RelationId>& relation_ancestors(RelationId r) const {
    return relation_ancestor_lists_[index_of(r)];
  }

  std::vector<ConceptId> all_concepts() const;
  std::vector<RelationId> all_relations() const;

 private:
  struct ConceptNode {
    std::string name;
    std::vector<ConceptId> parents;
  };
  struct RelationNode {
    std::string name;
    ConceptId domain{};
    ConceptId range{};
    RelationId inverse{};
    std::vector<RelationId> parents;
  };
  struct PendingRelation {
    std::string name, domain, range, inverse;
    std::vector<std::string> parents;
    int line = 0;
  };

  void require_open(int line) const;
  void require_finalized() const;

  bool finalized_ = false;
  std::vector<ConceptNode> concepts_;
  std::vector<RelationNode> relations_;
  std::vector<PendingRelation> pending_relations_;
  std::unordered_map<std::string, ConceptId> concept_index_;
  std::unordered_map<std::string, RelationId> relation_index_;
  std::vector<std::pair<std::pair<std::string, std::string>, int>> pending_concept_edges_;

  // closure[x][y] != 0 iff y is a (reflexive-transitive) ancestor of x.
  std::vector<std::vector<std::uint8_t>> concept_closure_;
  std::vector<std::vector<std::uint8_t>> relation_closure_;
  std::vector<std::vector<RelationId>> roles_;
  std::vector<std::vector<RelationId>> relation_ancestor_lists_;
};

// An instance-level assertion. Facts are stored together with their inverse,
// so the set is closed under inversion.
struct Fact {
  InstanceId subject;
  RelationId relation;
  InstanceId object;

  auto operator<=>(const Fact&) const = default;
};

// Instance-level text knowledge base: typed instances and relation facts
// accumulated while a text is processed. Single writer; reads may be shared
// between mutations.
class TextKb {
 public:
  InstanceId add_instance(const std::string& id, ConceptId type, int line = 0);
  // Creates an instance with a generated id "<CONCEPT>-<k>".
  InstanceId add_anonymous_instance(const Schema& schema, ConceptId type);

  std::optional<InstanceId> find_instance(std::string_view id) const;
  InstanceId instance_ref(std::string_view id) const;  // throws KbError on unknown

  const std::string& id_of(InstanceId inst) const { return instances_[index_of(inst)].id; }
  ConceptId type_of(InstanceId inst) const { return instances_[index_of(inst)].type; }
  bool is_named(InstanceId inst) const { return instances_[index_of(inst)].named; }
  std::size_t instance_count() const noexcept { return instances_.size(); }

  // Inserts the fact and its inverse after checking the typing constraints.
  // Idempotent. Throws KbError on a typing violation.
  void assert_fact(const Schema& schema, InstanceId subject, RelationId relation,
                   InstanceId object);

  bool has_fact(InstanceId subject, RelationId relation, InstanceId object) const;
  const std::set<Fact>& facts() const noexcept { return facts_; }
  std::vector<Fact> facts_from(InstanceId subject) const;

  // Re-checks every stored fact against the schema; throws on violation.
  void validate(const Schema& schema) const;

 private:
  struct Instance {
    std::string id;
    ConceptId type;
    bool named;
  };

  std::vector<Instance> instances_;
  std::unordered_map<std::string, InstanceId> instance_index_;
  std::unordered_map<std::size_t, int> anon_counters_;  // per concept index
  std::set<Fact> facts_;
};

// A loaded knowledge base: sealed schema, text-level instance data, and the
// pattern/blocking extensions declared in the source file.
struct KnowledgeBase {
  Schema schema;
  TextKb text;
  // Extra metonymic relations: (relation, inverse relation), by name.
  std::vector<std::pair<std::string, std::string>> metonymy_extensions;
  // Extra relation bases whose instantiation blocks ellipsis triggering.
  std::vector<std::string> pof_extensions;
};

}  // namespace bridge

#endif  // BRIDGE_KB_HPP_
