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

#ifndef BRIDGE_CENTERING_HPP_
#define BRIDGE_CENTERING_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bridge/kb.hpp"

namespace bridge {

// Word classes of the annotation layer, a small fixed hierarchy:
// Nominal and Det are below Word; Noun and PronPersonal below Nominal;
// the determiner subtypes below Det.
enum class WordClass {
  word,
  nominal,
  noun,
  pron_personal,
  determiner,
  det_definite,
  det_demonstrative,
  det_indefinite,
};

bool word_class_subsumes(WordClass ancestor, WordClass descendant);
std::optional<WordClass> parse_word_class(std::string_view name);
const char* to_string(WordClass word_class);

// An annotated referring expression.
struct Markable {
  std::string id;
  std::string surface;
  std::string lemma;
  WordClass word_class = WordClass::noun;
  bool definite = false;
  std::optional<std::string> head;  // id of the markable this one modifies
  ConceptId concept_id{};           // word-level concept
  InstanceId referent{};            // discourse referent
  int position = 0;                 // token position within the utterance
  // Antecedent instance once the markable was resolved as a textual
  // ellipsis; realizing it counts as realizing the antecedent.
  std::optional<InstanceId> bridged_to;
};

struct Utterance {
  int index = 0;
  std::vector<Markable> markables;
  // Semantic-interpretation facts, asserted when the utterance is processed.
  std::vector<Fact> facts;

  const Markable* find_markable(std::string_view id) const;
  // True iff some markable of class DetDefinite modifies `head`.
  bool has_definite_determiner(const Markable& head) const;
};

// One element of a forward-looking-centers list.
struct CfEntry {
  const Markable* markable = nullptr;
  InstanceId referent{};
  bool bound = false;
};

// Centering data of one utterance. The preferred center is the head of cf.
struct UtteranceState {
  std::vector<CfEntry> cf;
  std::optional<CfEntry> cb;

  const CfEntry* cp() const { return cf.empty() ? nullptr : &cf.front(); }
};

// Ranks the forward-looking centers of an utterance by context-boundedness:
// referents already present in the previous cf list (directly or through a
// bridge) come first, keeping their previous relative order; unbound
// referents follow in surface order. Duplicated referents keep their
// highest-ranked occurrence. Only nominal markables (nouns, pronouns) enter.
std::vector<CfEntry> rank_cf(const Utterance& utterance, const std::vector<CfEntry>& prev_cf);

// The most highly ranked element of the previous cf list that is realized in
// the utterance; absent when none is.
std::optional<CfEntry> compute_cb(const Utterance& utterance,
                                  const std::vector<CfEntry>& prev_cf);

// Strict preference between two members of a cf list: true iff `stronger`
// precedes `weaker`. Throws KbError when either is not a member.
bool is_preferred_is(const std::vector<CfEntry>& cf, InstanceId stronger, InstanceId weaker);

enum class Transition { continuation, retention, smooth_shift, rough_shift, not_applicable };

const char* to_string(Transition transition);

// Standard transition taxonomy over adjacent utterances, keyed on whether
// the backward-looking center is kept and whether it is the preferred
// center. Reported for diagnostics only.
Transition classify_transition(const UtteranceState& previous, const UtteranceState& current);

// Display label of a cf element: the instance id when the referent was
// introduced under an explicit name, the realizing markable's concept
// otherwise.
std::string format_cf_entry(const CfEntry& entry, const Schema& schema, const TextKb& text);
std::string format_cf(const std::vector<CfEntry>& cf, const Schema& schema, const TextKb& text);

}  // namespace bridge

#endif  // BRIDGE_CENTERING_HPP_
