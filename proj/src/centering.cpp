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

#include "bridge/centering.hpp"

#include <algorithm>
#include <sstream>

namespace bridge {

namespace {

WordClass parent_of(WordClass word_class) {
  switch (word_class) {
    case WordClass::word: return WordClass::word;
    case WordClass::nominal: return WordClass::word;
    case WordClass::noun: return WordClass::nominal;
    case WordClass::pron_personal: return WordClass::nominal;
    case WordClass::determiner: return WordClass::word;
    case WordClass::det_definite: return WordClass::determiner;
    case WordClass::det_demonstrative: return WordClass::determiner;
    case WordClass::det_indefinite: return WordClass::determiner;
  }
  return WordClass::word;
}

std::optional<std::size_t> rank_in(const std::vector<CfEntry>& cf, InstanceId referent) {
  for (std::size_t i = 0; i < cf.size(); ++i)
    if (cf[i].referent == referent) return i;
  return std::nullopt;
}

}  // namespace

bool word_class_subsumes(WordClass ancestor, WordClass descendant) {
  WordClass at = descendant;
  while (true) {
    if (at == ancestor) return true;
    WordClass up = parent_of(at);
    if (up == at) return false;
    at = up;
  }
}

std::optional<WordClass> parse_word_class(std::string_view name) {
  if (name == "Word") return WordClass::word;
  if (name == "Nominal") return WordClass::nominal;
  if (name == "Noun") return WordClass::noun;
  if (name == "PronPersonal") return WordClass::pron_personal;
  if (name == "Det") return WordClass::determiner;
  if (name == "DetDefinite") return WordClass::det_definite;
  if (name == "DetDemonstrative") return WordClass::det_demonstrative;
  if (name == "DetIndefinite") return WordClass::det_indefinite;
  return std::nullopt;
}

const char* to_string(WordClass word_class) {
  switch (word_class) {
    case WordClass::word: return "Word";
    case WordClass::nominal: return "Nominal";
    case WordClass::noun: return "Noun";
    case WordClass::pron_personal: return "PronPersonal";
    case WordClass::determiner: return "Det";
    case WordClass::det_definite: return "DetDefinite";
    case WordClass::det_demonstrative: return "DetDemonstrative";
    case WordClass::det_indefinite: return "DetIndefinite";
  }
  return "?";
}

const Markable* Utterance::find_markable(std::string_view id) const {
  for (const Markable& markable : markables)
    if (markable.id == id) return &markable;
  return nullptr;
}

bool Utterance::has_definite_determiner(const Markable& head) const {
  for (const Markable& markable : markables)
    if (markable.head && *markable.head == head.id &&
        word_class_subsumes(WordClass::det_definite, markable.word_class))
      return true;
  return false;
}

std::vector<CfEntry> rank_cf(const Utterance& utterance, const std::vector<CfEntry>& prev_cf) {
  struct Ranked {
    CfEntry entry;
    std::size_t prev_rank;  // rank of the realized previous element; bound only
    int position;
  };
  std::vector<Ranked> bound;
  std::vector<Ranked> unbound;
  std::vector<InstanceId> seen;

  std::vector<const Markable*> by_position;
  for (const Markable& markable : utterance.markables) by_position.push_back(&markable);
  std::stable_sort(by_position.begin(), by_position.end(),
                   [](const Markable* a, const Markable* b) {
                     return a->position < b->position;
                   });

  for (const Markable* markable_ptr : by_position) {
    const Markable& markable = *markable_ptr;
    if (!word_class_subsumes(WordClass::nominal, markable.word_class)) continue;
    if (std::find(seen.begin(), seen.end(), markable.referent) != seen.end()) continue;
    seen.push_back(markable.referent);

    auto direct = rank_in(prev_cf, markable.referent);
    auto via_bridge = markable.bridged_to ? rank_in(prev_cf, *markable.bridged_to)
                                          : std::nullopt;
    CfEntry entry{&markable, markable.referent, direct.has_value() || via_bridge.has_value()};
    if (entry.bound)
      bound.push_back(Ranked{entry, direct ? *direct : *via_bridge, markable.position});
    else
      unbound.push_back(Ranked{entry, 0, markable.position});
  }

  std::stable_sort(bound.begin(), bound.end(),
                   [](const Ranked& a, const Ranked& b) { return a.prev_rank < b.prev_rank; });
  std::stable_sort(unbound.begin(), unbound.end(),
                   [](const Ranked& a, const Ranked& b) { return a.position < b.position; });

  std::vector<CfEntry> cf;
  cf.reserve(bound.size() + unbound.size());
  for (const Ranked& ranked : bound) cf.push_back(ranked.entry);
  for (const Ranked& ranked : unbound) cf.push_back(ranked.entry);
  return cf;
}

std::optional<CfEntry> compute_cb(const Utterance& utterance,
                                  const std::vector<CfEntry>& prev_cf) {
  for (const CfEntry& candidate : prev_cf) {
    for (const Markable& markable : utterance.markables) {
      if (!word_class_subsumes(WordClass::nominal, markable.word_class)) continue;
      if (markable.referent == candidate.referent ||
          (markable.bridged_to && *markable.bridged_to == candidate.referent))
        return candidate;
    }
  }
  return std::nullopt;
}

bool is_preferred_is(const std::vector<CfEntry>& cf, InstanceId stronger, InstanceId weaker) {
  auto left = rank_in(cf, stronger);
  auto right = rank_in(cf, weaker);
  if (!left || !right) throw KbError("element not in the centering list");
  return *left < *right;
}

const char* to_string(Transition transition) {
  switch (transition) {
    case Transition::continuation: return "continuation";
    case Transition::retention: return "retention";
    case Transition::smooth_shift: return "smooth-shift";
    case Transition::rough_shift: return "rough-shift";
    case Transition::not_applicable: return "n/a";
  }
  return "?";
}

Transition classify_transition(const UtteranceState& previous, const UtteranceState& current) {
  if (!previous.cb || !current.cb) return Transition::not_applicable;
  bool kept = previous.cb->referent == current.cb->referent;
  bool preferred = current.cp() && current.cp()->referent == current.cb->referent;
  if (kept) return preferred ? Transition::continuation : Transition::retention;
  return preferred ? Transition::smooth_shift : Transition::rough_shift;
}

std::string format_cf_entry(const CfEntry& entry, const Schema& schema, const TextKb& text) {
  if (text.is_named(entry.referent)) return text.id_of(entry.referent);
  if (entry.markable) return schema.name(entry.markable->concept_id);
  return text.id_of(entry.referent);
}

std::string format_cf(const std::vector<CfEntry>& cf, const Schema& schema,
                      const TextKb& text) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < cf.size(); ++i) {
    if (i > 0) out << ", ";
    out << format_cf_entry(cf[i], schema, text);
  }
  out << ']';
  return out.str();
}

}  // namespace bridge
