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

#include "support/generators.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace bridge::testing {

namespace {

struct RelationDraft {
  std::string name, inverse, domain, range;
  std::vector<std::string> parents;
};

std::size_t pick(std::mt19937_64& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

bool chance(std::mt19937_64& rng, double probability) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < probability;
}

}  // namespace

KnowledgeBase random_kb(std::uint64_t seed, std::size_t max_concepts,
                        std::size_t max_relation_pairs) {
  std::mt19937_64 rng(seed);
  KnowledgeBase kb;

  const std::size_t concepts = 4 + pick(rng, max_concepts - 3);
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> parents(concepts);
  for (std::size_t i = 0; i < concepts; ++i) {
    names.push_back("C" + std::to_string(i));
    kb.schema.declare_concept(names[i]);
    if (i == 0) continue;
    std::size_t parent_count = chance(rng, 0.15) ? 2 : chance(rng, 0.75) ? 1 : 0;
    for (std::size_t k = 0; k < parent_count; ++k) {
      std::size_t parent = pick(rng, i);
      if (std::find(parents[i].begin(), parents[i].end(), parent) != parents[i].end())
        continue;
      parents[i].push_back(parent);
      kb.schema.add_concept_parent(names[i], names[parent]);
    }
  }

  // descendants-or-self of a concept, by walking the parent lists.
  auto descendants_of = [&](std::size_t ancestor) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < concepts; ++c) {
      std::vector<std::size_t> frontier{c};
      bool reaches = false;
      for (std::size_t k = 0; k < frontier.size() && !reaches; ++k) {
        if (frontier[k] == ancestor) reaches = true;
        for (std::size_t p : parents[frontier[k]]) frontier.push_back(p);
      }
      if (reaches) out.push_back(c);
    }
    return out;
  };

  std::vector<std::pair<std::string, std::string>> vocabulary = {
      {"has-part", "part-of"},
      {"has-physical-part", "physical-part-of"},
      {"collection-member", "collection-member-of"},
      {"event-feature", "event-feature-of"},
      {"spatial-containment", "spatial-containment-of"},
      {"has-property", "property-of"},
      {"produced-by", "produces"},
  };

  std::vector<RelationDraft> drafts;
  const std::size_t pair_count = 2 + pick(rng, max_relation_pairs - 1);
  for (std::size_t i = 0; i < pair_count; ++i) {
    RelationDraft draft;
    // Occasionally a symmetric relation: its own inverse, domain == range.
    if (chance(rng, 0.12)) {
      std::size_t c = pick(rng, concepts);
      draft.name = "sym" + std::to_string(i);
      draft.inverse = draft.name;
      draft.domain = names[c];
      draft.range = names[c];
      drafts.push_back(std::move(draft));
      continue;
    }
    if (!vocabulary.empty() && chance(rng, 0.55)) {
      std::size_t v = pick(rng, vocabulary.size());
      draft.name = vocabulary[v].first;
      draft.inverse = vocabulary[v].second;
      vocabulary.erase(vocabulary.begin() + static_cast<std::ptrdiff_t>(v));
    } else {
      draft.name = "rel" + std::to_string(i);
      draft.inverse = "rel" + std::to_string(i) + "-of";
    }
    if (!drafts.empty() && chance(rng, 0.45)) {
      const RelationDraft& parent = drafts[pick(rng, drafts.size())];
      draft.parents.push_back(parent.name);
      auto domain_pool = descendants_of(std::stoul(parent.domain.substr(1)));
      auto range_pool = descendants_of(std::stoul(parent.range.substr(1)));
      draft.domain = names[domain_pool[pick(rng, domain_pool.size())]];
      draft.range = names[range_pool[pick(rng, range_pool.size())]];
    } else {
      draft.domain = names[pick(rng, concepts)];
      draft.range = names[pick(rng, concepts)];
    }
    drafts.push_back(std::move(draft));
  }
  for (const RelationDraft& draft : drafts)
    kb.schema.declare_relation(draft.name, draft.domain, draft.range, draft.inverse,
                               draft.parents);
  kb.schema.synthesize_missing_inverses();
  kb.schema.finalize();
  return kb;
}

Discourse random_centering_discourse(std::uint64_t seed, KnowledgeBase& kb,
                                     std::size_t max_utterances, std::size_t max_markables) {
  std::mt19937_64 rng(seed);
  Discourse discourse;
  std::vector<InstanceId> pool;
  std::vector<ConceptId> all_concepts = kb.schema.all_concepts();

  const std::size_t utterances = 2 + pick(rng, max_utterances - 1);
  int markable_counter = 0;
  for (std::size_t u = 1; u <= utterances; ++u) {
    Utterance utterance;
    utterance.index = static_cast<int>(u);
    const std::size_t markables = 1 + pick(rng, max_markables);
    for (std::size_t m = 0; m < markables; ++m) {
      Markable markable;
      markable.id = "m" + std::to_string(++markable_counter);
      markable.word_class = chance(rng, 0.2) ? WordClass::pron_personal : WordClass::noun;
      markable.position = static_cast<int>(m) + 1;
      if (!pool.empty() && chance(rng, 0.4)) {
        markable.referent = pool[pick(rng, pool.size())];
        markable.concept_id = kb.text.type_of(markable.referent);
      } else {
        ConceptId chosen = all_concepts[pick(rng, all_concepts.size())];
        markable.referent = kb.text.add_anonymous_instance(kb.schema, chosen);
        markable.concept_id = chosen;
        pool.push_back(markable.referent);
      }
      markable.surface = markable.id;
      markable.lemma = markable.id;
      utterance.markables.push_back(std::move(markable));
    }
    discourse.utterances.push_back(std::move(utterance));
  }
  return discourse;
}

Discourse random_resolution_discourse(std::uint64_t seed, KnowledgeBase& kb) {
  std::mt19937_64 rng(seed);
  Discourse discourse;

  // Concrete types only: an antecedent typed by a proper ancestor of a path
  // end point could not fill the final role of the bridge.
  const char* const antecedent_concepts[] = {
      "NOTEBOOK", "ACCUMULATOR", "NIMH-ACCUMULATOR", "PRINTER",
      "CENTRAL-UNIT", "MOTHERBOARD", "CPU",
  };
  const char* const elliptical_concepts[] = {
      "CHARGE-TIME", "PRICE", "POWER", "TIME-UNIT-PAIR", "CPU", "MOTHERBOARD",
  };

  int markable_counter = 0;
  std::vector<InstanceId> pool;

  const std::size_t utterances = 2 + pick(rng, 3);
  for (std::size_t u = 1; u <= utterances; ++u) {
    Utterance utterance;
    utterance.index = static_cast<int>(u);
    int position = 0;

    const std::size_t mentions = 1 + pick(rng, 3);
    for (std::size_t m = 0; m < mentions; ++m) {
      Markable markable;
      markable.id = "m" + std::to_string(++markable_counter);
      markable.word_class = WordClass::noun;
      markable.position = ++position;
      if (!pool.empty() && chance(rng, 0.5)) {
        markable.referent = pool[pick(rng, pool.size())];
        markable.concept_id = kb.text.type_of(markable.referent);
      } else {
        ConceptId chosen =
            kb.schema.concept_ref(antecedent_concepts[pick(rng, std::size(antecedent_concepts))]);
        markable.referent = kb.text.add_anonymous_instance(kb.schema, chosen);
        markable.concept_id = chosen;
        pool.push_back(markable.referent);
      }
      markable.surface = markable.id;
      utterance.markables.push_back(std::move(markable));
    }

    // From the second utterance on, add one definite noun phrase with its
    // determiner so the trigger machinery runs.
    if (u >= 2) {
      Markable det;
      det.id = "d" + std::to_string(++markable_counter);
      det.word_class = WordClass::det_definite;
      det.position = ++position;

      Markable np;
      np.id = "m" + std::to_string(++markable_counter);
      np.word_class = WordClass::noun;
      np.position = ++position;
      ConceptId chosen =
          kb.schema.concept_ref(elliptical_concepts[pick(rng, std::size(elliptical_concepts))]);
      np.referent = kb.text.add_anonymous_instance(kb.schema, chosen);
      np.concept_id = chosen;
      np.surface = np.id;
      np.definite = true;
      det.head = np.id;

      utterance.markables.push_back(std::move(det));
      utterance.markables.push_back(std::move(np));
    }
    discourse.utterances.push_back(std::move(utterance));
  }
  return discourse;
}

}  // namespace bridge::testing
