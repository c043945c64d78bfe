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

#include "bridge/resolver.hpp"

#include <algorithm>

namespace bridge {

namespace {

// Referents realized by the utterance, antecedents of resolved ellipses
// included.
std::vector<InstanceId> current_referents(const Utterance& utterance) {
  std::vector<InstanceId> out;
  for (const Markable& markable : utterance.markables) {
    if (!word_class_subsumes(WordClass::nominal, markable.word_class)) continue;
    out.push_back(markable.referent);
    if (markable.bridged_to) out.push_back(*markable.bridged_to);
  }
  return out;
}

}  // namespace

const char* to_string(TriggerOutcome outcome) {
  switch (outcome) {
    case TriggerOutcome::nominal_anaphor: return "nominal-anaphor";
    case TriggerOutcome::already_connected: return "already-connected";
    case TriggerOutcome::triggered: return "triggered";
  }
  return "?";
}

const char* to_string(ResolutionStatus status) {
  switch (status) {
    case ResolutionStatus::resolved: return "resolved";
    case ResolutionStatus::ambiguous: return "ambiguous";
    case ResolutionStatus::no_antecedent: return "no-antecedent";
  }
  return "?";
}

bool is_nominal_anaphor(const Markable& expression, const std::vector<CfEntry>& prev_cf,
                        const KnowledgeBase& kb) {
  for (const CfEntry& entry : prev_cf)
    if (kb.schema.subsumes(expression.concept_id, kb.text.type_of(entry.referent))) return true;
  return false;
}

std::vector<RelationId> pof_relation_bases(const KnowledgeBase& kb) {
  std::vector<RelationId> bases;
  for (const char* name : {"property-of", "part-of"})
    if (auto id = kb.schema.find_relation(name)) bases.push_back(*id);
  for (const std::string& name : kb.pof_extensions) {
    RelationId id = kb.schema.relation_ref(name);
    if (std::find(bases.begin(), bases.end(), id) == bases.end()) bases.push_back(id);
  }
  return bases;
}

TriggerVerdict should_trigger(const Markable& expression, const Utterance& utterance,
                              const std::vector<CfEntry>& prev_cf, const KnowledgeBase& kb,
                              const std::vector<RelationId>& pof_bases) {
  if (is_nominal_anaphor(expression, prev_cf, kb))
    return {TriggerOutcome::nominal_anaphor,
            "'" + kb.schema.name(expression.concept_id) +
                "' subsumes a forward-looking center of the previous utterance"};

  // An instantiated inverse property/part relation from the referent to
  // something realized in this utterance means the connection the search
  // would establish already exists.
  std::vector<InstanceId> realized = current_referents(utterance);
  for (const Fact& fact : kb.text.facts_from(expression.referent)) {
    bool blocking = std::any_of(pof_bases.begin(), pof_bases.end(), [&](RelationId base) {
      return kb.schema.subsumes(base, fact.relation);
    });
    if (!blocking) continue;
    if (std::find(realized.begin(), realized.end(), fact.object) != realized.end())
      return {TriggerOutcome::already_connected,
              "already linked via '" + kb.schema.name(fact.relation) + "' to '" +
                  kb.text.id_of(fact.object) + "'"};
  }
  return {TriggerOutcome::triggered, "no anaphoric or conceptual link found"};
}

bool is_potential_elliptical_antecedent(const CfEntry& candidate, const Markable& elliptical,
                                        const Utterance& utterance) {
  if (!candidate.markable ||
      !word_class_subsumes(WordClass::nominal, candidate.markable->word_class))
    return false;
  if (!word_class_subsumes(WordClass::noun, elliptical.word_class)) return false;
  if (!utterance.has_definite_determiner(elliptical)) return false;
  return utterance.find_markable(elliptical.id) != nullptr;
}

ResolutionResult preferred_conceptual_bridge(const Markable& elliptical,
                                             const Utterance& utterance,
                                             const std::vector<CfEntry>& prev_cf,
                                             const KnowledgeBase& kb,
                                             const PatternSets& patterns,
                                             const SearchConfig& config, bool early_stop) {
  ResolutionResult result;
  result.elliptical = &elliptical;

  // Candidates in centering order; duplicated referents keep the best rank.
  std::vector<CfEntry> candidates;
  for (const CfEntry& entry : prev_cf) {
    if (!is_potential_elliptical_antecedent(entry, elliptical, utterance)) continue;
    bool duplicate = std::any_of(candidates.begin(), candidates.end(), [&](const CfEntry& c) {
      return c.referent == entry.referent;
    });
    if (!duplicate) candidates.push_back(entry);
  }

  bool stopped = false;
  for (const CfEntry& candidate : candidates) {
    CandidateReport report;
    report.entry = candidate;
    report.considered = !stopped;
    if (!stopped) {
      report.cp = build_cp_list(elliptical.concept_id, candidate.markable->concept_id, kb.schema,
                                patterns, config);
      // Nothing after a plausible bridge can win: later candidates are at
      // best equally strong and lose on the centering order.
      if (early_stop && report.cp.marker == PathMarker::plausible) stopped = true;
    }
    result.candidates.push_back(std::move(report));
  }

  // The winner has no strictly stronger competitor, nor an equally strong
  // one that precedes it in the centering order. Scanning in centering
  // order, that is the first candidate of the best strength rank.
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < result.candidates.size(); ++i) {
    const CandidateReport& report = result.candidates[i];
    if (!report.considered) continue;
    if (!best || strength_rank(report.cp) < strength_rank(result.candidates[*best].cp))
      best = i;
  }

  if (!best || result.candidates[*best].cp.empty()) {
    result.status = ResolutionStatus::no_antecedent;
    return result;
  }

  // Guard: equally strong competitors the centering order cannot separate
  // cannot happen under a strict total order, but report them rather than
  // pick silently.
  const CandidateReport& winner = result.candidates[*best];
  for (const CandidateReport& report : result.candidates) {
    if (!report.considered || &report == &winner) continue;
    if (strength_rank(report.cp) != strength_rank(winner.cp)) continue;
    if (report.entry.referent == winner.entry.referent) continue;
    if (!is_preferred_is(prev_cf, winner.entry.referent, report.entry.referent) &&
        !is_preferred_is(prev_cf, report.entry.referent, winner.entry.referent)) {
      result.status = ResolutionStatus::ambiguous;
      return result;
    }
  }

  result.antecedent = result.candidates[*best].entry;
  result.bridge = result.candidates[*best].cp;
  result.bridge_path = result.bridge.paths.front().relations;
  result.role = result.bridge_path.front();
  result.status = ResolutionStatus::resolved;
  return result;
}

ResolutionResult resolve_and_update(Markable& elliptical, const Utterance& utterance,
                                    const std::vector<CfEntry>& prev_cf, KnowledgeBase& kb,
                                    const PatternSets& patterns, const SearchConfig& config,
                                    bool early_stop) {
  ResolutionResult result = preferred_conceptual_bridge(elliptical, utterance, prev_cf, kb,
                                                        patterns, config, early_stop);
  if (result.status != ResolutionStatus::resolved) return result;

  // Link the elliptical referent to the antecedent along the chosen path,
  // materializing intermediate instances so every fact is typed.
  const std::vector<RelationId>& path = result.bridge_path;
  InstanceId at = elliptical.referent;
  for (std::size_t i = 0; i < path.size(); ++i) {
    InstanceId next = i + 1 == path.size()
                          ? result.antecedent->referent
                          : kb.text.add_anonymous_instance(kb.schema, kb.schema.range(path[i]));
    kb.text.assert_fact(kb.schema, at, path[i], next);
    at = next;
  }
  elliptical.bridged_to = result.antecedent->referent;
  return result;
}

ResolutionSession::ResolutionSession(KnowledgeBase& kb, Discourse& discourse,
                                     SessionOptions options)
    : kb_(kb), discourse_(discourse), options_(options) {
  patterns_ = PatternSets::defaults(kb_);
  pof_bases_ = pof_relation_bases(kb_);
}

std::vector<UtteranceReport> ResolutionSession::run() {
  std::vector<UtteranceReport> reports;
  std::vector<CfEntry> prev_cf;
  UtteranceState prev_state;

  for (Utterance& utterance : discourse_.utterances) {
    UtteranceReport report;
    report.index = utterance.index;

    for (const Fact& fact : utterance.facts)
      kb_.text.assert_fact(kb_.schema, fact.subject, fact.relation, fact.object);

    for (Markable& markable : utterance.markables) {
      if (!markable.definite) continue;
      if (!word_class_subsumes(WordClass::noun, markable.word_class)) continue;
      NpReport np;
      np.np = &markable;
      np.verdict = should_trigger(markable, utterance, prev_cf, kb_, pof_bases_);
      if (np.verdict.outcome == TriggerOutcome::triggered)
        np.resolution = resolve_and_update(markable, utterance, prev_cf, kb_, patterns_,
                                           options_.search, options_.early_stop);
      report.nps.push_back(std::move(np));
    }

    report.state.cf = rank_cf(utterance, prev_cf);
    report.state.cb = compute_cb(utterance, prev_cf);
    report.transition = classify_transition(prev_state, report.state);

    prev_cf = report.state.cf;
    prev_state = report.state;
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace bridge
