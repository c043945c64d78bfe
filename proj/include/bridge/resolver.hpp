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

#ifndef BRIDGE_RESOLVER_HPP_
#define BRIDGE_RESOLVER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "bridge/centering.hpp"
#include "bridge/discourse.hpp"
#include "bridge/kb.hpp"
#include "bridge/path_evaluator.hpp"
#include "bridge/path_finder.hpp"

namespace bridge {

enum class TriggerOutcome { nominal_anaphor, already_connected, triggered };

const char* to_string(TriggerOutcome outcome);

struct TriggerVerdict {
  TriggerOutcome outcome;
  std::string detail;
};

// Nominal anaphora test: the expression's concept subsumes the concept of
// some forward-looking center of the previous utterance.
bool is_nominal_anaphor(const Markable& expression, const std::vector<CfEntry>& prev_cf,
                        const KnowledgeBase& kb);

// The relation bases whose instantiation connects an expression well enough
// to suppress the ellipsis search: the inverse-direction property/part
// relations, plus the pof-relation extensions of the KB file.
std::vector<RelationId> pof_relation_bases(const KnowledgeBase& kb);

// Decides whether the ellipsis search runs for a definite noun phrase:
// not an anaphor, and not already linked by an instantiated blocking-type
// relation to a referent of the current utterance.
TriggerVerdict should_trigger(const Markable& expression, const Utterance& utterance,
                              const std::vector<CfEntry>& prev_cf, const KnowledgeBase& kb,
                              const std::vector<RelationId>& pof_bases);

// Structural antecedent condition: the candidate is nominal, the elliptical
// expression is a noun carrying a definite determiner in the current
// utterance, and the candidate is a forward-looking center of the previous
// utterance (ensured by taking candidates from that list).
bool is_potential_elliptical_antecedent(const CfEntry& candidate, const Markable& elliptical,
                                        const Utterance& utterance);

enum class ResolutionStatus { resolved, ambiguous, no_antecedent };

const char* to_string(ResolutionStatus status);

struct CandidateReport {
  CfEntry entry;
  CpList cp;        // empty when skipped by the early stop
  bool considered;  // false when the early stop cut the scan before it
};

struct ResolutionResult {
  const Markable* elliptical = nullptr;
  std::optional<CfEntry> antecedent;
  CpList bridge;                         // CP list of the chosen antecedent
  std::vector<RelationId> bridge_path;   // the instantiated path
  std::optional<RelationId> role;        // first relation of that path
  ResolutionStatus status = ResolutionStatus::no_antecedent;
  std::vector<CandidateReport> candidates;
};

// Selects the preferred antecedent among the previous forward-looking
// centers: no competitor may have a strictly stronger CP list, nor an
// equally strong one while being preferred by the centering order. With
// early_stop the scan ends at the first plausible bridge; this cannot
// change the winner because the scan follows the centering order.
ResolutionResult preferred_conceptual_bridge(const Markable& elliptical,
                                             const Utterance& utterance,
                                             const std::vector<CfEntry>& prev_cf,
                                             const KnowledgeBase& kb,
                                             const PatternSets& patterns,
                                             const SearchConfig& config = {},
                                             bool early_stop = true);

// Runs the selection and, on success, establishes the bridge in the text
// KB: the elliptical referent is linked along the chosen path, materializing
// fresh intermediate instances for multi-step bridges, and the markable is
// flagged as realizing its antecedent.
ResolutionResult resolve_and_update(Markable& elliptical, const Utterance& utterance,
                                    const std::vector<CfEntry>& prev_cf, KnowledgeBase& kb,
                                    const PatternSets& patterns,
                                    const SearchConfig& config = {}, bool early_stop = true);

struct NpReport {
  const Markable* np = nullptr;
  TriggerVerdict verdict;
  std::optional<ResolutionResult> resolution;
};

struct UtteranceReport {
  int index = 0;
  UtteranceState state;
  Transition transition = Transition::not_applicable;
  std::vector<NpReport> nps;
};

struct SessionOptions {
  SearchConfig search;
  bool early_stop = true;
};

// Drives a whole discourse: asserts each utterance's interpretation facts,
// applies the trigger test to every definite noun phrase, resolves triggered
// ellipses, and maintains the centering state.
class ResolutionSession {
 public:
  ResolutionSession(KnowledgeBase& kb, Discourse& discourse, SessionOptions options = {});

  std::vector<UtteranceReport> run();

  const PatternSets& patterns() const { return patterns_; }

 private:
  KnowledgeBase& kb_;
  Discourse& discourse_;
  SessionOptions options_;
  PatternSets patterns_;
  std::vector<RelationId> pof_bases_;
};

}  // namespace bridge

#endif  // BRIDGE_RESOLVER_HPP_
