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

#ifndef BRIDGE_EVAL_HPP_
#define BRIDGE_EVAL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "bridge/kb.hpp"
#include "bridge/path_evaluator.hpp"
#include "bridge/path_finder.hpp"

namespace bridge {

// Path counts of one concept pair after each filter stage.
struct EvalRow {
  ConceptId from{};
  ConceptId to{};
  std::size_t connected = 0;
  std::size_t well_formed = 0;
  std::size_t after_inclusion = 0;
  std::size_t after_marker = 0;
};

struct EvalReport {
  std::size_t pairs_requested = 0;
  std::uint64_t seed = 0;
  bool clamped = false;
  std::vector<EvalRow> rows;
  double avg_connected = 0.0;
  double avg_well_formed = 0.0;
  double avg_after_inclusion = 0.0;
  double avg_after_marker = 0.0;
};

// Samples distinct unordered concept pairs uniformly with the given seed and
// runs the filter pipeline on each. Deterministic for a fixed seed; requests
// beyond the number of available pairs are clamped.
EvalReport run_pair_evaluation(const KnowledgeBase& kb, std::size_t pairs, std::uint64_t seed,
                               const SearchConfig& config = {});

std::string format_eval_report(const EvalReport& report, const Schema& schema);

}  // namespace bridge

#endif  // BRIDGE_EVAL_HPP_
