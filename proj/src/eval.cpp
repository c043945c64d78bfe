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

#include "bridge/eval.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <sstream>

namespace bridge {

EvalReport run_pair_evaluation(const KnowledgeBase& kb, std::size_t pairs, std::uint64_t seed,
                               const SearchConfig& config) {
  const Schema& schema = kb.schema;
  PatternSets patterns = PatternSets::defaults(kb);

  std::vector<std::pair<ConceptId, ConceptId>> all_pairs;
  for (std::size_t i = 0; i < schema.concept_count(); ++i)
    for (std::size_t j = i + 1; j < schema.concept_count(); ++j)
      all_pairs.emplace_back(ConceptId{static_cast<std::uint32_t>(i)},
                             ConceptId{static_cast<std::uint32_t>(j)});

  EvalReport report;
  report.pairs_requested = pairs;
  report.seed = seed;
  if (pairs > all_pairs.size()) {
    report.clamped = true;
    pairs = all_pairs.size();
  }

  std::mt19937_64 rng(seed);
  std::shuffle(all_pairs.begin(), all_pairs.end(), rng);
  all_pairs.resize(pairs);

  SearchConfig connected_config = config;
  connected_config.prune_cyclic = false;

  for (const auto& [from, to] : all_pairs) {
    EvalRow row;
    row.from = from;
    row.to = to;
    row.connected = find_connected_paths(from, to, schema, connected_config).size();
    std::vector<ConceptualPath> well_formed = well_formed_paths(from, to, schema, config);
    row.well_formed = well_formed.size();

    std::size_t surviving = 0;
    for (std::size_t i = 0; i < well_formed.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < well_formed.size() && !dominated; ++j)
        dominated = i != j && includes(well_formed[i], well_formed[j], schema);
      if (!dominated) ++surviving;
    }
    row.after_inclusion = surviving;
    row.after_marker = build_cp_list(from, to, schema, patterns, config).paths.size();
    report.rows.push_back(row);
  }

  if (!report.rows.empty()) {
    for (const EvalRow& row : report.rows) {
      report.avg_connected += static_cast<double>(row.connected);
      report.avg_well_formed += static_cast<double>(row.well_formed);
      report.avg_after_inclusion += static_cast<double>(row.after_inclusion);
      report.avg_after_marker += static_cast<double>(row.after_marker);
    }
    const double n = static_cast<double>(report.rows.size());
    report.avg_connected /= n;
    report.avg_well_formed /= n;
    report.avg_after_inclusion /= n;
    report.avg_after_marker /= n;
  }
  return report;
}

std::string format_eval_report(const EvalReport& report, const Schema& schema) {
  std::ostringstream out;
  out << "pairs sampled: " << report.rows.size();
  if (report.clamped) out << " (requested " << report.pairs_requested << ", clamped)";
  out << ", seed: " << report.seed << "\n\n";
  out << std::left << std::setw(24) << "from" << std::setw(24) << "to" << std::right
      << std::setw(10) << "connected" << std::setw(12) << "well-formed" << std::setw(10)
      << "included" << std::setw(10) << "strongest" << '\n';
  for (const EvalRow& row : report.rows) {
    out << std::left << std::setw(24) << schema.name(row.from) << std::setw(24)
        << schema.name(row.to) << std::right << std::setw(10) << row.connected
        << std::setw(12) << row.well_formed << std::setw(10) << row.after_inclusion
        << std::setw(10) << row.after_marker << '\n';
  }
  out << '\n'
      << std::fixed << std::setprecision(1) << "averages: connected " << report.avg_connected
      << " -> well-formed " << report.avg_well_formed << " -> after inclusion "
      << report.avg_after_inclusion << " -> strongest " << report.avg_after_marker << '\n';
  return out.str();
}

}  // namespace bridge
