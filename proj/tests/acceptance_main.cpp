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
//
// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the process exits non-zero when any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bridge/discourse.hpp"
#include "bridge/eval.hpp"
#include "bridge/kb_loader.hpp"
#include "bridge/path_evaluator.hpp"
#include "bridge/path_finder.hpp"
#include "bridge/resolver.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace bridge;

namespace {

std::string data_path(const std::string& file) {
  return std::string(BRIDGE_DATA_DIR) + "/" + file;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  CliResult result;
  std::string command = std::string(BRIDGE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe))
    result.output.append(buffer, n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class Checker {
 public:
  void expect(bool condition, const std::string& message) {
    if (!condition) failures_.push_back(message);
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

struct SessionRun {
  KnowledgeBase kb;
  Discourse discourse;
  std::vector<UtteranceReport> reports;
};

SessionRun run_file(const std::string& file, bool early_stop = true) {
  SessionRun run{load_kb_file(data_path("demo.kb")), {}, {}};
  run.discourse = load_discourse_file(data_path(file), run.kb);
  SessionOptions options;
  options.early_stop = early_stop;
  ResolutionSession session(run.kb, run.discourse, options);
  run.reports = session.run();
  return run;
}

SessionRun run_generated(std::uint64_t seed, bool early_stop) {
  SessionRun run{load_kb_file(data_path("demo.kb")), {}, {}};
  run.discourse = bridge::testing::random_resolution_discourse(seed, run.kb);
  SessionOptions options;
  options.early_stop = early_stop;
  ResolutionSession session(run.kb, run.discourse, options);
  run.reports = session.run();
  return run;
}

// Post-hoc exhaustive audit of one resolved noun phrase: no candidate may be
// strictly stronger, nor equally strong but higher in the centering order.
void audit_resolution(Checker& check, const SessionRun& run, std::size_t utterance_index,
                      const NpReport& np, const PatternSets& patterns) {
  const ResolutionResult& resolution = *np.resolution;
  const Utterance& utterance = run.discourse.utterances[utterance_index];
  const std::vector<CfEntry>& prev_cf = run.reports[utterance_index - 1].state.cf;

  std::optional<std::size_t> winner_position;
  int winner_rank = strength_rank(resolution.bridge);

  std::set<std::size_t> seen;
  std::size_t position = 0;
  for (const CfEntry& entry : prev_cf) {
    if (!is_potential_elliptical_antecedent(entry, *np.np, utterance)) continue;
    if (!seen.insert(index_of(entry.referent)).second) continue;
    CpList cp = build_cp_list(np.np->concept_id, entry.markable->concept_id, run.kb.schema,
                              patterns);
    if (entry.referent == resolution.antecedent->referent) {
      winner_position = position;
      check.expect(strength_rank(cp) == winner_rank,
                   "winner strength differs from its recomputed CP list");
    } else {
      check.expect(strength_rank(cp) >= winner_rank,
                   "a strictly stronger competitor was available");
      if (strength_rank(cp) == winner_rank)
        check.expect(winner_position.has_value(),
                     "an equally strong competitor precedes the winner");
    }
    ++position;
  }
  check.expect(winner_position.has_value(), "winner not among the audited candidates");
}

int criterion_1(Checker& check) {
  using clock = std::chrono::steady_clock;
  auto start = clock::now();
  CliResult cli = run_cli("resolve --kb " + data_path("demo.kb") + " --discourse " +
                          data_path("demo_discourse.txt") + " --trace");
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start);

  check.expect(cli.exit_code == 0, "resolve exited with " + std::to_string(cli.exit_code));
  check.expect(elapsed.count() < 1000, "resolve took " + std::to_string(elapsed.count()) + "ms");
  check.expect(cli.output.find("C_f = [316LT, ACCUMULATOR, TIME-UNIT-PAIR, POWER]") !=
                   std::string::npos,
               "forward-looking centers of U2 not printed as expected");
  check.expect(cli.output.find("via charge-time-of [plausible]") != std::string::npos,
               "missing plausible charge-time-of resolution line");
  check.expect(cli.output.find("CP(CHARGE-TIME, ACCUMULATOR) = plausible") != std::string::npos,
               "accumulator CP list not reported plausible");

  // The 316LT candidate carries a metonymic list containing the two-step path.
  std::istringstream lines(cli.output);
  std::string line;
  bool notebook_cp = false;
  while (std::getline(lines, line)) {
    if (line.find("candidate 316LT:") == std::string::npos) continue;
    notebook_cp = line.find("= metonymic") != std::string::npos &&
                  line.find("(charge-time-of accumulator-of)") != std::string::npos;
  }
  check.expect(notebook_cp, "316LT candidate CP list not metonymic with the two-step path");

  // Structured checks through the library.
  SessionRun run = run_file("demo_discourse.txt");
  InstanceId akku = run.discourse.utterances[0].markables[1].referent;
  const NpReport* ladezeit = nullptr;
  for (const auto& report : run.reports)
    for (const auto& np : report.nps)
      if (np.np->id == "lz3") ladezeit = &np;
  check.expect(ladezeit && ladezeit->resolution.has_value(), "Ladezeit not resolved");
  if (ladezeit && ladezeit->resolution) {
    const ResolutionResult& resolution = *ladezeit->resolution;
    check.expect(resolution.status == ResolutionStatus::resolved, "status not resolved");
    check.expect(resolution.antecedent &&
                     resolution.antecedent->referent == akku,
                 "antecedent is not the accumulator instance");
    check.expect(resolution.role &&
                     run.kb.schema.name(*resolution.role) == "charge-time-of",
                 "bridge role is not charge-time-of");
    check.expect(resolution.bridge.marker == PathMarker::plausible,
                 "bridge list is not plausible");
  }
  return 0;
}

void criterion_2(Checker& check) {
  KnowledgeBase kb = load_kb_file(data_path("demo.kb"));
  std::vector<RelationId> chain{kb.schema.relation_ref("accumulator-of"),
                                kb.schema.relation_ref("has-printer")};
  check.expect(is_cyclic(std::span<const RelationId>(chain), kb.schema),
               "(accumulator-of has-printer) not rejected as cyclic");
  auto paths = well_formed_paths(kb.schema.concept_ref("ACCUMULATOR"),
                                 kb.schema.concept_ref("PRINTER"), kb.schema);
  for (const auto& path : paths)
    check.expect(path.relations != chain, "cyclic path present in the well-formed set");
}

void criterion_3(Checker& check) {
  KnowledgeBase kb = load_kb_file(data_path("demo.kb"));
  auto path_of = [&](const std::vector<std::string>& names) {
    ConceptualPath path;
    for (const auto& name : names) path.relations.push_back(kb.schema.relation_ref(name));
    path.waypoints.push_back(kb.schema.domain(path.relations.front()));
    for (RelationId r : path.relations) path.waypoints.push_back(kb.schema.range(r));
    return path;
  };
  check.expect(includes(path_of({"has-accumulator", "price-dm-pair"}),
                        path_of({"price-dm-pair"}), kb.schema),
               "price detour does not include the direct role");
  check.expect(!includes(path_of({"has-central-unit", "has-motherboard", "has-cpu"}),
                         path_of({"has-central-unit", "has-motherboard"}), kb.schema),
               "cpu chain wrongly includes its prefix");
}

void criterion_4(Checker& check) {
  using clock = std::chrono::steady_clock;
  auto start = clock::now();
  std::size_t mismatches = 0;
  std::size_t nonempty_comparisons = 0;
  std::set<std::uint64_t> kb_seeds;
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    std::uint64_t seed = 4000 + trial;
    kb_seeds.insert(seed);
    KnowledgeBase kb = bridge::testing::random_kb(seed);
    PatternSets patterns = PatternSets::defaults(kb);
    SearchConfig config;
    config.max_length = 4;

    std::mt19937_64 rng(seed * 977 + 13);
    auto all = kb.schema.all_concepts();
    for (int k = 0; k < 4; ++k) {
      ConceptId from = all[rng() % all.size()];
      ConceptId to = all[rng() % all.size()];
      if (from == to) continue;

      auto got = well_formed_paths(from, to, kb.schema, config);
      auto expected = bridge::testing::oracle_well_formed(kb.schema, from, to, 4);
      if (!bridge::testing::same_path_set(got, expected)) ++mismatches;
      if (!expected.empty()) ++nonempty_comparisons;

      CpList list = build_cp_list(from, to, kb.schema, patterns, config);
      CpList oracle = bridge::testing::oracle_cp_list(kb, from, to, 4);
      if (list.marker != oracle.marker ||
          !bridge::testing::same_path_set(list.paths, oracle.paths))
        ++mismatches;
    }
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(clock::now() - start);
  check.expect(kb_seeds.size() >= 3, "fewer than 3 distinct schemas exercised");
  check.expect(nonempty_comparisons >= 30,
               "too few connected pairs to be meaningful: " +
                   std::to_string(nonempty_comparisons));
  check.expect(mismatches == 0, std::to_string(mismatches) + " oracle mismatches");
  check.expect(elapsed.count() < 60, "oracle comparison took " +
                                         std::to_string(elapsed.count()) + "s");
}

void criterion_5(Checker& check) {
  CliResult cli =
      run_cli("eval --kb " + data_path("demo.kb") + " --pairs 20 --seed 1 --json");
  check.expect(cli.exit_code == 0, "eval exited with " + std::to_string(cli.exit_code));
  try {
    nlohmann::json doc = nlohmann::json::parse(cli.output);
    double connected = doc.at("avg_connected").get<double>();
    double well_formed = doc.at("avg_well_formed").get<double>();
    double included = doc.at("avg_after_inclusion").get<double>();
    double strongest = doc.at("avg_after_marker").get<double>();
    check.expect(connected >= well_formed && well_formed >= included &&
                     included >= strongest,
                 "eval command averages not monotone");
    check.expect(doc.at("rows").size() == 20, "eval command did not sample 20 pairs");
  } catch (const std::exception& error) {
    check.expect(false, std::string("eval JSON unusable: ") + error.what());
  }

  KnowledgeBase kb = load_kb_file(data_path("demo.kb"));
  EvalReport report = run_pair_evaluation(kb, 20, 1);
  check.expect(report.rows.size() == 20, "expected 20 sampled pairs");
  check.expect(report.avg_connected >= report.avg_well_formed &&
                   report.avg_well_formed >= report.avg_after_inclusion &&
                   report.avg_after_inclusion >= report.avg_after_marker,
               "stage averages not monotone");
  for (const EvalRow& row : report.rows)
    check.expect(row.connected >= row.well_formed && row.well_formed >= row.after_inclusion &&
                     row.after_inclusion >= row.after_marker,
                 "per-pair counts not monotone");

  PatternSets patterns = PatternSets::defaults(kb);
  std::vector<CpList> lists;
  for (const EvalRow& row : report.rows)
    lists.push_back(build_cp_list(row.from, row.to, kb.schema, patterns));
  for (const CpList& a : lists) {
    check.expect(!is_stronger_than(a, a), "strength order not irreflexive");
    for (const CpList& b : lists) {
      int holds = (is_stronger_than(a, b) ? 1 : 0) + (is_stronger_than(b, a) ? 1 : 0) +
                  (equally_strong_as(a, b) ? 1 : 0);
      check.expect(holds == 1, "strength trichotomy violated");
      for (const CpList& c : lists)
        if (is_stronger_than(a, b) && is_stronger_than(b, c))
          check.expect(is_stronger_than(a, c), "strength order not transitive");
    }
  }
}

void criterion_6(Checker& check) {
  using clock = std::chrono::steady_clock;
  auto start = clock::now();
  std::size_t violations = 0;
  KnowledgeBase kb = load_kb_file(data_path("demo.kb"));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Discourse discourse = bridge::testing::random_centering_discourse(6000 + seed, kb);
    std::vector<CfEntry> prev_cf;
    for (const Utterance& utterance : discourse.utterances) {
      auto cf = rank_cf(utterance, prev_cf);

      std::set<std::size_t> expected, actual;
      for (const Markable& markable : utterance.markables)
        if (word_class_subsumes(WordClass::nominal, markable.word_class))
          expected.insert(index_of(markable.referent));
      for (const CfEntry& entry : cf) actual.insert(index_of(entry.referent));
      if (expected != actual || cf.size() != actual.size()) ++violations;

      bool seen_unbound = false;
      std::size_t last_rank = 0;
      for (const CfEntry& entry : cf) {
        if (!entry.bound) {
          seen_unbound = true;
          continue;
        }
        if (seen_unbound) ++violations;
        std::size_t rank = prev_cf.size();
        for (std::size_t i = 0; i < prev_cf.size(); ++i)
          if (prev_cf[i].referent == entry.referent) {
            rank = i;
            break;
          }
        if (rank == prev_cf.size() || rank < last_rank) ++violations;
        if (rank != prev_cf.size()) last_rank = rank;
      }

      auto cb = compute_cb(utterance, prev_cf);
      std::optional<std::size_t> minimal;
      for (std::size_t i = 0; i < prev_cf.size() && !minimal; ++i)
        for (const Markable& markable : utterance.markables)
          if (word_class_subsumes(WordClass::nominal, markable.word_class) &&
              markable.referent == prev_cf[i].referent)
            minimal = i;
      if (cb.has_value() != minimal.has_value()) ++violations;
      if (cb && minimal && cb->referent != prev_cf[*minimal].referent) ++violations;

      for (std::size_t i = 0; i < cf.size(); ++i) {
        if (is_preferred_is(cf, cf[i].referent, cf[i].referent)) ++violations;
        for (std::size_t j = 0; j < cf.size(); ++j)
          if (i != j &&
              is_preferred_is(cf, cf[i].referent, cf[j].referent) != (i < j))
            ++violations;
      }
      prev_cf = cf;
    }
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(clock::now() - start);
  check.expect(violations == 0, std::to_string(violations) + " centering violations");
  check.expect(elapsed.count() < 30,
               "centering suite took " + std::to_string(elapsed.count()) + "s");
}

void criterion_7(Checker& check) {
  std::size_t resolved_count = 0;

  auto audit_run = [&](const SessionRun& run) {
    PatternSets patterns = PatternSets::defaults(run.kb);
    for (std::size_t u = 1; u < run.reports.size(); ++u) {
      for (const NpReport& np : run.reports[u].nps) {
        if (!np.resolution || np.resolution->status != ResolutionStatus::resolved) continue;
        ++resolved_count;
        audit_resolution(check, run, u, np, patterns);
      }
    }
  };

  for (const char* file :
       {"demo_discourse.txt", "demo_discourse_genitive.txt", "demo_discourse_no_akku.txt"}) {
    SessionRun eager = run_file(file, true);
    SessionRun full = run_file(file, false);
    audit_run(eager);
    check.expect(eager.reports.size() == full.reports.size(), "report sizes differ");
    for (std::size_t u = 0; u < eager.reports.size(); ++u)
      for (std::size_t n = 0; n < eager.reports[u].nps.size(); ++n) {
        const NpReport& a = eager.reports[u].nps[n];
        const NpReport& b = full.reports[u].nps[n];
        bool same = a.verdict.outcome == b.verdict.outcome &&
                    a.resolution.has_value() == b.resolution.has_value();
        if (same && a.resolution) {
          same = a.resolution->status == b.resolution->status;
          if (same && a.resolution->antecedent)
            same = eager.kb.text.id_of(a.resolution->antecedent->referent) ==
                   full.kb.text.id_of(b.resolution->antecedent->referent);
        }
        check.expect(same, std::string("early-stop result differs in ") + file);
      }
  }

  for (std::uint64_t seed = 7000; seed < 7040; ++seed) {
    SessionRun eager = run_generated(seed, true);
    SessionRun full = run_generated(seed, false);
    audit_run(eager);
    check.expect(eager.reports.size() == full.reports.size(), "report sizes differ");
    for (std::size_t u = 0; u < eager.reports.size(); ++u) {
      if (eager.reports[u].nps.size() != full.reports[u].nps.size()) {
        check.expect(false, "np report sizes differ");
        continue;
      }
      for (std::size_t n = 0; n < eager.reports[u].nps.size(); ++n) {
        const NpReport& a = eager.reports[u].nps[n];
        const NpReport& b = full.reports[u].nps[n];
        bool same = a.verdict.outcome == b.verdict.outcome &&
                    a.resolution.has_value() == b.resolution.has_value();
        if (same && a.resolution && b.resolution) {
          same = a.resolution->status == b.resolution->status &&
                 a.resolution->antecedent.has_value() ==
                     b.resolution->antecedent.has_value();
          if (same && a.resolution->antecedent)
            same = eager.kb.text.id_of(a.resolution->antecedent->referent) ==
                       full.kb.text.id_of(b.resolution->antecedent->referent) &&
                   a.resolution->bridge_path == b.resolution->bridge_path;
        }
        check.expect(same, "early-stop result differs on a generated discourse");
      }
    }
  }
  check.expect(resolved_count > 0, "corpus produced no resolved noun phrases");
}

void criterion_8(Checker& check) {
  SessionRun genitive = run_file("demo_discourse_genitive.txt");
  const NpReport* blocked = nullptr;
  for (const auto& report : genitive.reports)
    for (const auto& np : report.nps)
      if (np.np->id == "lz3") blocked = &np;
  check.expect(blocked != nullptr, "genitive variant has no Ladezeit NP");
  if (blocked) {
    check.expect(blocked->verdict.outcome == TriggerOutcome::already_connected,
                 "genitive variant did not report already-connected");
    check.expect(!blocked->resolution.has_value(),
                 "genitive variant ran a resolution anyway");
  }

  SessionRun elided = run_file("demo_discourse.txt");
  const NpReport* triggered = nullptr;
  for (const auto& report : elided.reports)
    for (const auto& np : report.nps)
      if (np.np->id == "lz3") triggered = &np;
  check.expect(triggered && triggered->verdict.outcome == TriggerOutcome::triggered,
               "elided variant did not trigger");
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    std::function<void(Checker&)> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "worked-example reproduction", [](Checker& c) { criterion_1(c); }},
      {2, "cyclicity golden test", criterion_2},
      {3, "inclusion golden tests", criterion_3},
      {4, "oracle equivalence on random schemas", criterion_4},
      {5, "filter-chain monotonicity and strength laws", criterion_5},
      {6, "centering property suite", criterion_6},
      {7, "preferred-bridge optimality audit", criterion_7},
      {8, "genitive blocking vs. elided triggering", criterion_8},
  };

  int failed = 0;
  for (const Criterion& criterion : criteria) {
    Checker check;
    try {
      criterion.body(check);
    } catch (const std::exception& error) {
      check.expect(false, std::string("exception: ") + error.what());
    }
    if (check.failures().empty()) {
      std::cout << "[PASS] criterion " << criterion.number << ": " << criterion.title << '\n';
    } else {
      ++failed;
      std::cout << "[FAIL] criterion " << criterion.number << ": " << criterion.title << '\n';
      for (const std::string& failure : check.failures())
        std::cout << "       - " << failure << '\n';
    }
  }
  if (failed > 0) std::cout << failed << " criteria failed\n";
  return failed == 0 ? 0 : 1;
}
