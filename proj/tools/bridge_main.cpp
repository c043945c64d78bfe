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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bridge/discourse.hpp"
#include "bridge/eval.hpp"
#include "bridge/kb_loader.hpp"
#include "bridge/path_evaluator.hpp"
#include "bridge/path_finder.hpp"
#include "bridge/resolver.hpp"

namespace {

using bridge::CandidateReport;
using bridge::ConceptualPath;
using bridge::CpList;
using bridge::Fact;
using bridge::KnowledgeBase;
using bridge::SearchConfig;

// BRIDGE_MAX_PATH_LEN, when set, caps the path search length everywhere.
void apply_env_max_length(SearchConfig& config) {
  const char* value = std::getenv("BRIDGE_MAX_PATH_LEN");
  if (!value || !*value) return;
  char* end = nullptr;
  long parsed = std::strtol(value, &end, 10);
  if (end && *end == '\0' && parsed > 0)
    config.max_length = static_cast<std::size_t>(parsed);
  else
    std::cerr << "warning: ignoring invalid BRIDGE_MAX_PATH_LEN '" << value << "'\n";
}

std::string marker_label(const CpList& cp) {
  return cp.marker ? bridge::to_string(*cp.marker) : "empty";
}

std::string cp_label(const CpList& cp, const bridge::Schema& schema) {
  std::string out = "CP(" + schema.name(cp.from) + ", " + schema.name(cp.to) +
                    ") = " + marker_label(cp);
  if (!cp.paths.empty()) {
    out += " {";
    for (std::size_t i = 0; i < cp.paths.size(); ++i) {
      if (i > 0) out += ", ";
      out += bridge::format_path(cp.paths[i], schema);
    }
    out += '}';
  }
  return out;
}

void print_facts(std::ostream& out, const KnowledgeBase& kb) {
  out << "facts:\n";
  for (const Fact& fact : kb.text.facts())
    out << "  (" << kb.text.id_of(fact.subject) << ", " << kb.schema.name(fact.relation)
        << ", " << kb.text.id_of(fact.object) << ")\n";
}

nlohmann::json fact_json(const Fact& fact, const KnowledgeBase& kb) {
  return {{"subject", kb.text.id_of(fact.subject)},
          {"relation", kb.schema.name(fact.relation)},
          {"object", kb.text.id_of(fact.object)}};
}

int run_resolve(const std::string& kb_path, const std::string& discourse_path, bool trace,
                bool json_output, const SearchConfig& config) {
  KnowledgeBase kb = bridge::load_kb_file(kb_path);
  bridge::Discourse discourse = bridge::load_discourse_file(discourse_path, kb);

  bridge::SessionOptions options;
  options.search = config;
  bridge::ResolutionSession session(kb, discourse, options);
  std::vector<bridge::UtteranceReport> reports = session.run();

  bool incomplete = false;
  for (const auto& report : reports)
    for (const auto& np : report.nps)
      if (np.resolution && np.resolution->status != bridge::ResolutionStatus::resolved)
        incomplete = true;

  if (json_output) {
    nlohmann::json doc;
    doc["utterances"] = nlohmann::json::array();
    for (const auto& report : reports) {
      nlohmann::json utterance;
      utterance["index"] = report.index;
      utterance["cf"] = nlohmann::json::array();
      for (const auto& entry : report.state.cf)
        utterance["cf"].push_back(bridge::format_cf_entry(entry, kb.schema, kb.text));
      utterance["cb"] = report.state.cb
                            ? nlohmann::json(bridge::format_cf_entry(*report.state.cb,
                                                                     kb.schema, kb.text))
                            : nlohmann::json(nullptr);
      utterance["transition"] = bridge::to_string(report.transition);
      utterance["nps"] = nlohmann::json::array();
      for (const auto& np : report.nps) {
        nlohmann::json entry;
        entry["markable"] = np.np->id;
        entry["surface"] = np.np->surface;
        entry["verdict"] = bridge::to_string(np.verdict.outcome);
        entry["detail"] = np.verdict.detail;
        if (np.resolution) {
          const auto& resolution = *np.resolution;
          nlohmann::json res;
          res["status"] = bridge::to_string(resolution.status);
          if (resolution.antecedent) {
            res["antecedent"] = kb.text.id_of(resolution.antecedent->referent);
            res["role"] = kb.schema.name(*resolution.role);
            res["path"] = bridge::format_path(resolution.bridge_path, kb.schema);
            res["marker"] = marker_label(resolution.bridge);
          }
          if (trace) {
            res["candidates"] = nlohmann::json::array();
            for (const auto& candidate : resolution.candidates) {
              nlohmann::json c;
              c["candidate"] = kb.text.id_of(candidate.entry.referent);
              c["considered"] = candidate.considered;
              if (candidate.considered) {
                c["cp"] = cp_label(candidate.cp, kb.schema);
                c["marker"] = marker_label(candidate.cp);
              }
              res["candidates"].push_back(std::move(c));
            }
          }
          entry["resolution"] = std::move(res);
        }
        utterance["nps"].push_back(std::move(entry));
      }
      doc["utterances"].push_back(std::move(utterance));
    }
    doc["facts"] = nlohmann::json::array();
    for (const Fact& fact : kb.text.facts()) doc["facts"].push_back(fact_json(fact, kb));
    std::cout << doc.dump(2) << '\n';
    return incomplete ? 2 : 0;
  }

  for (const auto& report : reports) {
    std::cout << "U" << report.index << ":\n";
    for (const auto& np : report.nps) {
      std::cout << "  NP '" << np.np->surface << "': " << bridge::to_string(np.verdict.outcome)
                << " (" << np.verdict.detail << ")\n";
      if (!np.resolution) continue;
      const auto& resolution = *np.resolution;
      if (resolution.status == bridge::ResolutionStatus::resolved) {
        std::cout << "    " << np.np->surface << " -> "
                  << kb.text.id_of(resolution.antecedent->referent) << " via "
                  << kb.schema.name(*resolution.role) << " ["
                  << marker_label(resolution.bridge) << "]";
        if (resolution.bridge_path.size() > 1)
          std::cout << " along " << bridge::format_path(resolution.bridge_path, kb.schema);
        std::cout << '\n';
      } else {
        std::cout << "    " << bridge::to_string(resolution.status) << '\n';
      }
      if (trace) {
        for (const auto& candidate : resolution.candidates) {
          std::cout << "    candidate " << kb.text.id_of(candidate.entry.referent) << ": ";
          if (candidate.considered)
            std::cout << cp_label(candidate.cp, kb.schema);
          else
            std::cout << "not considered (stronger bridge already found)";
          std::cout << '\n';
        }
      }
    }
    std::cout << "  C_f = " << bridge::format_cf(report.state.cf, kb.schema, kb.text) << '\n';
    if (trace) {
      for (const auto& entry : report.state.cf)
        std::cout << "    " << bridge::format_cf_entry(entry, kb.schema, kb.text) << ": "
                  << (entry.bound ? "bound" : "unbound") << '\n';
    }
    std::cout << "  C_b = "
              << (report.state.cb
                      ? bridge::format_cf_entry(*report.state.cb, kb.schema, kb.text)
                      : std::string("-"))
              << '\n';
    std::cout << "  transition = " << bridge::to_string(report.transition) << '\n';
  }
  print_facts(std::cout, kb);
  return incomplete ? 2 : 0;
}

int run_paths(const std::string& kb_path, const std::string& from, const std::string& to,
              bool show_all, const SearchConfig& config) {
  KnowledgeBase kb = bridge::load_kb_file(kb_path);
  bridge::ConceptId from_id = kb.schema.concept_ref(from);
  bridge::ConceptId to_id = kb.schema.concept_ref(to);
  bridge::PatternSets patterns = bridge::PatternSets::defaults(kb);

  bridge::CpListTrace trace =
      bridge::build_cp_list_trace(from_id, to_id, kb.schema, patterns, config);

  std::cout << "well-formed paths from " << from << " to " << to << ":\n";
  bool any = false;
  for (const auto& audit : trace.audits) {
    if (audit.fate == bridge::PathFate::cyclic) continue;
    any = true;
    std::cout << "  " << bridge::format_path(audit.path, kb.schema) << "  via [";
    for (std::size_t i = 0; i < audit.path.waypoints.size(); ++i) {
      if (i > 0) std::cout << ' ';
      std::cout << kb.schema.name(audit.path.waypoints[i]);
    }
    std::cout << "]  " << bridge::to_string(*audit.marker) << '\n';
  }
  if (!any) std::cout << "  no well-formed paths\n";

  if (show_all) {
    std::cout << "rejected:\n";
    bool rejected = false;
    for (const auto& audit : trace.audits) {
      if (audit.fate == bridge::PathFate::kept) continue;
      rejected = true;
      std::cout << "  " << bridge::format_path(audit.path, kb.schema) << "  ";
      switch (audit.fate) {
        case bridge::PathFate::cyclic:
          std::cout << "cyclic";
          break;
        case bridge::PathFate::included:
          std::cout << "includes "
                    << bridge::format_path(trace.audits[*audit.included_target].path,
                                           kb.schema);
          break;
        case bridge::PathFate::weaker_marker:
          std::cout << "weaker marker (" << bridge::to_string(*audit.marker) << ")";
          break;
        case bridge::PathFate::kept:
          break;
      }
      std::cout << '\n';
    }
    if (!rejected) std::cout << "  none\n";
  }

  std::cout << cp_label(trace.result, kb.schema) << '\n';
  return 0;
}

int run_eval(const std::string& kb_path, std::size_t pairs, std::uint64_t seed,
             bool json_output, const SearchConfig& config) {
  KnowledgeBase kb = bridge::load_kb_file(kb_path);
  bridge::EvalReport report = bridge::run_pair_evaluation(kb, pairs, seed, config);
  if (report.clamped)
    std::cerr << "warning: only " << report.rows.size()
              << " distinct pairs available; clamped\n";

  if (json_output) {
    nlohmann::json doc;
    doc["pairs_sampled"] = report.rows.size();
    doc["pairs_requested"] = report.pairs_requested;
    doc["seed"] = report.seed;
    doc["clamped"] = report.clamped;
    doc["avg_connected"] = report.avg_connected;
    doc["avg_well_formed"] = report.avg_well_formed;
    doc["avg_after_inclusion"] = report.avg_after_inclusion;
    doc["avg_after_marker"] = report.avg_after_marker;
    doc["rows"] = nlohmann::json::array();
    for (const auto& row : report.rows)
      doc["rows"].push_back({{"from", kb.schema.name(row.from)},
                             {"to", kb.schema.name(row.to)},
                             {"connected", row.connected},
                             {"well_formed", row.well_formed},
                             {"after_inclusion", row.after_inclusion},
                             {"after_marker", row.after_marker}});
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << bridge::format_eval_report(report, kb.schema);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Terminological path search and textual-ellipsis resolution"};
  app.require_subcommand(1);

  std::string kb_path, discourse_path, from, to;
  bool trace = false, show_all = false, json_output = false;
  std::size_t pairs = 20;
  std::uint64_t seed = 1;
  long max_length = 0;

  CLI::App* resolve = app.add_subcommand("resolve", "Resolve a discourse against a KB");
  resolve->add_option("--kb", kb_path, "knowledge base file")->required();
  resolve->add_option("--discourse", discourse_path, "annotated discourse file")->required();
  resolve->add_flag("--trace", trace, "print CP lists and rejected candidates");
  resolve->add_flag("--json", json_output, "JSON report");
  resolve->add_option("--max-len", max_length, "cap path length");

  CLI::App* paths = app.add_subcommand("paths", "List conceptual paths between two concepts");
  paths->add_option("--kb", kb_path, "knowledge base file")->required();
  paths->add_option("--from", from, "source concept")->required();
  paths->add_option("--to", to, "target concept")->required();
  paths->add_flag("--all", show_all, "include rejected paths with reasons");
  paths->add_option("--max-len", max_length, "cap path length");

  CLI::App* eval = app.add_subcommand("eval", "Random-pair filter-chain evaluation");
  eval->add_option("--kb", kb_path, "knowledge base file")->required();
  eval->add_option("--pairs", pairs, "number of concept pairs to sample");
  eval->add_option("--seed", seed, "sampling seed");
  eval->add_flag("--json", json_output, "JSON report");
  eval->add_option("--max-len", max_length, "cap path length (default 4)");

  CLI11_PARSE(app, argc, argv);

  SearchConfig config;
  if (max_length > 0) config.max_length = static_cast<std::size_t>(max_length);
  if (eval->parsed() && !config.max_length) config.max_length = 4;
  apply_env_max_length(config);

  try {
    if (resolve->parsed())
      return run_resolve(kb_path, discourse_path, trace, json_output, config);
    if (paths->parsed()) return run_paths(kb_path, from, to, show_all, config);
    if (eval->parsed()) return run_eval(kb_path, pairs, seed, json_output, config);
  } catch (const bridge::KbError& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  }
  return 0;
}
