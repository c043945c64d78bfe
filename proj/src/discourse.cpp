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

#include "bridge/discourse.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace bridge {

namespace {

// Whitespace tokenizer that keeps "quoted" stretches together and stops at
// an unquoted '#'.
std::vector<std::string> tokenize(const std::string& line, int line_no) {
  std::vector<std::string> tokens;
  std::string token;
  bool in_quotes = false;
  bool have_token = false;
  for (char ch : line) {
    if (ch == '"') {
      in_quotes = !in_quotes;
      have_token = true;
      continue;
    }
    if (!in_quotes && ch == '#') break;
    if (!in_quotes && (ch == ' ' || ch == '\t' || ch == '\r')) {
      if (have_token) tokens.push_back(token);
      token.clear();
      have_token = false;
      continue;
    }
    token += ch;
    have_token = true;
  }
  if (in_quotes) throw KbError("unterminated quote", line_no);
  if (have_token) tokens.push_back(token);
  return tokens;
}

struct PendingAnaphor {
  std::string markable, target;
  int line;
};
struct PendingFact {
  std::string subject, relation, object;
  int line;
};
struct PendingMarkable {
  Markable markable;
  std::string referent_spec;
  int line;
};

class DiscourseParser {
 public:
  DiscourseParser(KnowledgeBase& kb) : kb_(kb) {}

  Discourse parse(std::istream& in) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      auto tokens = tokenize(line, line_no);
      if (tokens.empty()) continue;
      const std::string& head = tokens[0];
      if (head == "utterance")
        begin_utterance(tokens, line_no);
      else if (head == "markable")
        parse_markable(tokens, line_no);
      else if (head == "anaphor")
        parse_anaphor(tokens, line_no);
      else if (head == "fact")
        parse_fact(tokens, line_no);
      else
        throw KbError("unknown discourse line '" + head + "'", line_no);
    }
    flush_utterance();
    return std::move(discourse_);
  }

 private:
  void begin_utterance(const std::vector<std::string>& tokens, int line_no) {
    if (tokens.size() != 2) throw KbError("expected 'utterance <n>'", line_no);
    int index = 0;
    try {
      index = std::stoi(tokens[1]);
    } catch (...) {
      throw KbError("utterance index must be a number", line_no);
    }
    flush_utterance();
    int expected = static_cast<int>(discourse_.utterances.size()) + 1;
    if (index != expected)
      throw KbError("utterance indices must be contiguous; expected " +
                        std::to_string(expected),
                    line_no);
    in_utterance_ = true;
    current_index_ = index;
  }

  void parse_markable(const std::vector<std::string>& tokens, int line_no) {
    if (!in_utterance_) throw KbError("markable outside of an utterance", line_no);
    if (tokens.size() < 2) throw KbError("markable needs an id", line_no);
    PendingMarkable pending;
    pending.line = line_no;
    Markable& markable = pending.markable;
    markable.id = tokens[1];
    if (known_ids_.count(markable.id))
      throw KbError("duplicate markable id '" + markable.id + "'", line_no);

    bool have_class = false, have_pos = false;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      const std::string& token = tokens[i];
      if (token == "definite") {
        markable.definite = true;
        continue;
      }
      auto eq = token.find('=');
      if (eq == std::string::npos)
        throw KbError("expected key=value, got '" + token + "'", line_no);
      std::string key = token.substr(0, eq);
      std::string value = token.substr(eq + 1);
      if (key == "surface") {
        markable.surface = value;
      } else if (key == "lemma") {
        markable.lemma = value;
      } else if (key == "class") {
        auto word_class = parse_word_class(value);
        if (!word_class) throw KbError("unknown word class '" + value + "'", line_no);
        markable.word_class = *word_class;
        have_class = true;
      } else if (key == "head") {
        markable.head = value;
      } else if (key == "referent") {
        pending.referent_spec = value;
      } else if (key == "pos") {
        try {
          markable.position = std::stoi(value);
        } catch (...) {
          throw KbError("pos must be a number", line_no);
        }
        have_pos = true;
      } else {
        throw KbError("unknown markable attribute '" + key + "'", line_no);
      }
    }
    if (!have_class) throw KbError("markable '" + markable.id + "' lacks a class", line_no);
    if (!have_pos) throw KbError("markable '" + markable.id + "' lacks a position", line_no);
    bool is_nominal = word_class_subsumes(WordClass::nominal, markable.word_class);
    if (is_nominal && pending.referent_spec.empty())
      throw KbError("markable '" + markable.id + "' lacks a referent", line_no);
    for (const auto& other : pending_markables_)
      if (other.markable.position == markable.position)
        throw KbError("duplicate position " + std::to_string(markable.position), line_no);
    known_ids_.insert(markable.id);
    pending_markables_.push_back(std::move(pending));
  }

  void parse_anaphor(const std::vector<std::string>& tokens, int line_no) {
    if (!in_utterance_) throw KbError("anaphor outside of an utterance", line_no);
    if (tokens.size() != 4 || tokens[2] != "resolves-to")
      throw KbError("expected 'anaphor <id> resolves-to <target>'", line_no);
    pending_anaphors_.push_back(PendingAnaphor{tokens[1], tokens[3], line_no});
  }

  void parse_fact(const std::vector<std::string>& tokens, int line_no) {
    if (!in_utterance_) throw KbError("fact outside of an utterance", line_no);
    if (tokens.size() != 4)
      throw KbError("expected 'fact <subject> <relation> <object>'", line_no);
    pending_facts_.push_back(PendingFact{tokens[1], tokens[2], tokens[3], line_no});
  }

  // Resolves an id to an instance: a KB instance, or a referent introduced
  // by an earlier markable (current utterance included).
  std::optional<InstanceId> resolve_entity(const std::string& id) const {
    if (auto instance = kb_.text.find_instance(id)) return instance;
    auto it = markable_referents_.find(id);
    if (it != markable_referents_.end()) return it->second;
    return std::nullopt;
  }

  void flush_utterance() {
    if (!in_utterance_) return;
    Utterance utterance;
    utterance.index = current_index_;

    // Anaphor targets may be markables of this same utterance, so referents
    // are materialized in two rounds: annotated ones first, then anaphors.
    std::unordered_map<std::string, const PendingAnaphor*> anaphor_of;
    for (const auto& anaphor : pending_anaphors_) {
      if (!known_ids_.count(anaphor.markable))
        throw KbError("anaphor for unknown markable '" + anaphor.markable + "'",
                      anaphor.line);
      if (!anaphor_of.emplace(anaphor.markable, &anaphor).second)
        throw KbError("markable '" + anaphor.markable + "' resolved twice", anaphor.line);
    }

    for (auto& pending : pending_markables_) {
      Markable& markable = pending.markable;
      bool is_nominal = word_class_subsumes(WordClass::nominal, markable.word_class);
      if (!is_nominal) {
        utterance.markables.push_back(std::move(markable));
        continue;
      }
      const std::string& spec = pending.referent_spec;
      if (auto instance = kb_.text.find_instance(spec)) {
        markable.referent = *instance;
        markable.concept_id = kb_.text.type_of(*instance);
      } else if (auto word_concept = kb_.schema.find_concept(spec)) {
        markable.concept_id = *word_concept;
        if (!anaphor_of.count(markable.id))
          markable.referent = kb_.text.add_anonymous_instance(kb_.schema, *word_concept);
      } else if (markable_referents_.count(spec)) {
        throw KbError("referent '" + spec + "' names a markable; use an anaphor line",
                      pending.line);
      } else {
        throw KbError("unknown referent '" + spec + "'", pending.line);
      }
      utterance.markables.push_back(std::move(markable));
    }

    for (auto& markable : utterance.markables) {
      auto it = anaphor_of.find(markable.id);
      if (it == anaphor_of.end()) continue;
      const PendingAnaphor& anaphor = *it->second;
      auto target = resolve_entity(anaphor.target);
      if (!target) {
        // The target may be a markable of this utterance.
        const Markable* local = utterance.find_markable(anaphor.target);
        if (local && local != &markable) target = local->referent;
      }
      if (!target) throw KbError("unknown anaphor target '" + anaphor.target + "'",
                                 anaphor.line);
      if (!kb_.schema.subsumes(markable.concept_id, kb_.text.type_of(*target)))
        throw KbError("anaphor '" + markable.id + "': antecedent '" +
                          kb_.text.id_of(*target) + "' is not subsumed by concept '" +
                          kb_.schema.name(markable.concept_id) + "'",
                      anaphor.line);
      markable.referent = *target;
    }

    // Validate head links and derive definiteness from the determiner.
    for (auto& markable : utterance.markables) {
      if (markable.head && !utterance.find_markable(*markable.head))
        throw KbError("markable '" + markable.id + "': head '" + *markable.head +
                      "' not in the same utterance");
    }
    for (auto& markable : utterance.markables)
      if (utterance.has_definite_determiner(markable)) markable.definite = true;

    for (auto& markable : utterance.markables)
      if (word_class_subsumes(WordClass::nominal, markable.word_class))
        markable_referents_.emplace(markable.id, markable.referent);

    for (const auto& pending : pending_facts_) {
      auto relation = kb_.schema.find_relation(pending.relation);
      if (!relation) throw KbError("unknown relation '" + pending.relation + "'", pending.line);
      auto subject = resolve_entity(pending.subject);
      if (!subject) throw KbError("unknown instance '" + pending.subject + "'", pending.line);
      auto object = resolve_entity(pending.object);
      if (!object) throw KbError("unknown instance '" + pending.object + "'", pending.line);
      utterance.facts.push_back(Fact{*subject, *relation, *object});
    }

    discourse_.utterances.push_back(std::move(utterance));
    pending_markables_.clear();
    pending_anaphors_.clear();
    pending_facts_.clear();
    in_utterance_ = false;
  }

  KnowledgeBase& kb_;
  Discourse discourse_;
  bool in_utterance_ = false;
  int current_index_ = 0;
  std::vector<PendingMarkable> pending_markables_;
  std::vector<PendingAnaphor> pending_anaphors_;
  std::vector<PendingFact> pending_facts_;
  std::set<std::string> known_ids_;
  std::unordered_map<std::string, InstanceId> markable_referents_;
};

}  // namespace

Discourse load_discourse(std::istream& in, KnowledgeBase& kb) {
  return DiscourseParser(kb).parse(in);
}

Discourse load_discourse_string(const std::string& text, KnowledgeBase& kb) {
  std::istringstream stream(text);
  return load_discourse(stream, kb);
}

Discourse load_discourse_file(const std::string& path, KnowledgeBase& kb) {
  std::ifstream stream(path);
  if (!stream) throw KbError("cannot open '" + path + "'");
  return load_discourse(stream, kb);
}

}  // namespace bridge
