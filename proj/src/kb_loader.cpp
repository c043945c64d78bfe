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

#include "bridge/kb_loader.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace bridge {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string stripped = line.substr(0, line.find('#'));
  std::istringstream stream(stripped);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

struct InstanceLine {
  std::string id, concept_name;
  int line;
};
struct FactLine {
  std::string subject, relation, object;
  int line;
};
struct MetonymyLine {
  std::string relation, inverse;  // inverse may be empty (taken from schema)
  int line;
};
struct PofLine {
  std::string relation;
  int line;
};

}  // namespace

KnowledgeBase load_kb(std::istream& in) {
  KnowledgeBase kb;
  std::vector<InstanceLine> instances;
  std::vector<FactLine> facts;
  std::vector<MetonymyLine> metonymy;
  std::vector<PofLine> pof;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];

    if (head == "concept") {
      if (tokens.size() < 2) throw KbError("concept declaration needs a name", line_no);
      kb.schema.declare_concept(tokens[1], line_no);
      if (tokens.size() > 2) {
        if (tokens[2] != "isa")
          throw KbError("expected 'isa' after concept name, got '" + tokens[2] + "'", line_no);
        if (tokens.size() < 4) throw KbError("'isa' needs at least one parent", line_no);
        for (std::size_t i = 3; i < tokens.size(); ++i)
          kb.schema.add_concept_parent(tokens[1], tokens[i], line_no);
      }
    } else if (head == "relation") {
      if (tokens.size() < 2) throw KbError("relation declaration needs a name", line_no);
      std::string name = tokens[1];
      std::vector<std::string> parents;
      std::string domain, range, inverse;
      std::size_t i = 2;
      if (i < tokens.size() && tokens[i] == "isa") {
        ++i;
        while (i < tokens.size() && tokens[i] != "domain" && tokens[i] != "range" &&
               tokens[i] != "inverse")
          parents.push_back(tokens[i++]);
        if (parents.empty()) throw KbError("'isa' needs at least one parent", line_no);
      }
      while (i < tokens.size()) {
        const std::string& key = tokens[i];
        if (i + 1 >= tokens.size())
          throw KbError("'" + key + "' needs an argument", line_no);
        const std::string& value = tokens[i + 1];
        if (key == "domain")
          domain = value;
        else if (key == "range")
          range = value;
        else if (key == "inverse")
          inverse = value;
        else
          throw KbError("unexpected token '" + key + "' in relation declaration", line_no);
        i += 2;
      }
      if (domain.empty()) throw KbError("relation '" + name + "' lacks a domain", line_no);
      if (range.empty()) throw KbError("relation '" + name + "' lacks a range", line_no);
      if (inverse.empty()) throw KbError("relation '" + name + "' lacks an inverse", line_no);
      kb.schema.declare_relation(name, domain, range, inverse, parents, line_no);
    } else if (head == "instance") {
      if (tokens.size() != 4 || tokens[2] != ":")
        throw KbError("expected 'instance <id> : <CONCEPT>'", line_no);
      instances.push_back(InstanceLine{tokens[1], tokens[3], line_no});
    } else if (head == "fact") {
      if (tokens.size() != 4)
        throw KbError("expected 'fact <id> <relation> <id>'", line_no);
      facts.push_back(FactLine{tokens[1], tokens[2], tokens[3], line_no});
    } else if (head == "metonymy-relation") {
      if (tokens.size() == 2)
        metonymy.push_back(MetonymyLine{tokens[1], "", line_no});
      else if (tokens.size() == 4 && tokens[2] == "inverse")
        metonymy.push_back(MetonymyLine{tokens[1], tokens[3], line_no});
      else
        throw KbError("expected 'metonymy-relation <name> [inverse <name>]'", line_no);
    } else if (head == "pof-relation") {
      if (tokens.size() != 2) throw KbError("expected 'pof-relation <name>'", line_no);
      pof.push_back(PofLine{tokens[1], line_no});
    } else {
      throw KbError("unknown declaration '" + head + "'", line_no);
    }
  }

  kb.schema.synthesize_missing_inverses();
  kb.schema.finalize();

  for (const auto& decl : instances) {
    auto type = kb.schema.find_concept(decl.concept_name);
    if (!type)
      throw KbError("instance '" + decl.id + "': unknown concept '" + decl.concept_name + "'",
                    decl.line);
    kb.text.add_instance(decl.id, *type, decl.line);
  }
  for (const auto& decl : facts) {
    auto relation = kb.schema.find_relation(decl.relation);
    if (!relation) throw KbError("unknown relation '" + decl.relation + "'", decl.line);
    auto subject = kb.text.find_instance(decl.subject);
    if (!subject) throw KbError("unknown instance '" + decl.subject + "'", decl.line);
    auto object = kb.text.find_instance(decl.object);
    if (!object) throw KbError("unknown instance '" + decl.object + "'", decl.line);
    try {
      kb.text.assert_fact(kb.schema, *subject, *relation, *object);
    } catch (const KbError& error) {
      throw KbError(error.what(), decl.line);
    }
  }
  for (const auto& decl : metonymy) {
    auto relation = kb.schema.find_relation(decl.relation);
    if (!relation) throw KbError("unknown relation '" + decl.relation + "'", decl.line);
    std::string inverse = decl.inverse;
    if (inverse.empty()) {
      inverse = kb.schema.name(kb.schema.inverse(*relation));
    } else if (!kb.schema.find_relation(inverse)) {
      throw KbError("unknown relation '" + inverse + "'", decl.line);
    }
    kb.metonymy_extensions.emplace_back(decl.relation, inverse);
  }
  for (const auto& decl : pof) {
    if (!kb.schema.find_relation(decl.relation))
      throw KbError("unknown relation '" + decl.relation + "'", decl.line);
    kb.pof_extensions.push_back(decl.relation);
  }
  return kb;
}

KnowledgeBase load_kb_string(const std::string& text) {
  std::istringstream stream(text);
  return load_kb(stream);
}

KnowledgeBase load_kb_file(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) throw KbError("cannot open '" + path + "'");
  return load_kb(stream);
}

std::string dump_kb(const KnowledgeBase& kb) {
  std::ostringstream out;
  const Schema& schema = kb.schema;
  for (ConceptId c : schema.all_concepts()) {
    out << "concept " << schema.name(c);
    if (!schema.parents(c).empty()) {
      out << " isa";
      for (ConceptId parent : schema.parents(c)) out << ' ' << schema.name(parent);
    }
    out << '\n';
  }
  for (RelationId r : schema.all_relations()) {
    out << "relation " << schema.name(r);
    if (!schema.parents(r).empty()) {
      out << " isa";
      for (RelationId parent : schema.parents(r)) out << ' ' << schema.name(parent);
    }
    out << " domain " << schema.name(schema.domain(r)) << " range "
        << schema.name(schema.range(r)) << " inverse " << schema.name(schema.inverse(r))
        << '\n';
  }
  for (std::size_t i = 0; i < kb.text.instance_count(); ++i) {
    InstanceId inst{static_cast<std::uint32_t>(i)};
    out << "instance " << kb.text.id_of(inst) << " : " << schema.name(kb.text.type_of(inst))
        << '\n';
  }
  for (const Fact& fact : kb.text.facts())
    out << "fact " << kb.text.id_of(fact.subject) << ' ' << schema.name(fact.relation) << ' '
        << kb.text.id_of(fact.object) << '\n';
  for (const auto& [relation, inverse] : kb.metonymy_extensions)
    out << "metonymy-relation " << relation << " inverse " << inverse << '\n';
  for (const auto& relation : kb.pof_extensions) out << "pof-relation " << relation << '\n';
  return out.str();
}

}  // namespace bridge
