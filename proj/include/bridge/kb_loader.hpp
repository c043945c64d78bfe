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

#ifndef BRIDGE_KB_LOADER_HPP_
#define BRIDGE_KB_LOADER_HPP_

#include <iosfwd>
#include <string>

#include "bridge/kb.hpp"

namespace bridge {

// Loads a knowledge base from the line-oriented text format:
//
//   concept <NAME> [isa <NAME> [<NAME> ...]]
//   relation <name> [isa <name> ...] domain <NAME> range <NAME> inverse <name>
//   instance <id> : <NAME>
//   fact <id> <relation> <id>
//   metonymy-relation <name> [inverse <name>]
//   pof-relation <name>
//
// '#' starts a comment. Declarations are order-independent (two-pass load).
// Relations named only as an inverse are declared automatically with
// mirrored domain/range and mirrored parents. Throws KbError with the
// offending line number on any syntax or validation problem.
KnowledgeBase load_kb(std::istream& in);
KnowledgeBase load_kb_string(const std::string& text);
KnowledgeBase load_kb_file(const std::string& path);

// Serializes a knowledge base back into the text format; the result reloads
// to an equivalent knowledge base.
std::string dump_kb(const KnowledgeBase& kb);

}  // namespace bridge

#endif  // BRIDGE_KB_LOADER_HPP_
