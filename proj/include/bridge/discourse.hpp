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

#ifndef BRIDGE_DISCOURSE_HPP_
#define BRIDGE_DISCOURSE_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "bridge/centering.hpp"
#include "bridge/kb.hpp"

namespace bridge {

struct Discourse {
  std::vector<Utterance> utterances;
};

// Loads an annotated discourse:
//
//   utterance <n>
//   markable <id> surface="<text>" lemma=<lemma> class=<WordClass> [definite]
//            [head=<id>] referent=<instance-or-concept> pos=<k>
//   anaphor <id> resolves-to <instance-or-markable-id>
//   fact <subject> <relation> <object>
//
// '#' starts a comment. A concept-valued referent introduces a fresh
// anonymous discourse entity of that concept; fact and anaphor lines may
// name such an entity through the markable id that introduced it. Anaphor
// lines retarget their markable's referent to the given antecedent
// (pre-resolved nominal/pronominal anaphora). Utterance facts are recorded
// here and asserted into the text KB when the utterance is processed.
//
// Instances are created in the KB as a side effect. Throws KbError with a
// line number on syntax errors, unknown ids, or type mismatches.
Discourse load_discourse(std::istream& in, KnowledgeBase& kb);
Discourse load_discourse_string(const std::string& text, KnowledgeBase& kb);
Discourse load_discourse_file(const std::string& path, KnowledgeBase& kb);

}  // namespace bridge

#endif  // BRIDGE_DISCOURSE_HPP_
