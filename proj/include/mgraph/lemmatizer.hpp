// Copyright 2026 The mgraph Authors.
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

// Predicate lemma normalization for extracted relation strings.
//
// Upstream extractors hand us surface predicate strings such as "was killed"
// or "is an author". Normalization lowercases, strips articles and tense /
// aspect / modal auxiliaries, lemmatizes each remaining token and joins the
// tokens with '.'. Negation and control verbs stay in the lemma as prefixes
// ("did not attend" -> not.attend, "planned to attend" -> plan.to.attend).
// Passive predicates map to their active form; the caller swaps the first two
// argument roles. Particles remain attached ("received from" -> receive.from).

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace mgraph {

enum class Voice { Active, Passive, Copular, Normalized };

std::optional<Voice> parse_voice(std::string_view text);
std::string_view to_string(Voice voice);

struct NormalizedLemma {
  std::string lemma;
  // Passive input: roles 1 and 2 swap when mapping to the active form.
  bool swap_roles = false;
};

// Throws DataError when nothing remains after stripping.
NormalizedLemma normalize_predicate(std::string_view raw, Voice voice,
                                    std::span<const std::string> modifiers = {});

// Single-word lemmatizer: irregular table, then suffix rules.
std::string lemmatize_word(std::string_view word);

}  // namespace mgraph
