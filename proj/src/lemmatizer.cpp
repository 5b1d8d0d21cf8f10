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

#include "mgraph/lemmatizer.hpp"

#include <cctype>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <fmt/format.h>

#include "mgraph/common.hpp"

namespace mgraph {

namespace {

const std::unordered_map<std::string_view, std::string_view>& irregular_forms() {
  static const std::unordered_map<std::string_view, std::string_view> table = {
      {"am", "be"},        {"is", "be"},         {"are", "be"},       {"was", "be"},
      {"were", "be"},      {"been", "be"},       {"being", "be"},     {"has", "have"},
      {"had", "have"},     {"having", "have"},   {"did", "do"},       {"does", "do"},
      {"done", "do"},      {"doing", "do"},      {"sang", "sing"},    {"sung", "sing"},
      {"won", "win"},      {"bought", "buy"},    {"sold", "sell"},    {"wrote", "write"},
      {"written", "write"}, {"went", "go"},      {"gone", "go"},      {"goes", "go"},
      {"made", "make"},    {"took", "take"},     {"taken", "take"},   {"gave", "give"},
      {"given", "give"},   {"got", "get"},       {"gotten", "get"},   {"came", "come"},
      {"saw", "see"},      {"seen", "see"},      {"said", "say"},     {"told", "tell"},
      {"began", "begin"},  {"begun", "begin"},   {"beaten", "beat"},  {"lost", "lose"},
      {"left", "leave"},   {"met", "meet"},      {"led", "lead"},     {"held", "hold"},
      {"ran", "run"},      {"paid", "pay"},      {"sent", "send"},    {"built", "build"},
      {"brought", "bring"}, {"thought", "think"}, {"found", "find"},  {"became", "become"},
      {"knew", "know"},    {"known", "know"},    {"fell", "fall"},    {"fallen", "fall"},
      {"flew", "fly"},     {"flown", "fly"},     {"flies", "fly"},    {"drew", "draw"},
      {"drawn", "draw"},   {"spent", "spend"},   {"struck", "strike"}, {"fought", "fight"},
      {"chose", "choose"}, {"chosen", "choose"}, {"rose", "rise"},    {"risen", "rise"},
      {"shot", "shoot"},   {"stole", "steal"},   {"stolen", "steal"}, {"sat", "sit"},
      {"stood", "stand"},  {"spoke", "speak"},   {"spoken", "speak"}, {"threw", "throw"},
      {"thrown", "throw"}, {"wore", "wear"},     {"died", "die"},     {"dies", "die"},
      {"dying", "die"},    {"lied", "lie"},      {"lies", "lie"},     {"tied", "tie"},
      {"ties", "tie"},     {"hit", "hit"},       {"hurt", "hurt"},    {"put", "put"},
      {"set", "set"},      {"cut", "cut"},       {"let", "let"},      {"quit", "quit"},
      {"news", "news"},    {"series", "series"}, {"species", "species"},
  };
  return table;
}

// Base forms ending in 'e'; used to restore the 'e' after stripping -ed/-ing.
const std::unordered_set<std::string_view>& e_final_verbs() {
  static const std::unordered_set<std::string_view> verbs = {
      "achieve", "acquire", "announce", "argue",   "arrive",   "believe", "capture",
      "charge",  "close",   "continue", "create",  "decline",  "decrease", "describe",
      "die",     "divorce", "elope",    "engage",  "escape",   "execute", "fire",
      "hate",    "hire",    "improve",  "include", "increase", "injure",  "invade",
      "involve", "like",    "live",     "lose",    "love",     "manage",  "marry",
      "merge",   "move",    "name",     "note",    "oppose",   "praise",  "produce",
      "promote", "provide", "purchase", "raise",   "receive",  "release", "replace",
      "require", "resign",  "retire",   "rule",    "save",     "score",   "serve",
      "share",   "shave",   "smile",    "strangle", "suppose", "survive", "use",
      "vote",    "welcome", "arrange",  "place",   "force",    "face",    "stage",
  };
  return verbs;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string restore_stem(std::string stem) {
  std::string with_e = stem + "e";
  if (e_final_verbs().count(with_e)) return with_e;
  // Endings English never leaves bare: criticiz(e), denounc(e), solv(e).
  for (std::string_view tail : {"iz", "nc", "rc", "uc", "v", "dg", "rg"}) {
    if (ends_with(stem, tail)) return with_e;
  }
  auto n = stem.size();
  if (n >= 3 && stem[n - 1] == stem[n - 2] && !is_vowel(stem[n - 1])) {
    char c = stem[n - 1];
    if (c != 'l' && c != 's' && c != 'f' && c != 'z' && c != 'd') stem.pop_back();
  }
  return stem;
}

bool is_negation(std::string_view t) { return t == "not" || t == "n't" || t == "never"; }
bool is_article(std::string_view t) { return t == "a" || t == "an" || t == "the"; }
bool is_be(std::string_view t) {
  return t == "am" || t == "is" || t == "are" || t == "was" || t == "were" || t == "be" ||
         t == "been" || t == "being";
}
bool is_have(std::string_view t) {
  return t == "has" || t == "have" || t == "had" || t == "having";
}
bool is_do(std::string_view t) { return t == "do" || t == "does" || t == "did"; }
bool is_modal(std::string_view t) {
  return t == "will" || t == "would" || t == "shall" || t == "should" || t == "can" ||
         t == "could" || t == "may" || t == "might" || t == "must";
}

bool looks_like_participle(std::string_view t) {
  if (ends_with(t, "ed") || ends_with(t, "en")) return true;
  auto it = irregular_forms().find(t);
  return it != irregular_forms().end() && it->first != it->second && !is_be(t);
}

std::vector<std::string> tokenize(std::string_view raw) {
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    // "didn't" -> "did", "not"
    if (ends_with(cur, "n't") && cur.size() > 3) {
      std::string head = cur.substr(0, cur.size() - 3);
      if (head == "ca") head = "can";
      if (head == "wo") head = "will";
      tokens.push_back(head);
      tokens.push_back("not");
    } else {
      tokens.push_back(cur);
    }
    cur.clear();
  };
  for (unsigned char c : raw) {
    if (std::isalnum(c) || c == '-' || c == '\'') {
      cur.push_back(static_cast<char>(std::tolower(c)));
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

std::vector<std::string> normalize_tokens(const std::vector<std::string>& tokens,
                                          Voice voice) {
  std::vector<std::string> out;
  auto next_content = [&](std::size_t i) -> std::string_view {
    for (std::size_t k = i + 1; k < tokens.size(); ++k) {
      if (!is_negation(tokens[k]) && !is_article(tokens[k])) return tokens[k];
    }
    return {};
  };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& t = tokens[i];
    if (is_article(t)) continue;
    if (is_negation(t)) {
      out.push_back("not");
      continue;
    }
    std::string_view next = next_content(i);
    if (is_modal(t) && !next.empty()) continue;
    if (is_do(t) && !next.empty()) continue;
    if (is_have(t) && !next.empty() && looks_like_participle(next)) continue;
    if (is_be(t)) {
      bool auxiliary = voice == Voice::Passive || ends_with(next, "ing");
      if (voice == Voice::Copular && !ends_with(next, "ing")) auxiliary = false;
      if (auxiliary && !next.empty()) continue;
    }
    if (t == "'s" || t == "'") continue;
    out.push_back(lemmatize_word(t));
  }
  if (voice == Voice::Passive && !out.empty() && out.back() == "by") out.pop_back();
  return out;
}

}  // namespace

std::optional<Voice> parse_voice(std::string_view text) {
  if (text == "active") return Voice::Active;
  if (text == "passive") return Voice::Passive;
  if (text == "copular") return Voice::Copular;
  if (text == "normalized") return Voice::Normalized;
  return std::nullopt;
}

std::string_view to_string(Voice voice) {
  switch (voice) {
    case Voice::Active: return "active";
    case Voice::Passive: return "passive";
    case Voice::Copular: return "copular";
    case Voice::Normalized: return "normalized";
  }
  return "?";
}

std::string lemmatize_word(std::string_view word) {
  std::string w(word);
  if (auto it = irregular_forms().find(w); it != irregular_forms().end()) {
    return std::string(it->second);
  }
  const auto n = w.size();
  if (n > 4 && ends_with(w, "ies")) return w.substr(0, n - 3) + "y";
  if (n > 4 && ends_with(w, "ied")) return w.substr(0, n - 3) + "y";
  if (n > 5 && ends_with(w, "ing")) return restore_stem(w.substr(0, n - 3));
  if (n > 4 && ends_with(w, "ed")) return restore_stem(w.substr(0, n - 2));
  if (n > 4 && ends_with(w, "es")) {
    std::string stem = w.substr(0, n - 2);
    if (ends_with(stem, "s") || ends_with(stem, "x") || ends_with(stem, "z") ||
        ends_with(stem, "ch") || ends_with(stem, "sh")) {
      return stem;
    }
  }
  if (n > 3 && w.back() == 's' && w[n - 2] != 's' && w[n - 2] != 'u' && w[n - 2] != 'i') {
    return w.substr(0, n - 1);
  }
  return w;
}

NormalizedLemma normalize_predicate(std::string_view raw, Voice voice,
                                    std::span<const std::string> modifiers) {
  NormalizedLemma result;
  std::vector<std::string> parts;
  for (const auto& modifier : modifiers) {
    for (auto& t : normalize_tokens(tokenize(modifier), Voice::Active)) parts.push_back(t);
  }
  if (voice == Voice::Normalized) {
    // Already-normalized lemmas pass through; only case and spacing change.
    for (const auto& piece : split(normalize_surface(raw), '.')) {
      for (const auto& t : split(piece, ' ')) {
        if (!t.empty()) parts.push_back(t);
      }
    }
  } else {
    for (auto& t : normalize_tokens(tokenize(raw), voice)) parts.push_back(t);
    result.swap_roles = voice == Voice::Passive;
  }
  // Collapse a doubled negation prefix ("not" modifier on "did not attend").
  std::vector<std::string> cleaned;
  for (auto& p : parts) {
    if (p == "not" && !cleaned.empty() && cleaned.back() == "not") continue;
    cleaned.push_back(std::move(p));
  }
  if (cleaned.empty()) {
    throw DataError(fmt::format("predicate '{}' is empty after normalization", raw));
  }
  result.lemma = join(cleaned, ".");
  return result;
}

}  // namespace mgraph
