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


// Reader for WordNet database files (index.noun, data.noun, index.verb,
// data.verb) and the lexical substitutions used to mint negative questions.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mgraph {

enum class WordPos { Noun, Verb };

struct Synset {
  std::uint64_t offset = 0;
  std::vector<std::string> words;
  // Hyponym (noun) or troponym (verb) synset offsets, in file order.
  std::vector<std::uint64_t> narrower;
};

// One part of speech: lemma -> sense offsets, offset -> synset.
class WordNetPos {
 public:
  // Reads index.<pos> and data.<pos>. Throws DataError on malformed records
  // or offsets that do not point at a record.
  static WordNetPos load(const std::filesystem::path& dir, WordPos pos);

  // Sense offsets in index order; empty when the lemma is unknown.
  const std::vector<std::uint64_t>& senses(std::string_view lemma) const;
  const Synset* synset(std::uint64_t offset) const;

  WordNetPos() = default;

 private:
  std::map<std::string, std::vector<std::uint64_t>, std::less<>> index_;
  std::map<std::uint64_t, Synset> synsets_;
};

class LexicalResource {
 public:
  // `dir` holds the four database files.
  static LexicalResource load(const std::filesystem::path& dir, bool first_sense = true);

  LexicalResource(WordNetPos nouns, WordNetPos verbs, bool first_sense);

  // Words (WordNet form, '_' separated) one level below the lemma.
  std::vector<std::string> noun_hyponyms(std::string_view lemma) const;
  std::vector<std::string> verb_troponyms(std::string_view lemma) const;

  // Substitute predicate lemmas for a dotted predicate lemma. Copular
  // lemmas (be.X) take noun hyponyms of X; other lemmas take troponyms of
  // the whole lemma as a collocation if WordNet lists it, else troponyms of
  // the head verb with the remaining tokens kept ("receive.from" ->
  // "inherit.from"). Negated lemmas get none.
  std::vector<std::string> substitutes(std::string_view predicate_lemma,
                                       std::string* relation = nullptr) const;

  bool first_sense() const { return first_sense_; }

 private:
  std::vector<std::string> narrower(const WordNetPos& pos, std::string_view lemma) const;

  WordNetPos nouns_;
  WordNetPos verbs_;
  bool first_sense_ = true;
};

}  // namespace mgraph
