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


#include <doctest.h>

#include <algorithm>

#include "mgraph/common.hpp"
#include "mgraph/wordnet.hpp"
#include "support/fixtures.hpp"

using namespace mgraph;
using namespace mgraph::testing;

namespace {

using Words = std::vector<std::string>;

bool has(const Words& w, const std::string& x) { return std::find(w.begin(), w.end(), x) != w.end(); }

}  // namespace

TEST_SUITE("wordnet") {

TEST_CASE("index and data files load with matching offsets") {
  auto verbs = WordNetPos::load(wordnet_dir(), WordPos::Verb);
  const auto& senses = verbs.senses("hurt");
  REQUIRE(senses.size() == 2);
  const Synset* first = verbs.synset(senses[0]);
  REQUIRE(first);
  CHECK(first->offset == senses[0]);
  CHECK(has(first->words, "injure"));
  CHECK(first->narrower.size() == 2);
  CHECK(verbs.senses("fly").empty());
  CHECK(verbs.synset(12345) == nullptr);
}

TEST_CASE("troponyms use the first sense unless told otherwise") {
  auto lex = LexicalResource::load(wordnet_dir());
  auto first = lex.verb_troponyms("hurt");
  CHECK(has(first, "burn"));
  CHECK(has(first, "wound"));
  CHECK_FALSE(has(first, "throb"));
  auto all = LexicalResource::load(wordnet_dir(), false).verb_troponyms("hurt");
  CHECK(has(all, "throb"));
}

TEST_CASE("verb substitutes keep particles") {
  auto lex = LexicalResource::load(wordnet_dir());
  std::string relation;
  auto subs = lex.substitutes("receive.from", &relation);
  CHECK(relation == "troponym");
  CHECK(has(subs, "inherit.from"));
  CHECK(has(subs, "accept.from"));
  CHECK(has(lex.substitutes("kill"), "murder"));
  CHECK(has(lex.substitutes("hurt"), "burn"));
}

TEST_CASE("copular substitutes use noun hyponyms") {
  auto lex = LexicalResource::load(wordnet_dir());
  std::string relation;
  auto subs = lex.substitutes("be.winner", &relation);
  CHECK(relation == "hyponym");
  CHECK(has(subs, "be.champion"));
  CHECK(has(subs, "be.champ"));
  CHECK(has(lex.substitutes("be.tennis.player"), "be.seed"));
  CHECK(has(lex.substitutes("be.author.of"), "be.novelist.of"));
  CHECK(has(lex.substitutes("be.famous.leader"), "be.famous.president"));
}

TEST_CASE("negated or unknown lemmas have no substitutes") {
  auto lex = LexicalResource::load(wordnet_dir());
  CHECK(lex.substitutes("not.kill").empty());
  CHECK(lex.substitutes("levitate").empty());
  CHECK(lex.substitutes("be.unicorn").empty());
}

TEST_CASE("broken databases are data errors") {
  TempDir dir("wordnet");
  for (const char* f : {"index.noun", "data.noun", "index.verb", "data.verb"}) {
    std::filesystem::copy_file(wordnet_dir() / f, dir.path() / f);
  }
  CHECK_NOTHROW(LexicalResource::load(dir.path()));

  std::string data = read_file(dir.path() / "data.verb");
  // Shift every record by one byte so offsets no longer match.
  write_file(dir.path() / "data.verb", " " + data);
  CHECK_THROWS_AS(LexicalResource::load(dir.path()), DataError);

  write_file(dir.path() / "data.verb", data);
  write_file(dir.path() / "index.verb", "kill v 1 0 1 0 99999999  \n");
  CHECK_THROWS_AS(LexicalResource::load(dir.path()), DataError);

  std::filesystem::remove(dir.path() / "index.verb");
  CHECK_THROWS_AS(LexicalResource::load(dir.path()), DataError);
}

}
