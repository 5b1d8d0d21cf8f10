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

#include <map>
#include <set>
#include <sstream>

#include "mgraph/common.hpp"
#include "mgraph/qa_gen.hpp"
#include "mgraph/random.hpp"
#include "mgraph/wordnet.hpp"
#include "support/fixtures.hpp"

using namespace mgraph;
using namespace mgraph::testing;

namespace {

const Arg kStar{"star", "person"};

// One window: `star` visits six times; other people visit once each so that
// visit.1 passes the corpus minimum.
std::vector<RawRecord> star_window(const std::string& day) {
  std::vector<RawRecord> r;
  for (int i = 0; i < 6; ++i) r.push_back(unary("visit", 1, kStar, day));
  for (int i = 0; i < 5; ++i) r.push_back(unary("visit", 1, {"p" + std::to_string(i), "person"}, day));
  return r;
}

Question question(const std::string& key, std::vector<std::string> args, Polarity pol) {
  Question q;
  q.predicate = TypedPredicate::parse_key(key);
  q.args = std::move(args);
  q.polarity = pol;
  return q;
}

std::map<std::pair<bool, Polarity>, std::size_t> quadrants(const std::vector<Question>& qs) {
  std::map<std::pair<bool, Polarity>, std::size_t> out;
  for (const auto& q : qs) ++out[{q.is_unary(), q.polarity}];
  return out;
}

}  // namespace

TEST_SUITE("qa_gen") {

TEST_CASE("partitions are anchored windows and skip empty ones") {
  auto c = build_corpus({unary("visit", 1, kStar, "2024-01-01"), unary("visit", 1, kStar, "2024-01-03"),
                         unary("visit", 1, kStar, "2024-01-04"), unary("visit", 1, kStar, "2024-01-12"),
                         unary("visit", 1, kStar, "")});
  auto ps = partition(c, 3);
  CHECK(ps.undated == 1);
  REQUIRE(ps.partitions.size() == 3);
  CHECK(ps.partitions[0].start.to_string() == "2024-01-01");
  CHECK(ps.partitions[0].end.to_string() == "2024-01-03");
  CHECK(ps.partitions[0].propositions == std::vector<std::size_t>{0, 1});
  CHECK(ps.partitions[1].propositions == std::vector<std::size_t>{2});
  CHECK(ps.partitions[2].id == 2);
  CHECK(ps.partitions[2].start.to_string() == "2024-01-10");
  CHECK_THROWS_AS(partition(c, 0), UsageError);
  CHECK(partition(Corpus{}, 3).partitions.empty());
}

TEST_CASE("positives need a frequent entity and a frequent predicate") {
  auto records = star_window("2024-01-01");
  records.push_back(unary("hurt", 2, kStar, "2024-01-01"));  // hurt.2 is rare
  auto c = build_corpus(records);
  auto part = partition(c, 3).partitions.at(0);
  QaGenConfig cfg;
  cfg.predicate_min = 11;
  Rng rng(1);
  auto sel = select_positives(part, c, cfg, rng);
  // Six identical visit(star) propositions collapse to one candidate.
  CHECK(sel.candidates == 1);
  REQUIRE(sel.questions.size() == 1);
  CHECK(sel.questions[0].predicate.key() == "visit.1#person");
  CHECK(sel.questions[0].args == std::vector<std::string>{"s:star"});
  CHECK(sel.questions[0].source_proposition == 0);
  CHECK(sel.shortfall);
  // Only the sampled proposition is withheld.
  CHECK(sel.evidence.size() == part.propositions.size() - 1);

  cfg.entity_min = 8;
  Rng rng2(1);
  CHECK(select_positives(part, c, cfg, rng2).candidates == 0);
}

TEST_CASE("binary positives need a frequent argument pair") {
  std::vector<RawRecord> r;
  for (int i = 0; i < 4; ++i) r.push_back(binary("defeat", {"a", "person"}, {"b", "person"}, "2024-01-01"));
  for (int i = 0; i < 2; ++i) r.push_back(binary("defeat", {"b", "person"}, {"a", "person"}, "2024-01-02"));
  for (int i = 0; i < 5; ++i) r.push_back(binary("defeat", {"a", "person"}, {"c" + std::to_string(i), "person"}, "2024-01-02"));
  auto c = build_corpus(r);
  auto part = partition(c, 3).partitions.at(0);
  QaGenConfig cfg;
  Rng rng(3);
  auto sel = select_positives(part, c, cfg, rng);
  // (a, b) and (b, a) count toward the same unordered pair; a's other
  // opponents never reach six.
  CHECK(sel.candidates == 2);
}

TEST_CASE("negated propositions never become positives") {
  std::vector<RawRecord> r;
  for (int i = 0; i < 11; ++i) r.push_back(unary("not.visit", 1, kStar, "2024-01-01"));
  auto c = build_corpus(r);
  QaGenConfig cfg;
  Rng rng(1);
  CHECK(select_positives(partition(c, 3).partitions.at(0), c, cfg, rng).candidates == 0);
}

TEST_CASE("negatives are screened against the partition and the corpus") {
  auto lex = LexicalResource::load(wordnet_dir());
  auto records = star_window("2024-01-01");
  records.push_back(unary("tour", 1, {"elsewhere", "person"}, "2024-02-01"));
  auto c = build_corpus(records);
  auto parts = partition(c, 3);
  const auto& part = parts.partitions.at(0);
  auto pos = question("visit.1#person", {"s:star"}, Polarity::Positive);
  NegativeStats stats;
  auto negs = generate_negatives({pos}, lex, part, c, &stats);
  // tour.1 occurs in the corpus; inspect.1 never does.
  REQUIRE(negs.size() == 1);
  CHECK(negs[0].predicate.key() == "tour.1#person");
  CHECK(negs[0].relation == "troponym");
  CHECK(negs[0].polarity == Polarity::Negative);
  CHECK(stats.candidates == 2);
  CHECK(stats.screened_absent_from_corpus == 1);

  // Once the star tours inside the window, that negative is screened out.
  records.push_back(unary("tour", 1, kStar, "2024-01-02"));
  auto c2 = build_corpus(records);
  NegativeStats stats2;
  CHECK(generate_negatives({pos}, lex, partition(c2, 3).partitions.at(0), c2, &stats2).empty());
  CHECK(stats2.screened_in_partition == 1);
  CHECK(stats2.partition_screen_rate() == 0.5);
}

TEST_CASE("balancing equalizes quadrants and keeps order") {
  std::vector<Question> pool;
  for (int i = 0; i < 5; ++i) pool.push_back(question("visit.1#person", {"s:u" + std::to_string(i)}, Polarity::Positive));
  for (int i = 0; i < 3; ++i) pool.push_back(question("tour.1#person", {"s:u" + std::to_string(i)}, Polarity::Negative));
  for (int i = 0; i < 4; ++i) pool.push_back(question("buy#person#person", {"s:a", "s:b" + std::to_string(i)}, Polarity::Positive));
  for (int i = 0; i < 7; ++i) pool.push_back(question("bribe#person#person", {"s:a", "s:b" + std::to_string(i)}, Polarity::Negative));
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i].source_proposition = i;
  Rng rng(4);
  BalanceReport report;
  auto out = balance(pool, rng, &report);
  CHECK(report.per_quadrant == 3);
  for (const auto& [quad, n] : quadrants(out)) CHECK(n == 3);
  CHECK(out.size() == 12);
  for (std::size_t i = 1; i < out.size(); ++i) {
    CHECK(out[i - 1].source_proposition < out[i].source_proposition);
  }
}

TEST_CASE("a valency with an empty quadrant is dropped") {
  std::vector<Question> pool;
  for (int i = 0; i < 2; ++i) pool.push_back(question("visit.1#person", {"s:u" + std::to_string(i)}, Polarity::Positive));
  for (int i = 0; i < 4; ++i) pool.push_back(question("buy#person#person", {"s:a", "s:b" + std::to_string(i)}, Polarity::Positive));
  for (int i = 0; i < 3; ++i) pool.push_back(question("bribe#person#person", {"s:a", "s:b" + std::to_string(i)}, Polarity::Negative));
  Rng rng(4);
  BalanceReport report;
  auto out = balance(pool, rng, &report);
  CHECK(report.unary_dropped);
  CHECK_FALSE(report.binary_dropped);
  CHECK(out.size() == 6);
  for (const auto& q : out) CHECK_FALSE(q.is_unary());
}

TEST_CASE("generated question sets satisfy the contract and are reproducible") {
  auto lex = LexicalResource::load(wordnet_dir());
  Corpus c = synthetic_news(8, 3000, 30);
  QaGenConfig cfg;
  cfg.predicate_min = 11;
  cfg.positives_per_partition = 20;
  auto qs = generate_questions(c, lex, cfg);
  REQUIRE_FALSE(qs.questions.empty());

  std::map<int, const Partition*> parts;
  for (const auto& p : qs.partitions.partitions) {
    parts[p.id] = &p;
    CHECK((p.end.day_number() - p.start.day_number()) < cfg.window_days);
  }
  std::uint64_t expected_id = 1;
  for (const auto& q : qs.questions) {
    CHECK(q.id == expected_id++);
    if (q.polarity == Polarity::Positive) continue;
    auto ref = c.find_predicate(q.predicate);
    REQUIRE(ref);
    CHECK(c.predicate_occurrences(*ref) >= 1);
    for (auto id : parts.at(q.partition_id)->propositions) {
      const auto& p = c.proposition(id);
      CHECK_FALSE((p.predicate == *ref && c.arg_keys(p) == q.args));
    }
  }
  auto quads = quadrants(qs.questions);
  for (const auto& [quad, n] : quads) CHECK(n == qs.balance.per_quadrant);

  std::stringstream a, b;
  write_questions(qs.questions, a);
  write_questions(generate_questions(c, lex, cfg).questions, b);
  CHECK(a.str() == b.str());
  cfg.seed = 2;
  std::stringstream other;
  write_questions(generate_questions(c, lex, cfg).questions, other);
  CHECK(other.str() != a.str());
}

TEST_CASE("question and partition files round-trip") {
  auto lex = LexicalResource::load(wordnet_dir());
  Corpus c = synthetic_news(9, 1500, 12);
  QaGenConfig cfg;
  cfg.predicate_min = 5;
  auto qs = generate_questions(c, lex, cfg);

  std::stringstream qbuf;
  write_questions(qs.questions, qbuf, R"({"manifest":{"stage":"gen-questions","format_version":1}})");
  auto back = read_questions(qbuf);
  REQUIRE(back.size() == qs.questions.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].id == qs.questions[i].id);
    CHECK(back[i].predicate == qs.questions[i].predicate);
    CHECK(back[i].args == qs.questions[i].args);
    CHECK(back[i].polarity == qs.questions[i].polarity);
    CHECK(back[i].text == qs.questions[i].text);
  }

  std::stringstream pbuf;
  write_partitions(qs.partitions, pbuf);
  auto parts = read_partitions(pbuf);
  REQUIRE(parts.partitions.size() == qs.partitions.partitions.size());
  CHECK(parts.partitions[0].evidence == qs.partitions.partitions[0].evidence);
  CHECK(parts.partitions[0].start == qs.partitions.partitions[0].start);

  std::stringstream bad(R"({"manifest":{"stage":"gen-questions","format_version":5}})" "\n");
  CHECK_THROWS_AS(read_questions(bad), VersionError);
  std::stringstream junk("{\"id\": 1}\n");
  CHECK_THROWS_AS(read_questions(junk), DataError);
}

TEST_CASE("question text and shared bindings") {
  auto c = build_corpus({binary("defeat", {"Ann", "person"}, {"Bo", "person"}),
                         unary("kill", 2, {"Bo", "person"})});
  CHECK(question_text(TypedPredicate::binary("defeat", {"person"}, {"person"}), {"s:ann", "s:bo"}, c) ==
        "ann defeat bo?");
  CHECK(question_text(TypedPredicate::unary("receive.from", 1, {"person"}), {"s:ann"}, c) ==
        "ann receive from?");
  CHECK(question_text(TypedPredicate::unary("kill", 2, {"person"}), {"s:bo"}, c) == "kill [2] bo?");

  auto q = question("die.1#person", {"s:bo"}, Polarity::Positive);
  CHECK(shares_binding(c.proposition(0), q, c));
  CHECK(shares_binding(c.proposition(1), q, c));
  auto q2 = question("meet#person#person", {"s:ann", "s:zed"}, Polarity::Positive);
  CHECK_FALSE(shares_binding(c.proposition(0), q2, c));
}

}
