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


// True/false question generation from a dated proposition corpus.
//
// The corpus is cut into date windows. In each window, propositions about
// frequently mentioned entities become positive questions and are withheld
// from the window's evidence; negatives replace a positive's predicate with a
// more specific one from WordNet (noun hyponym for copular predicates, verb
// troponym otherwise) and are kept only if they never occur in the window but
// do occur somewhere in the corpus. The pool is then balanced so that unary
// and binary questions, and positives and negatives within each, are equal
// in number.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgraph/corpus.hpp"
#include "mgraph/random.hpp"
#include "mgraph/wordnet.hpp"

namespace mgraph {

inline constexpr int kQuestionFormatVersion = 1;

struct Partition {
  int id = 0;
  Date start;
  Date end;  // inclusive
  // Proposition ids, ascending.
  std::vector<std::size_t> propositions;
  // Propositions left after withholding the sampled positives.
  std::vector<std::size_t> evidence;
};

struct PartitionSet {
  std::vector<Partition> partitions;
  std::size_t undated = 0;
};

// Windows [d0 + w*k, d0 + w*k + w - 1] anchored at the earliest date; empty
// windows are skipped, so ids are consecutive over non-empty windows.
PartitionSet partition(const Corpus& corpus, int window_days = 3);

enum class Polarity { Positive, Negative };
std::string_view to_string(Polarity p);

struct Question {
  std::uint64_t id = 0;
  int partition_id = 0;
  TypedPredicate predicate;
  // Entity keys in slot order.
  std::vector<std::string> args;
  Polarity polarity = Polarity::Positive;
  // Positive: the withheld proposition. Negative: the positive's proposition.
  std::size_t source_proposition = 0;
  // Empty for positives; "hyponym" or "troponym" for negatives.
  std::string relation;
  std::string text;

  bool is_unary() const { return predicate.is_unary(); }
};

struct QaGenConfig {
  int window_days = 3;
  std::uint64_t entity_min = 6;
  std::uint64_t predicate_min = 11;
  // Positives sampled per partition.
  std::size_t positives_per_partition = 100;
  std::uint64_t seed = 1;

  void validate() const;
};

struct PositiveSelection {
  std::vector<Question> questions;
  std::vector<std::size_t> evidence;
  std::size_t candidates = 0;
  bool shortfall = false;
};

// Samples up to n positives from one partition and withholds them from its
// evidence. Unary candidates need an entity mentioned >= entity_min times in
// the partition, binary candidates an (unordered) entity pair mentioned that
// often, and every candidate a predicate seen >= predicate_min times in the
// whole corpus. Candidates are distinct (predicate, arguments); the earliest
// proposition stands for each.
PositiveSelection select_positives(const Partition& partition, const Corpus& corpus,
                                   const QaGenConfig& config, Rng& rng);

struct NegativeStats {
  std::size_t positives = 0;
  std::size_t without_substitutes = 0;
  std::size_t candidates = 0;
  std::size_t screened_in_partition = 0;
  std::size_t screened_absent_from_corpus = 0;

  double partition_screen_rate() const;
  double corpus_screen_rate() const;
  NegativeStats& operator+=(const NegativeStats& o);
};

std::vector<Question> generate_negatives(const std::vector<Question>& positives,
                                         const LexicalResource& lex, const Partition& partition,
                                         const Corpus& corpus, NegativeStats* stats = nullptr);

struct BalanceReport {
  std::size_t per_quadrant = 0;
  bool unary_dropped = false;
  bool binary_dropped = false;
};

// Downsamples each (valency, polarity) quadrant to the smallest quadrant
// size. A valency with an empty quadrant is dropped entirely and the other
// valency is balanced on its own. Relative order is preserved.
std::vector<Question> balance(const std::vector<Question>& questions, Rng& rng,
                              BalanceReport* report = nullptr);

struct QuestionSet {
  PartitionSet partitions;
  // Balanced; ids 1..n in output order.
  std::vector<Question> questions;
  std::size_t positives_before_balance = 0;
  std::size_t negatives_before_balance = 0;
  std::size_t shortfall_partitions = 0;
  NegativeStats negatives;
  BalanceReport balance;
};

QuestionSet generate_questions(const Corpus& corpus, const LexicalResource& lex,
                               const QaGenConfig& config);

// "kill.2(s:bob)"-style template used for the question text field.
std::string question_text(const TypedPredicate& predicate, const std::vector<std::string>& args,
                          const Corpus& corpus);

// JSON-lines artifacts. `manifest_line` is written first when non-empty.
void write_questions(const std::vector<Question>& questions, std::ostream& out,
                     const std::string& manifest_line = {});
std::vector<Question> read_questions(std::istream& in, const std::string& source = "questions");
void write_partitions(const PartitionSet& partitions, std::ostream& out,
                      const std::string& manifest_line = {});
PartitionSet read_partitions(std::istream& in, const std::string& source = "partitions");

// Evidence a proposition offers a question: it mentions every question
// argument.
bool shares_binding(const Proposition& p, const Question& q, const Corpus& corpus);

// Per question, the evidence propositions sharing its binding.
void write_evidence_export(const std::vector<Question>& questions, const PartitionSet& partitions,
                           const Corpus& corpus, std::ostream& out,
                           const std::string& manifest_line = {});

}  // namespace mgraph
