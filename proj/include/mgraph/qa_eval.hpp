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


// Answering generated questions and scoring the answers.
//
// A model gives each question a confidence in [0, 1]; 0 means the model
// found nothing and predicts false. Curves sweep a threshold t over the
// distinct positive confidences and predict true when confidence >= t.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgraph/corpus.hpp"
#include "mgraph/graph_store.hpp"
#include "mgraph/qa_gen.hpp"

namespace mgraph {

inline constexpr int kAnswerFormatVersion = 1;

struct AnswerRecord {
  std::uint64_t question_id = 0;
  std::string model;
  double confidence = 0.0;
  // Set iff confidence > 0.
  std::optional<std::size_t> best_evidence;
  bool backed_off = false;
};

// A proposition offered as evidence, resolved to keys.
struct Evidence {
  std::size_t id = 0;
  TypedPredicate predicate;
  std::vector<std::string> args;
};

std::vector<Evidence> resolve_evidence(const std::vector<std::size_t>& ids, const Corpus& corpus);

// 1.0 iff some evidence has the question's lemma, case marker, valency and
// arguments (slot types are ignored).
AnswerRecord answer_exact_match(const Question& q, const std::vector<Evidence>& evidence);

// Max entailment score over the evidence. Binary questions are answered only
// with BB enabled, unary questions only with UU or BU enabled.
AnswerRecord answer_graph(const Question& q, const std::vector<Evidence>& evidence,
                          const GraphStore& store, const ComponentSet& components);

// Max confidence; the first record carrying it supplies the evidence.
AnswerRecord combine_components(const std::vector<AnswerRecord>& records,
                                const std::string& model = "combined");

// Reads "question_id<TAB>evidence_id<TAB>score" lines ('#' starts a
// comment). Scores outside [0, 1] reject the file with the line number;
// repeated pairs keep the maximum. Questions without rows score 0.
std::vector<AnswerRecord> external_scores(const std::vector<Question>& questions,
                                          std::istream& scores, const std::string& model,
                                          const std::string& source = "scores");

struct PrPoint {
  double threshold = 0.0;
  double precision = 0.0;
  double recall = 0.0;
};

struct PrCurve {
  // Thresholds strictly increasing.
  std::vector<PrPoint> points;
  double max_recall = 0.0;
};

using GoldLabels = std::map<std::uint64_t, bool>;
GoldLabels gold_labels(const std::vector<Question>& questions);

// Throws DataError when the gold set has no positives or a record has no
// gold label.
PrCurve pr_curve(const std::vector<AnswerRecord>& records, const GoldLabels& gold);

struct AccuracyAtK {
  double accuracy = 0.0;
  // Number of predictions actually used (less than requested when fewer
  // questions were answered).
  std::size_t k = 0;
};

AccuracyAtK accuracy_at_k(const std::vector<AnswerRecord>& records, const GoldLabels& gold,
                          std::size_t k);

// Keeps questions whose typed predicate is a vertex of some subgraph, then
// rebalances.
std::vector<Question> filter_questions(const std::vector<Question>& questions,
                                       const GraphStore& store, Rng& rng);

// Answer files: JSON lines after an optional manifest line.
void write_answers(const std::vector<AnswerRecord>& records, std::ostream& out,
                   const std::string& manifest_line = {});
std::vector<AnswerRecord> read_answers(std::istream& in, const std::string& source = "answers");

// "threshold,precision,recall" rows.
void write_pr_csv(const PrCurve& curve, std::ostream& out);

struct ModelSummary {
  std::string model;
  std::size_t questions = 0;
  std::size_t answered = 0;
  double max_recall = 0.0;
  std::vector<std::pair<std::size_t, AccuracyAtK>> at_k;
};

void write_summary(const std::vector<ModelSummary>& models, std::ostream& out);

}  // namespace mgraph
