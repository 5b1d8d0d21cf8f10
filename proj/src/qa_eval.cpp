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


#include "mgraph/qa_eval.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>

#include <fmt/format.h>
#include <json.hpp>
#include <spdlog/spdlog.h>

#include "mgraph/manifest.hpp"

namespace mgraph {

namespace {

void offer(AnswerRecord& best, double score, std::size_t evidence, bool backed_off) {
  if (score > best.confidence) {
    best.confidence = score;
    best.best_evidence = evidence;
    best.backed_off = backed_off;
  }
}

}  // namespace

std::vector<Evidence> resolve_evidence(const std::vector<std::size_t>& ids, const Corpus& corpus) {
  std::vector<Evidence> out;
  out.reserve(ids.size());
  for (auto id : ids) {
    if (id >= corpus.size()) {
      throw DataError(fmt::format("evidence proposition {} is not in the corpus", id));
    }
    const auto& p = corpus.proposition(id);
    out.push_back({id, corpus.predicate(p.predicate), corpus.arg_keys(p)});
  }
  return out;
}

AnswerRecord answer_exact_match(const Question& q, const std::vector<Evidence>& evidence) {
  AnswerRecord r;
  r.question_id = q.id;
  r.model = "exact";
  for (const auto& e : evidence) {
    if (e.predicate.lemma == q.predicate.lemma &&
        e.predicate.case_marker == q.predicate.case_marker &&
        e.predicate.valency() == q.predicate.valency() && e.args == q.args) {
      offer(r, 1.0, e.id, false);
      break;
    }
  }
  return r;
}

AnswerRecord answer_graph(const Question& q, const std::vector<Evidence>& evidence,
                          const GraphStore& store, const ComponentSet& components) {
  AnswerRecord r;
  r.question_id = q.id;
  r.model = "graph_" + components.to_string();
  std::replace(r.model.begin(), r.model.end(), ',', '+');
  const bool answers = q.is_unary() ? (components.uu || components.bu) : components.bb;
  if (!answers) return r;
  for (const auto& e : evidence) {
    if (e.args.size() < q.args.size() || consistent_maps(e.args, q.args).empty()) continue;
    auto result = store.entailment_score(e.predicate, e.args, q.predicate, q.args, components);
    offer(r, result.score, e.id, result.backed_off);
  }
  return r;
}

AnswerRecord combine_components(const std::vector<AnswerRecord>& records,
                                const std::string& model) {
  AnswerRecord out;
  out.model = model;
  if (!records.empty()) out.question_id = records.front().question_id;
  for (const auto& r : records) {
    if (r.question_id != out.question_id) throw ContractError("combining records of different questions");
    if (r.confidence > out.confidence) {
      out.confidence = r.confidence;
      out.best_evidence = r.best_evidence;
      out.backed_off = r.backed_off;
    }
  }
  return out;
}

std::vector<AnswerRecord> external_scores(const std::vector<Question>& questions,
                                          std::istream& scores, const std::string& model,
                                          const std::string& source) {
  std::map<std::pair<std::uint64_t, std::size_t>, double> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(scores, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto parts = split(line, '\t');
    std::optional<std::uint64_t> qid, eid;
    std::optional<double> parsed;
    if (parts.size() == 3) {
      qid = parse_uint(parts[0]);
      eid = parse_uint(parts[1]);
      parsed = parse_double(parts[2]);
    }
    if (!qid || !eid || !parsed) {
      throw DataError(fmt::format("{}:{}: expected question_id, evidence_id, score", source, line_no));
    }
    const double score = parsed.value();
    if (!(score >= 0.0 && score <= 1.0)) {
      throw DataError(fmt::format("{}:{}: score {} outside [0, 1]", source, line_no, parts[2]));
    }
    auto [it, inserted] = rows.try_emplace({*qid, *eid}, score);
    if (!inserted) {
      spdlog::warn("{}:{}: repeated score for question {} evidence {}; keeping the maximum", source,
                   line_no, *qid, *eid);
      it->second = std::max(it->second, score);
    }
  }
  std::map<std::uint64_t, AnswerRecord> by_question;
  for (const auto& q : questions) {
    AnswerRecord r;
    r.question_id = q.id;
    r.model = model;
    by_question.emplace(q.id, std::move(r));
  }
  for (const auto& [key, score] : rows) {
    auto it = by_question.find(key.first);
    if (it == by_question.end()) {
      spdlog::warn("{}: score for unknown question {} ignored", source, key.first);
      continue;
    }
    offer(it->second, score, key.second, false);
  }
  std::vector<AnswerRecord> out;
  for (const auto& q : questions) out.push_back(by_question.at(q.id));
  return out;
}

GoldLabels gold_labels(const std::vector<Question>& questions) {
  GoldLabels gold;
  for (const auto& q : questions) gold[q.id] = q.polarity == Polarity::Positive;
  return gold;
}

PrCurve pr_curve(const std::vector<AnswerRecord>& records, const GoldLabels& gold) {
  std::size_t positives = 0;
  for (const auto& [id, label] : gold) positives += label ? 1 : 0;
  if (positives == 0) throw DataError("gold labels contain no positive questions");

  // (confidence, is_positive) for answered questions, descending confidence.
  std::vector<std::pair<double, bool>> answered;
  for (const auto& r : records) {
    auto it = gold.find(r.question_id);
    if (it == gold.end()) throw DataError(fmt::format("no gold label for question {}", r.question_id));
    if (r.confidence > 0.0) answered.emplace_back(r.confidence, it->second);
  }
  std::sort(answered.begin(), answered.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  PrCurve curve;
  std::size_t tp = 0;
  std::size_t predicted = 0;
  for (std::size_t i = 0; i < answered.size();) {
    const double t = answered[i].first;
    for (; i < answered.size() && answered[i].first == t; ++i) {
      ++predicted;
      tp += answered[i].second ? 1 : 0;
    }
    curve.points.push_back({t, static_cast<double>(tp) / static_cast<double>(predicted),
                            static_cast<double>(tp) / static_cast<double>(positives)});
  }
  std::reverse(curve.points.begin(), curve.points.end());
  curve.max_recall = curve.points.empty() ? 0.0 : curve.points.front().recall;
  return curve;
}

AccuracyAtK accuracy_at_k(const std::vector<AnswerRecord>& records, const GoldLabels& gold,
                          std::size_t k) {
  std::vector<const AnswerRecord*> answered;
  for (const auto& r : records) {
    if (r.confidence > 0.0) answered.push_back(&r);
  }
  std::sort(answered.begin(), answered.end(), [](const AnswerRecord* a, const AnswerRecord* b) {
    if (a->confidence != b->confidence) return a->confidence > b->confidence;
    return a->question_id < b->question_id;
  });
  AccuracyAtK out;
  out.k = std::min(k, answered.size());
  if (out.k == 0) return out;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < out.k; ++i) {
    auto it = gold.find(answered[i]->question_id);
    if (it == gold.end()) {
      throw DataError(fmt::format("no gold label for question {}", answered[i]->question_id));
    }
    correct += it->second ? 1 : 0;
  }
  out.accuracy = static_cast<double>(correct) / static_cast<double>(out.k);
  return out;
}

std::vector<Question> filter_questions(const std::vector<Question>& questions,
                                       const GraphStore& store, Rng& rng) {
  std::vector<Question> kept;
  for (const auto& q : questions) {
    if (store.has_vertex(q.predicate)) kept.push_back(q);
  }
  return balance(kept, rng);
}

void write_answers(const std::vector<AnswerRecord>& records, std::ostream& out,
                   const std::string& manifest_line) {
  if (!manifest_line.empty()) out << manifest_line << '\n';
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["question"] = r.question_id;
    j["model"] = r.model;
    j["confidence"] = r.confidence;
    if (r.best_evidence) {
      j["best_evidence"] = *r.best_evidence;
    } else {
      j["best_evidence"] = nullptr;
    }
    j["backed_off"] = r.backed_off;
    out << j.dump() << '\n';
  }
}

std::vector<AnswerRecord> read_answers(std::istream& in, const std::string& source) {
  std::vector<AnswerRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1 && check_manifest_line(line, kAnswerFormatVersion)) continue;
    try {
      auto j = nlohmann::json::parse(line);
      AnswerRecord r;
      r.question_id = j.at("question").get<std::uint64_t>();
      r.model = j.at("model").get<std::string>();
      r.confidence = j.at("confidence").get<double>();
      if (!j.at("best_evidence").is_null()) r.best_evidence = j.at("best_evidence").get<std::size_t>();
      r.backed_off = j.value("backed_off", false);
      if (!(r.confidence >= 0.0 && r.confidence <= 1.0)) {
        throw DataError("confidence outside [0, 1]");
      }
      out.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw DataError(fmt::format("{}:{}: {}", source, line_no, e.what()));
    } catch (const DataError& e) {
      throw DataError(fmt::format("{}:{}: {}", source, line_no, e.what()));
    }
  }
  return out;
}

void write_pr_csv(const PrCurve& curve, std::ostream& out) {
  out << "threshold,precision,recall\n";
  for (const auto& p : curve.points) {
    out << format_double(p.threshold) << ',' << format_double(p.precision) << ','
        << format_double(p.recall) << '\n';
  }
}

void write_summary(const std::vector<ModelSummary>& models, std::ostream& out) {
  std::set<std::size_t> ks;
  for (const auto& m : models) {
    for (const auto& [k, _] : m.at_k) ks.insert(k);
  }
  out << fmt::format("{:<28} {:>9} {:>9} {:>10}", "model", "questions", "answered", "max_recall");
  for (auto k : ks) out << fmt::format(" {:>16}", fmt::format("acc@{}", k));
  out << '\n';
  for (const auto& m : models) {
    out << fmt::format("{:<28} {:>9} {:>9} {:>10.4f}", m.model, m.questions, m.answered,
                       m.max_recall);
    for (auto k : ks) {
      auto it = std::find_if(m.at_k.begin(), m.at_k.end(), [&](const auto& e) { return e.first == k; });
      if (it == m.at_k.end()) {
        out << fmt::format(" {:>16}", "-");
      } else {
        out << fmt::format(" {:>16}", fmt::format("{:.4f} (k={})", it->second.accuracy, it->second.k));
      }
    }
    out << '\n';
  }
}

}  // namespace mgraph
