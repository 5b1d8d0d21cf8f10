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


#include "mgraph/qa_gen.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <tuple>

#include <fmt/format.h>
#include <json.hpp>
#include <spdlog/spdlog.h>

#include "mgraph/local_graph.hpp"
#include "mgraph/manifest.hpp"

namespace mgraph {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> words_of(std::string_view lemma) {
  return split(lemma, '.');
}

std::string surface_of(const std::string& key, const Corpus& corpus) {
  if (auto ref = corpus.find_entity(key)) return corpus.entity(*ref).surface;
  return key;
}

Json question_json(const Question& q) {
  Json j;
  j["id"] = q.id;
  j["partition"] = q.partition_id;
  j["predicate"] = q.predicate.key();
  j["args"] = q.args;
  j["polarity"] = std::string(to_string(q.polarity));
  j["source"] = q.source_proposition;
  j["relation"] = q.relation;
  j["text"] = q.text;
  return j;
}

template <typename T>
T get_field(const nlohmann::json& j, const char* name, const std::string& where) {
  if (!j.contains(name)) throw DataError(fmt::format("{}: missing field '{}'", where, name));
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw DataError(fmt::format("{}: field '{}' has the wrong type", where, name));
  }
}

nlohmann::json parse_json_line(const std::string& line, const std::string& where) {
  try {
    return nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(fmt::format("{}: {}", where, e.what()));
  }
}

}  // namespace

PartitionSet partition(const Corpus& corpus, int window_days) {
  if (window_days < 1) throw UsageError("window_days must be at least 1");
  PartitionSet out;
  std::optional<Date> first;
  for (const auto& p : corpus.propositions()) {
    if (p.date && (!first || *p.date < *first)) first = p.date;
  }
  std::map<long, std::vector<std::size_t>> windows;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& date = corpus.proposition(i).date;
    if (!date) {
      ++out.undated;
      continue;
    }
    windows[(date->day_number() - first->day_number()) / window_days].push_back(i);
  }
  for (auto& [k, ids] : windows) {
    Partition part;
    part.id = static_cast<int>(out.partitions.size());
    part.start = first->plus_days(static_cast<int>(k * window_days));
    part.end = part.start.plus_days(window_days - 1);
    part.propositions = std::move(ids);
    part.evidence = part.propositions;
    out.partitions.push_back(std::move(part));
  }
  return out;
}

std::string_view to_string(Polarity p) {
  return p == Polarity::Positive ? "positive" : "negative";
}

void QaGenConfig::validate() const {
  if (window_days < 1) throw UsageError("window_days must be at least 1");
  if (entity_min < 1) throw UsageError("entity_min must be at least 1");
  if (positives_per_partition < 1) throw UsageError("positives_per_partition must be at least 1");
}

PositiveSelection select_positives(const Partition& partition, const Corpus& corpus,
                                   const QaGenConfig& config, Rng& rng) {
  std::map<EntityRef, std::uint64_t> entity_counts;
  std::map<std::pair<EntityRef, EntityRef>, std::uint64_t> pair_counts;
  for (auto id : partition.propositions) {
    const auto& p = corpus.proposition(id);
    std::set<EntityRef> distinct(p.args.begin(), p.args.end());
    for (auto e : distinct) ++entity_counts[e];
    if (p.args.size() == 2) ++pair_counts[std::minmax(p.args[0], p.args[1])];
  }

  std::vector<std::size_t> candidates;
  std::set<std::pair<PredicateRef, std::vector<EntityRef>>> seen;
  for (auto id : partition.propositions) {
    const auto& p = corpus.proposition(id);
    if (p.negated || corpus.predicate_occurrences(p.predicate) < config.predicate_min) continue;
    const bool star = p.args.size() == 1
                          ? entity_counts[p.args[0]] >= config.entity_min
                          : pair_counts[std::minmax(p.args[0], p.args[1])] >= config.entity_min;
    if (!star || !seen.emplace(p.predicate, p.args).second) continue;
    candidates.push_back(id);
  }

  PositiveSelection out;
  out.candidates = candidates.size();
  out.shortfall = candidates.size() < config.positives_per_partition;
  std::set<std::size_t> chosen;
  for (auto k : rng.sample(candidates.size(), config.positives_per_partition)) {
    const auto id = candidates[k];
    const auto& p = corpus.proposition(id);
    Question q;
    q.partition_id = partition.id;
    q.predicate = corpus.predicate(p.predicate);
    q.args = corpus.arg_keys(p);
    q.polarity = Polarity::Positive;
    q.source_proposition = id;
    out.questions.push_back(std::move(q));
    chosen.insert(id);
  }
  for (auto id : partition.propositions) {
    if (!chosen.contains(id)) out.evidence.push_back(id);
  }
  return out;
}

double NegativeStats::partition_screen_rate() const {
  return candidates == 0 ? 0.0 : static_cast<double>(screened_in_partition) / candidates;
}

double NegativeStats::corpus_screen_rate() const {
  const auto after = candidates - screened_in_partition;
  return after == 0 ? 0.0 : static_cast<double>(screened_absent_from_corpus) / after;
}

NegativeStats& NegativeStats::operator+=(const NegativeStats& o) {
  positives += o.positives;
  without_substitutes += o.without_substitutes;
  candidates += o.candidates;
  screened_in_partition += o.screened_in_partition;
  screened_absent_from_corpus += o.screened_absent_from_corpus;
  return *this;
}

std::vector<Question> generate_negatives(const std::vector<Question>& positives,
                                         const LexicalResource& lex, const Partition& partition,
                                         const Corpus& corpus, NegativeStats* stats) {
  NegativeStats local;
  std::set<std::pair<PredicateRef, std::vector<std::string>>> in_partition;
  for (auto id : partition.propositions) {
    const auto& p = corpus.proposition(id);
    in_partition.emplace(p.predicate, corpus.arg_keys(p));
  }

  std::vector<Question> out;
  std::set<std::pair<TypedPredicate, std::vector<std::string>>> emitted;
  for (const auto& pos : positives) {
    ++local.positives;
    std::string relation;
    auto subs = lex.substitutes(pos.predicate.lemma, &relation);
    if (subs.empty()) {
      ++local.without_substitutes;
      spdlog::debug("no lexical substitutes for {}", pos.predicate.lemma);
      continue;
    }
    for (const auto& lemma : subs) {
      TypedPredicate candidate = pos.predicate;
      candidate.lemma = lemma;
      ++local.candidates;
      auto ref = corpus.find_predicate(candidate);
      if (ref && in_partition.contains({*ref, pos.args})) {
        ++local.screened_in_partition;
        continue;
      }
      if (!ref || corpus.predicate_occurrences(*ref) == 0) {
        ++local.screened_absent_from_corpus;
        continue;
      }
      if (!emitted.emplace(candidate, pos.args).second) continue;
      Question q;
      q.partition_id = partition.id;
      q.predicate = std::move(candidate);
      q.args = pos.args;
      q.polarity = Polarity::Negative;
      q.source_proposition = pos.source_proposition;
      q.relation = relation;
      out.push_back(std::move(q));
    }
  }
  if (stats) *stats += local;
  return out;
}

std::vector<Question> balance(const std::vector<Question>& questions, Rng& rng,
                              BalanceReport* report) {
  // Quadrants: unary+, unary-, binary+, binary-.
  std::vector<std::size_t> quadrant[4];
  for (std::size_t i = 0; i < questions.size(); ++i) {
    const auto& q = questions[i];
    quadrant[(q.is_unary() ? 0 : 2) + (q.polarity == Polarity::Positive ? 0 : 1)].push_back(i);
  }
  const std::size_t unary_m = std::min(quadrant[0].size(), quadrant[1].size());
  const std::size_t binary_m = std::min(quadrant[2].size(), quadrant[3].size());
  BalanceReport r;
  r.unary_dropped = unary_m == 0;
  r.binary_dropped = binary_m == 0;
  if (!r.unary_dropped && !r.binary_dropped) {
    r.per_quadrant = std::min(unary_m, binary_m);
  } else {
    r.per_quadrant = std::max(unary_m, binary_m);
    spdlog::warn("question pool has an empty quadrant; dropping {} questions",
                 r.unary_dropped && r.binary_dropped ? "all"
                 : r.unary_dropped                   ? "unary"
                                                     : "binary");
  }

  std::vector<std::size_t> keep;
  for (int k = 0; k < 4; ++k) {
    const bool dropped = k < 2 ? r.unary_dropped : r.binary_dropped;
    if (dropped) continue;
    for (auto i : rng.sample(quadrant[k].size(), r.per_quadrant)) keep.push_back(quadrant[k][i]);
  }
  std::sort(keep.begin(), keep.end());
  std::vector<Question> out;
  out.reserve(keep.size());
  for (auto i : keep) out.push_back(questions[i]);
  if (report) *report = r;
  return out;
}

std::string question_text(const TypedPredicate& predicate, const std::vector<std::string>& args,
                          const Corpus& corpus) {
  const std::string verb = join(words_of(predicate.lemma), " ");
  if (args.size() == 2) {
    return fmt::format("{} {} {}?", surface_of(args[0], corpus), verb, surface_of(args[1], corpus));
  }
  if (predicate.case_marker == 1) return fmt::format("{} {}?", surface_of(args.at(0), corpus), verb);
  return fmt::format("{} [{}] {}?", verb, predicate.case_marker, surface_of(args.at(0), corpus));
}

QuestionSet generate_questions(const Corpus& corpus, const LexicalResource& lex,
                               const QaGenConfig& config) {
  config.validate();
  QuestionSet out;
  out.partitions = partition(corpus, config.window_days);
  auto& parts = out.partitions.partitions;

  struct PartResult {
    PositiveSelection positives;
    std::vector<Question> negatives;
    NegativeStats stats;
  };
  std::vector<PartResult> results(parts.size());
  parallel_for(parts.size(), 0, [&](std::size_t i) {
    Rng rng(mix_seed(config.seed, static_cast<std::uint64_t>(parts[i].id)));
    auto& r = results[i];
    r.positives = select_positives(parts[i], corpus, config, rng);
    r.negatives = generate_negatives(r.positives.questions, lex, parts[i], corpus, &r.stats);
  });

  std::vector<Question> pool;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto& r = results[i];
    parts[i].evidence = std::move(r.positives.evidence);
    if (r.positives.shortfall) ++out.shortfall_partitions;
    out.negatives += r.stats;
    out.positives_before_balance += r.positives.questions.size();
    out.negatives_before_balance += r.negatives.size();
    for (auto& q : r.positives.questions) pool.push_back(std::move(q));
    for (auto& q : r.negatives) pool.push_back(std::move(q));
  }

  Rng rng(mix_seed(config.seed, std::uint64_t{1} << 40));
  out.questions = balance(pool, rng, &out.balance);
  std::uint64_t next_id = 1;
  for (auto& q : out.questions) {
    q.id = next_id++;
    q.text = question_text(q.predicate, q.args, corpus);
  }
  return out;
}

void write_questions(const std::vector<Question>& questions, std::ostream& out,
                     const std::string& manifest_line) {
  if (!manifest_line.empty()) out << manifest_line << '\n';
  for (const auto& q : questions) out << question_json(q).dump() << '\n';
}

std::vector<Question> read_questions(std::istream& in, const std::string& source) {
  std::vector<Question> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1 && check_manifest_line(line, kQuestionFormatVersion)) continue;
    const std::string where = fmt::format("{}:{}", source, line_no);
    auto j = parse_json_line(line, where);
    Question q;
    q.id = get_field<std::uint64_t>(j, "id", where);
    q.partition_id = get_field<int>(j, "partition", where);
    try {
      q.predicate = TypedPredicate::parse_key(get_field<std::string>(j, "predicate", where));
    } catch (const DataError& e) {
      throw DataError(fmt::format("{}: {}", where, e.what()));
    }
    q.args = get_field<std::vector<std::string>>(j, "args", where);
    if (static_cast<int>(q.args.size()) != q.predicate.valency()) {
      throw DataError(fmt::format("{}: argument count disagrees with the predicate", where));
    }
    const auto polarity = get_field<std::string>(j, "polarity", where);
    if (polarity != "positive" && polarity != "negative") {
      throw DataError(fmt::format("{}: polarity must be positive or negative", where));
    }
    q.polarity = polarity == "positive" ? Polarity::Positive : Polarity::Negative;
    q.source_proposition = get_field<std::size_t>(j, "source", where);
    q.relation = j.value("relation", "");
    q.text = j.value("text", "");
    out.push_back(std::move(q));
  }
  return out;
}

void write_partitions(const PartitionSet& partitions, std::ostream& out,
                      const std::string& manifest_line) {
  if (!manifest_line.empty()) out << manifest_line << '\n';
  for (const auto& p : partitions.partitions) {
    Json j;
    j["id"] = p.id;
    j["start"] = p.start.to_string();
    j["end"] = p.end.to_string();
    j["propositions"] = p.propositions;
    j["evidence"] = p.evidence;
    out << j.dump() << '\n';
  }
}

PartitionSet read_partitions(std::istream& in, const std::string& source) {
  PartitionSet out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1 && check_manifest_line(line, kQuestionFormatVersion)) continue;
    const std::string where = fmt::format("{}:{}", source, line_no);
    auto j = parse_json_line(line, where);
    Partition p;
    p.id = get_field<int>(j, "id", where);
    auto start = Date::parse(get_field<std::string>(j, "start", where));
    auto end = Date::parse(get_field<std::string>(j, "end", where));
    if (!start || !end) throw DataError(fmt::format("{}: bad partition dates", where));
    p.start = *start;
    p.end = *end;
    p.propositions = get_field<std::vector<std::size_t>>(j, "propositions", where);
    p.evidence = get_field<std::vector<std::size_t>>(j, "evidence", where);
    out.partitions.push_back(std::move(p));
  }
  return out;
}

bool shares_binding(const Proposition& p, const Question& q, const Corpus& corpus) {
  const auto keys = corpus.arg_keys(p);
  return std::all_of(q.args.begin(), q.args.end(), [&](const std::string& a) {
    return std::find(keys.begin(), keys.end(), a) != keys.end();
  });
}

void write_evidence_export(const std::vector<Question>& questions, const PartitionSet& partitions,
                           const Corpus& corpus, std::ostream& out,
                           const std::string& manifest_line) {
  if (!manifest_line.empty()) out << manifest_line << '\n';
  std::map<int, const Partition*> by_id;
  for (const auto& p : partitions.partitions) by_id[p.id] = &p;
  for (const auto& q : questions) {
    Json j;
    j["question"] = q.id;
    j["text"] = q.text;
    Json evidence = Json::array();
    auto it = by_id.find(q.partition_id);
    if (it == by_id.end()) {
      throw DataError(fmt::format("question {} names unknown partition {}", q.id, q.partition_id));
    }
    for (auto id : it->second->evidence) {
      const auto& p = corpus.proposition(id);
      if (!shares_binding(p, q, corpus)) continue;
      const auto& pred = corpus.predicate(p.predicate);
      const auto args = corpus.arg_keys(p);
      Json e;
      e["id"] = id;
      e["predicate"] = pred.key();
      e["args"] = args;
      e["text"] = question_text(pred, args, corpus);
      evidence.push_back(std::move(e));
    }
    j["evidence"] = std::move(evidence);
    out << j.dump() << '\n';
  }
}

}  // namespace mgraph
