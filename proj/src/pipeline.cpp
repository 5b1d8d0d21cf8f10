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


#include "mgraph/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "mgraph/corpus.hpp"
#include "mgraph/features.hpp"
#include "mgraph/graph_io.hpp"
#include "mgraph/manifest.hpp"
#include "mgraph/qa_eval.hpp"
#include "mgraph/wordnet.hpp"

namespace mgraph {

namespace fs = std::filesystem;
using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

namespace {

void check_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw UsageError(fmt::format("config: '{}' must be an object", where));
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) {
      throw UsageError(fmt::format("config: unknown key '{}' in {}", key, where));
    }
  }
}

template <typename T>
void read_value(const Json& obj, const char* key, T& target, const std::string& where) {
  if (!obj.contains(key)) return;
  try {
    target = obj.at(key).get<T>();
  } catch (const Json::exception&) {
    throw UsageError(fmt::format("config: '{}.{}' has the wrong type", where, key));
  }
}

void read_path(const Json& obj, const char* key, fs::path& target, const fs::path& base) {
  std::string text;
  read_value(obj, key, text, "config");
  if (text.empty()) return;
  fs::path p(text);
  target = p.is_absolute() || base.empty() ? p : base / p;
}

std::ofstream open_out(const fs::path& path) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError(fmt::format("cannot write {}", path.string()));
  return out;
}

std::ifstream open_artifact(const fs::path& path, std::string_view producer) {
  if (!fs::exists(path)) {
    throw DataError(fmt::format("{} not found; run `mgraph {}` first", path.string(), producer));
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(fmt::format("cannot read {}", path.string()));
  return in;
}

Manifest manifest_for(const PipelineConfig& config, std::string stage, int version) {
  Manifest m;
  m.stage = std::move(stage);
  m.format_version = version;
  m.config_hash = config.hash();
  m.seed = config.seed;
  return m;
}

void write_manifest_file(const fs::path& path, const Manifest& m) {
  auto out = open_out(path);
  out << m.to_json().dump(2) << '\n';
}

IngestConfig ingest_config(const PipelineConfig& config) {
  IngestConfig ic;
  if (!config.types.empty()) ic.types = TypeInventory::load(config.types);
  return ic;
}

Corpus load_stage_corpus(const PipelineConfig& config) {
  const Layout layout(config.out);
  auto in = open_artifact(layout.corpus_file(), "ingest");
  return ingest(in, ingest_config(config));
}

std::vector<Question> load_questions(const Layout& layout) {
  auto in = open_artifact(layout.questions_file(), "gen-questions");
  return read_questions(in, layout.questions_file().string());
}

PartitionSet load_partitions(const Layout& layout) {
  auto in = open_artifact(layout.partitions_file(), "gen-questions");
  return read_partitions(in, layout.partitions_file().string());
}

std::string file_hash(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return hex64(fnv1a64(ss.str()));
}

OrderedJson graph_stats(const GraphSet& family) {
  std::size_t bb = 0, bu = 0, uu = 0, vertices = 0;
  for (const auto& [sig, g] : family) {
    bb += g.edge_count(EdgeKind::BB);
    bu += g.edge_count(EdgeKind::BU);
    uu += g.edge_count(EdgeKind::UU);
    vertices += g.vertices.size();
  }
  OrderedJson j;
  j["subgraphs"] = family.size();
  j["vertices"] = vertices;
  j["bb_edges"] = bb;
  j["bu_edges"] = bu;
  j["uu_edges"] = uu;
  return j;
}

std::vector<std::string> parse_types(const std::vector<std::string>& given) {
  std::vector<std::string> out;
  for (const auto& g : given) {
    for (auto& t : split(g, ',')) {
      if (!t.empty()) out.push_back(std::move(t));
    }
  }
  return out;
}

TypedPredicate query_predicate(const std::string& name, const std::vector<std::string>& types) {
  if (types.empty() || types.size() > 2) {
    throw UsageError(fmt::format("predicate '{}' needs one type (unary) or two (binary)", name));
  }
  try {
    return TypedPredicate::parse_key(name + "#" + join(types, "#"));
  } catch (const DataError& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

PipelineConfig PipelineConfig::from_json(const Json& j, const fs::path& base_dir) {
  check_keys(j, {"corpus", "types", "lexicon", "out", "seed", "threads", "features", "local",
                 "global", "questions", "query"},
             "config");
  PipelineConfig c;
  read_path(j, "corpus", c.corpus, base_dir);
  read_path(j, "types", c.types, base_dir);
  read_path(j, "lexicon", c.lexicon, base_dir);
  read_path(j, "out", c.out, base_dir);
  read_value(j, "seed", c.seed, "config");
  read_value(j, "threads", c.threads, "config");
  if (j.contains("features")) {
    const auto& f = j.at("features");
    check_keys(f, {"min_predicate_count"}, "features");
    read_value(f, "min_predicate_count", c.local.features.min_predicate_count, "features");
  }
  if (j.contains("local")) {
    const auto& l = j.at("local");
    check_keys(l, {"edge_threshold"}, "local");
    read_value(l, "edge_threshold", c.local.edge_threshold, "local");
  }
  if (j.contains("global")) {
    const auto& g = j.at("global");
    check_keys(g, {"lambda_para", "lambda_cross", "paraphrase_tau", "iterations", "convergence_eps"},
               "global");
    read_value(g, "lambda_para", c.global.lambda_para, "global");
    read_value(g, "lambda_cross", c.global.lambda_cross, "global");
    read_value(g, "paraphrase_tau", c.global.paraphrase_tau, "global");
    read_value(g, "iterations", c.global.iterations, "global");
    read_value(g, "convergence_eps", c.global.convergence_eps, "global");
  }
  if (j.contains("questions")) {
    const auto& q = j.at("questions");
    check_keys(q, {"window_days", "entity_min", "predicate_min", "positives_per_partition"},
               "questions");
    read_value(q, "window_days", c.questions.window_days, "questions");
    read_value(q, "entity_min", c.questions.entity_min, "questions");
    read_value(q, "predicate_min", c.questions.predicate_min, "questions");
    read_value(q, "positives_per_partition", c.questions.positives_per_partition, "questions");
  }
  if (j.contains("query")) {
    const auto& q = j.at("query");
    check_keys(q, {"compose_bu_uu"}, "query");
    read_value(q, "compose_bu_uu", c.compose_bu_uu, "query");
  }
  c.validate();
  return c;
}

PipelineConfig PipelineConfig::load(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw UsageError(fmt::format("cannot read config file {}", file.string()));
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError(fmt::format("config file {}: {}", file.string(), e.what()));
  }
  return from_json(j, file.parent_path());
}

OrderedJson PipelineConfig::to_json() const {
  OrderedJson j;
  j["corpus"] = corpus.string();
  j["types"] = types.string();
  j["lexicon"] = lexicon.string();
  j["out"] = out.string();
  j["seed"] = seed;
  j["threads"] = threads;
  j["features"]["min_predicate_count"] = local.features.min_predicate_count;
  j["local"]["edge_threshold"] = local.edge_threshold;
  j["global"]["lambda_para"] = global.lambda_para;
  j["global"]["lambda_cross"] = global.lambda_cross;
  j["global"]["paraphrase_tau"] = global.paraphrase_tau;
  j["global"]["iterations"] = global.iterations;
  j["global"]["convergence_eps"] = global.convergence_eps;
  j["questions"]["window_days"] = questions.window_days;
  j["questions"]["entity_min"] = questions.entity_min;
  j["questions"]["predicate_min"] = questions.predicate_min;
  j["questions"]["positives_per_partition"] = questions.positives_per_partition;
  j["query"]["compose_bu_uu"] = compose_bu_uu;
  return j;
}

std::string PipelineConfig::hash() const {
  auto j = to_json();
  for (const char* key : {"corpus", "types", "lexicon", "out", "threads"}) j.erase(key);
  return hex64(fnv1a64(j.dump()));
}

void PipelineConfig::validate() const {
  if (!(local.edge_threshold >= 0.0 && local.edge_threshold <= 1.0)) {
    throw UsageError("local.edge_threshold must lie in [0, 1]");
  }
  global.validate();
  questions.validate();
  for (const auto* p : {&corpus, &types, &lexicon}) {
    if (!p->empty() && !fs::exists(*p)) {
      throw UsageError(fmt::format("configured path {} does not exist", p->string()));
    }
  }
}

void run_ingest(const PipelineConfig& config, std::ostream& log) {
  if (config.corpus.empty()) throw UsageError("ingest needs a corpus (--corpus or config 'corpus')");
  if (!fs::exists(config.corpus)) {
    throw UsageError(fmt::format("corpus {} does not exist", config.corpus.string()));
  }
  const Layout layout(config.out);
  Corpus corpus = ingest(config.corpus, ingest_config(config));
  const auto& st = corpus.stats();

  Manifest m = manifest_for(config, "ingest", kCorpusFormatVersion);
  m.extra["input_hash"] = file_hash(config.corpus);
  m.extra["propositions"] = corpus.size();
  m.extra["entities"] = corpus.entity_count();
  m.extra["predicates"] = corpus.predicate_count();
  {
    auto out = open_out(layout.corpus_file());
    write_corpus(corpus, out, m.to_line());
  }
  OrderedJson stats;
  stats["records"] = st.records;
  stats["malformed"] = st.malformed;
  stats["unnamed_filtered"] = st.unnamed_filtered;
  stats["unknown_types"] = st.unknown_types;
  stats["decomposed_records"] = st.decomposed_records;
  stats["propositions"] = corpus.size();
  stats["entities"] = corpus.entity_count();
  stats["predicates"] = corpus.predicate_count();
  auto out = open_out(layout.corpus_stats());
  out << stats.dump(2) << '\n';
  fmt::print(log, "ingest: {} records, {} malformed, {} propositions, {} entities, {} predicates\n",
             st.records, st.malformed, corpus.size(), corpus.entity_count(),
             corpus.predicate_count());
}

void run_build_local(const PipelineConfig& config, std::ostream& log) {
  const Layout layout(config.out);
  Corpus corpus = load_stage_corpus(config);
  LocalGraphConfig lc = config.local;
  lc.threads = config.threads;
  LocalModel model = build_local(corpus, lc);

  fs::create_directories(layout.local_dir());
  for (const auto* store : {&model.pair_counts, &model.slot_counts}) {
    const std::string stem = store->mode() == CountMode::Pair ? "counts_pair" : "counts_slot";
    auto bin = open_out(layout.local_dir() / (stem + ".bin"));
    write_count_cache(*store, corpus, bin);
    auto tsv = open_out(layout.local_dir() / (stem + ".tsv"));
    write_count_tsv(*store, corpus, tsv);
  }
  save_graphs(model.graphs, layout.local_graphs());

  Manifest m = manifest_for(config, "build-local", kGraphFormatVersion);
  m.extra["bivalent"] = graph_stats(model.graphs.bivalent);
  m.extra["univalent"] = graph_stats(model.graphs.univalent);
  write_manifest_file(layout.local_dir() / "manifest.json", m);
  fmt::print(log, "build-local: {} bivalent subgraphs, {} univalent subgraphs -> {}\n",
             model.graphs.bivalent.size(), model.graphs.univalent.size(),
             layout.local_graphs().string());
}

void run_globalize(const PipelineConfig& config, std::ostream& log) {
  const Layout layout(config.out);
  if (!fs::exists(layout.local_graphs() / kVertexIndexFile)) {
    throw DataError(fmt::format("local graphs not found in {}; run `mgraph build-local` first",
                                layout.local_graphs().string()));
  }
  LocalGraphs local = load_graphs(layout.local_graphs());
  auto [bivalent, univalent] = apply_to_all(local.bivalent, local.univalent, config.global);
  save_global(bivalent, univalent, layout.global_graphs());

  Manifest m = manifest_for(config, "globalize", kGraphFormatVersion);
  for (const auto& [name, g] : {std::pair{"bivalent", &bivalent}, std::pair{"univalent", &univalent}}) {
    OrderedJson j = graph_stats(g->subgraphs);
    j["iterations"] = g->iterations;
    j["converged"] = g->converged;
    m.extra[name] = j;
  }
  write_manifest_file(layout.root / "global" / "manifest.json", m);
  fmt::print(log, "globalize: bivalent {} iterations{}, univalent {} iterations{}\n",
             bivalent.iterations, bivalent.converged ? "" : " (not converged)",
             univalent.iterations, univalent.converged ? "" : " (not converged)");
}

void run_gen_questions(const PipelineConfig& config, std::ostream& log) {
  if (config.lexicon.empty()) {
    throw UsageError("gen-questions needs a lexical resource (--lexicon or config 'lexicon')");
  }
  const Layout layout(config.out);
  Corpus corpus = load_stage_corpus(config);
  LexicalResource lex = LexicalResource::load(config.lexicon);
  QaGenConfig qc = config.questions;
  qc.seed = config.seed;
  QuestionSet qs = generate_questions(corpus, lex, qc);

  Manifest m = manifest_for(config, "gen-questions", kQuestionFormatVersion);
  m.extra["window_days"] = qc.window_days;
  m.extra["entity_min"] = qc.entity_min;
  m.extra["predicate_min"] = qc.predicate_min;
  m.extra["positives_per_partition"] = qc.positives_per_partition;
  m.extra["partitions"] = qs.partitions.partitions.size();
  m.extra["undated"] = qs.partitions.undated;
  m.extra["positives_before_balance"] = qs.positives_before_balance;
  m.extra["negatives_before_balance"] = qs.negatives_before_balance;
  m.extra["negative_candidates"] = qs.negatives.candidates;
  m.extra["partition_screen_rate"] = qs.negatives.partition_screen_rate();
  m.extra["corpus_screen_rate"] = qs.negatives.corpus_screen_rate();
  m.extra["without_substitutes"] = qs.negatives.without_substitutes;
  m.extra["per_quadrant"] = qs.balance.per_quadrant;
  m.extra["questions"] = qs.questions.size();
  const std::string line = m.to_line();
  {
    auto out = open_out(layout.questions_file());
    write_questions(qs.questions, out, line);
  }
  {
    auto out = open_out(layout.partitions_file());
    write_partitions(qs.partitions, out, line);
  }
  auto out = open_out(layout.evidence_file());
  write_evidence_export(qs.questions, qs.partitions, corpus, out, line);
  fmt::print(log,
             "gen-questions: {} partitions ({} undated skipped), {} positives and {} negatives "
             "before balance, {} questions ({} per quadrant); screened {:.1f}% in partition, "
             "{:.1f}% absent from corpus\n",
             qs.partitions.partitions.size(), qs.partitions.undated, qs.positives_before_balance,
             qs.negatives_before_balance, qs.questions.size(), qs.balance.per_quadrant,
             100.0 * qs.negatives.partition_screen_rate(),
             100.0 * qs.negatives.corpus_screen_rate());
}

GraphSource parse_graph_source(std::string_view text) {
  if (text == "auto") return GraphSource::Auto;
  if (text == "local") return GraphSource::Local;
  if (text == "global") return GraphSource::Global;
  throw UsageError(fmt::format("unknown graph source '{}' (expected auto, local, global)", text));
}

GraphStore open_store(const PipelineConfig& config, GraphSource source, StoreConfig store) {
  const Layout layout(config.out);
  const bool have_global = fs::exists(layout.global_graphs() / kVertexIndexFile);
  const bool have_local = fs::exists(layout.local_graphs() / kVertexIndexFile);
  store.compose_bu_uu = config.compose_bu_uu;
  switch (source) {
    case GraphSource::Global:
      if (!have_global) {
        throw DataError(fmt::format("global graphs not found in {}; run `mgraph globalize` first",
                                    layout.global_graphs().string()));
      }
      return GraphStore::open(layout.global_graphs(), store);
    case GraphSource::Local:
      if (!have_local) {
        throw DataError(fmt::format("local graphs not found in {}; run `mgraph build-local` first",
                                    layout.local_graphs().string()));
      }
      return GraphStore::open(layout.local_graphs(), store);
    case GraphSource::Auto:
      if (have_global) return GraphStore::open(layout.global_graphs(), store);
      if (have_local) return GraphStore::open(layout.local_graphs(), store);
      throw DataError(fmt::format("no graphs under {}; run `mgraph build-local` first",
                                  layout.root.string()));
  }
  throw UsageError("unknown graph source");
}

fs::path run_answer(const PipelineConfig& config, const AnswerOptions& options,
                    std::ostream& log) {
  const Layout layout(config.out);
  const auto questions = load_questions(layout);
  std::vector<AnswerRecord> records(questions.size());
  std::string model_id;
  OrderedJson extra;

  if (options.model == "external") {
    if (options.scores.empty()) throw UsageError("--model external needs --scores");
    std::ifstream in(options.scores, std::ios::binary);
    if (!in) throw DataError(fmt::format("cannot read scores file {}", options.scores.string()));
    model_id = "external_" + (options.name.empty() ? std::string("scores") : options.name);
    records = external_scores(questions, in, model_id, options.scores.string());
    extra["scores_hash"] = file_hash(options.scores);
  } else if (options.model == "exact" || options.model == "graph") {
    const auto partitions = load_partitions(layout);
    const Corpus corpus = load_stage_corpus(config);
    std::map<int, std::vector<Evidence>> evidence;
    for (const auto& p : partitions.partitions) evidence[p.id] = resolve_evidence(p.evidence, corpus);
    auto evidence_for = [&](const Question& q) -> const std::vector<Evidence>& {
      auto it = evidence.find(q.partition_id);
      if (it == evidence.end()) {
        throw DataError(fmt::format("question {} names unknown partition {}", q.id, q.partition_id));
      }
      return it->second;
    };

    if (options.model == "exact") {
      model_id = "exact";
      for (std::size_t i = 0; i < questions.size(); ++i) {
        records[i] = answer_exact_match(questions[i], evidence_for(questions[i]));
      }
    } else {
      const GraphStore store = open_store(config, options.graphs);
      std::vector<ComponentSet> parts;
      if (options.components.bb) parts.push_back({true, false, false});
      if (options.components.bu) parts.push_back({false, true, false});
      if (options.components.uu) parts.push_back({false, false, true});
      if (parts.empty()) throw UsageError("--components must name at least one of bb, uu, bu");
      model_id = "graph_" + options.components.to_string();
      std::replace(model_id.begin(), model_id.end(), ',', '+');
      parallel_for(questions.size(), config.threads, [&](std::size_t i) {
        std::vector<AnswerRecord> per_component;
        for (const auto& c : parts) {
          per_component.push_back(answer_graph(questions[i], evidence_for(questions[i]), store, c));
        }
        records[i] = combine_components(per_component, model_id);
      });
      extra["components"] = options.components.to_string();
    }
  } else {
    throw UsageError(fmt::format("unknown model '{}' (expected exact, graph, external)",
                                 options.model));
  }

  Manifest m = manifest_for(config, "answer", kAnswerFormatVersion);
  m.extra = extra;
  m.extra["model"] = model_id;
  const fs::path path = layout.answers_dir() / (model_id + ".jsonl");
  auto out = open_out(path);
  write_answers(records, out, m.to_line());
  const auto answered = std::count_if(records.begin(), records.end(),
                                      [](const auto& r) { return r.confidence > 0.0; });
  fmt::print(log, "answer: {} answered {} of {} questions -> {}\n", model_id, answered,
             questions.size(), path.string());
  return path;
}

void run_evaluate(const PipelineConfig& config, const EvaluateOptions& options, std::ostream& out) {
  const Layout layout(config.out);
  const auto questions = load_questions(layout);
  std::vector<fs::path> files;
  if (fs::is_directory(layout.answers_dir())) {
    for (const auto& e : fs::directory_iterator(layout.answers_dir())) {
      if (e.path().extension() == ".jsonl") files.push_back(e.path());
    }
  }
  if (files.empty()) {
    throw DataError(fmt::format("no answer files in {}; run `mgraph answer` first",
                                layout.answers_dir().string()));
  }
  std::sort(files.begin(), files.end());

  struct Run {
    std::string name;
    fs::path dir;
    std::vector<Question> questions;
  };
  std::vector<Run> runs{{"all", layout.report_dir(), questions}};
  if (options.filtered) {
    const GraphStore store = open_store(config, options.graphs);
    Rng rng(mix_seed(config.seed, 0x66696c746572ull));
    runs.push_back({"filtered", layout.report_dir() / "filtered", filter_questions(questions, store, rng)});
  }

  for (const auto& run : runs) {
    const GoldLabels gold = gold_labels(run.questions);
    std::vector<ModelSummary> summaries;
    for (const auto& file : files) {
      std::ifstream in(file, std::ios::binary);
      auto all = read_answers(in, file.string());
      std::vector<AnswerRecord> records;
      for (auto& r : all) {
        if (gold.contains(r.question_id)) records.push_back(std::move(r));
      }
      const auto curve = pr_curve(records, gold);
      auto csv = open_out(run.dir / (file.stem().string() + ".csv"));
      write_pr_csv(curve, csv);
      ModelSummary s;
      s.model = file.stem().string();
      s.questions = run.questions.size();
      s.answered = static_cast<std::size_t>(std::count_if(
          records.begin(), records.end(), [](const auto& r) { return r.confidence > 0.0; }));
      s.max_recall = curve.max_recall;
      for (auto k : options.ks) s.at_k.emplace_back(k, accuracy_at_k(records, gold, k));
      summaries.push_back(std::move(s));
    }
    std::ostringstream table;
    write_summary(summaries, table);
    auto summary = open_out(run.dir / "summary.txt");
    summary << table.str();
    fmt::print(out, "{} questions ({}):\n{}", run.name, run.questions.size(), table.str());
  }
  Manifest m = manifest_for(config, "evaluate", kAnswerFormatVersion);
  m.extra["models"] = files.size();
  m.extra["filtered"] = options.filtered;
  write_manifest_file(layout.report_dir() / "manifest.json", m);
}

QueryResult run_query(const PipelineConfig& config, const QueryOptions& options, std::ostream& out) {
  auto premise_types = parse_types(options.premise_types);
  auto hypothesis_types = parse_types(options.hypothesis_types);
  const TypedPredicate premise = query_predicate(options.premise, premise_types);
  const TypedPredicate hypothesis = query_predicate(options.hypothesis, hypothesis_types);
  if (hypothesis.valency() > premise.valency()) {
    throw UsageError("the hypothesis may not have more arguments than the premise");
  }
  const GraphStore store = open_store(config, options.graphs);

  const std::vector<std::string> premise_args =
      premise.valency() == 2 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x"};
  QueryResult best;
  std::optional<ArgMap> best_map;
  for (const auto& map : valid_arg_maps(premise.valency(), hypothesis.valency())) {
    auto r = store.entailment_score(premise, premise_args, hypothesis, map.apply(premise_args));
    if (!best_map || r.score > best.score) {
      best = std::move(r);
      best_map = map;
    }
  }
  fmt::print(out, "premise: {}\nhypothesis: {}\n", premise.key(), hypothesis.key());
  fmt::print(out, "score: {}\nargmap: {}\nbacked_off: {}\n", format_double(best.score),
             best_map->to_string(), best.backed_off ? "true" : "false");
  fmt::print(out, "path:{}\n", best.path.empty() ? " (none)" : "");
  for (const auto& e : best.path) {
    fmt::print(out, "  {} -> {} [{} {}] {} in {}\n", e.premise.key(), e.hypothesis.key(),
               to_string(e.kind), e.arg_map.to_string(), format_double(e.score),
               e.signature.file_stem());
  }
  return best;
}

}  // namespace mgraph
