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


// mgraph: builds multivalent entailment graphs from a proposition corpus and
// evaluates them on generated true/false questions.
//
// Exit status: 0 success, 1 usage error, 2 data error, 3 format version
// mismatch.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "mgraph/common.hpp"
#include "mgraph/pipeline.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitVersion = 3;

struct Flags {
  std::string config;
  std::string out;
  std::string corpus;
  std::string types;
  std::string lexicon;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  bool verbose = false;

  std::optional<int> window;
  std::optional<std::uint64_t> entity_min;
  std::optional<std::uint64_t> predicate_min;
  std::optional<std::size_t> per_partition;
  std::optional<double> edge_threshold;
  std::optional<double> lambda_para;
  std::optional<double> lambda_cross;
  std::optional<int> iterations;
  bool no_compose = false;
};

mgraph::PipelineConfig make_config(const Flags& f) {
  mgraph::PipelineConfig c;
  if (!f.config.empty()) c = mgraph::PipelineConfig::load(f.config);
  if (!f.out.empty()) c.out = f.out;
  if (!f.corpus.empty()) c.corpus = f.corpus;
  if (!f.types.empty()) c.types = f.types;
  if (!f.lexicon.empty()) c.lexicon = f.lexicon;
  if (f.seed) c.seed = *f.seed;
  if (f.threads) c.threads = *f.threads;
  if (f.window) c.questions.window_days = *f.window;
  if (f.entity_min) c.questions.entity_min = *f.entity_min;
  if (f.predicate_min) c.questions.predicate_min = *f.predicate_min;
  if (f.per_partition) c.questions.positives_per_partition = *f.per_partition;
  if (f.edge_threshold) c.local.edge_threshold = *f.edge_threshold;
  if (f.lambda_para) c.global.lambda_para = *f.lambda_para;
  if (f.lambda_cross) c.global.lambda_cross = *f.lambda_cross;
  if (f.iterations) c.global.iterations = *f.iterations;
  if (f.no_compose) c.compose_bu_uu = false;
  c.validate();
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multivalent entailment graph builder and question-answering evaluator"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--config", f.config, "JSON config file (docs/formats.md)");
  app.add_option("--out", f.out, "Output directory (default: out)");
  app.add_option("--seed", f.seed, "Random seed recorded in every manifest");
  app.add_option("--threads", f.threads, "Worker threads (0 = all cores)");
  app.add_flag("-v,--verbose", f.verbose, "Debug logging");

  auto* ingest = app.add_subcommand("ingest", "Normalize and index a proposition file");
  ingest->add_option("--corpus", f.corpus, "Proposition file (JSON lines)");
  ingest->add_option("--types", f.types, "Entity type inventory, one label per line");

  auto* build = app.add_subcommand("build-local", "Count features and build typed subgraphs");
  build->add_option("--types", f.types, "Entity type inventory used at ingest");
  build->add_option("--edge-threshold", f.edge_threshold, "Drop edges scoring below this");

  auto* global = app.add_subcommand("globalize", "Refine local scores with soft constraints");
  global->add_option("--lambda-para", f.lambda_para, "Paraphrase tie weight");
  global->add_option("--lambda-cross", f.lambda_cross, "Cross-graph tie weight");
  global->add_option("--iterations", f.iterations, "Iteration budget");

  auto* gen = app.add_subcommand("gen-questions", "Generate balanced true/false questions");
  gen->add_option("--lexicon", f.lexicon, "Directory with WordNet index/data files");
  gen->add_option("--types", f.types, "Entity type inventory used at ingest");
  gen->add_option("--window", f.window, "Partition window in days");
  gen->add_option("--entity-min", f.entity_min, "Mentions needed in a partition");
  gen->add_option("--predicate-min", f.predicate_min, "Corpus occurrences needed by a predicate");
  gen->add_option("--per-partition", f.per_partition, "Positives sampled per partition");

  mgraph::AnswerOptions answer_opts;
  std::string components = "bb,uu,bu";
  std::string answer_graphs = "auto";
  std::string scores;
  auto* answer = app.add_subcommand("answer", "Answer the generated questions with one model");
  answer->add_option("--model", answer_opts.model, "exact | graph | external")
      ->check(CLI::IsMember({"exact", "graph", "external"}));
  answer->add_option("--components", components, "Edge kinds for --model graph");
  answer->add_option("--graphs", answer_graphs, "auto | local | global");
  answer->add_option("--scores", scores, "External score file for --model external");
  answer->add_option("--name", answer_opts.name, "Name for an external model");
  answer->add_option("--types", f.types, "Entity type inventory used at ingest");
  answer->add_flag("--no-compose", f.no_compose, "Disable BU then UU paths");

  mgraph::EvaluateOptions eval_opts;
  std::string eval_graphs = "auto";
  auto* evaluate = app.add_subcommand("evaluate", "Write PR curves and accuracy@K reports");
  evaluate->add_option("--k", eval_opts.ks, "Cutoffs for accuracy@K")->delimiter(',');
  evaluate->add_flag("--filtered", eval_opts.filtered,
                     "Also report on questions whose predicate is a graph vertex");
  evaluate->add_option("--graphs", eval_graphs, "auto | local | global (for --filtered)");

  mgraph::QueryOptions query_opts;
  std::vector<std::string> both_types;
  std::string query_graphs = "auto";
  auto* query = app.add_subcommand("query", "Score one premise/hypothesis pair");
  query->add_option("premise", query_opts.premise, "Premise name, e.g. kill.2 or buy")->required();
  query->add_option("hypothesis", query_opts.hypothesis, "Hypothesis name, e.g. die.1")->required();
  query->add_option("--type", both_types, "Slot types for both predicates (comma separated)");
  query->add_option("--premise-types", query_opts.premise_types, "Premise slot types");
  query->add_option("--hypothesis-types", query_opts.hypothesis_types, "Hypothesis slot types");
  query->add_option("--graphs", query_graphs, "auto | local | global");
  query->add_flag("--no-compose", f.no_compose, "Disable BU then UU paths");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  spdlog::set_level(f.verbose ? spdlog::level::debug : spdlog::level::warn);
  spdlog::set_pattern("%^%l%$: %v");

  try {
    const mgraph::PipelineConfig config = make_config(f);
    if (*ingest) {
      mgraph::run_ingest(config, std::cout);
    } else if (*build) {
      mgraph::run_build_local(config, std::cout);
    } else if (*global) {
      mgraph::run_globalize(config, std::cout);
    } else if (*gen) {
      mgraph::run_gen_questions(config, std::cout);
    } else if (*answer) {
      answer_opts.components = mgraph::ComponentSet::parse(components);
      answer_opts.graphs = mgraph::parse_graph_source(answer_graphs);
      answer_opts.scores = scores;
      mgraph::run_answer(config, answer_opts, std::cout);
    } else if (*evaluate) {
      eval_opts.graphs = mgraph::parse_graph_source(eval_graphs);
      mgraph::run_evaluate(config, eval_opts, std::cout);
    } else if (*query) {
      if (query_opts.premise_types.empty()) query_opts.premise_types = both_types;
      if (query_opts.hypothesis_types.empty()) query_opts.hypothesis_types = both_types;
      query_opts.graphs = mgraph::parse_graph_source(query_graphs);
      mgraph::run_query(config, query_opts, std::cout);
    }
  } catch (const mgraph::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mgraph::VersionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVersion;
  } catch (const mgraph::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return 0;
}
