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


// Stage runners behind the command-line tool. Each stage reads the previous
// stage's artifacts from the output directory and writes its own:
//
//   <out>/corpus/      corpus.jsonl, stats.json             (ingest)
//   <out>/local/       counts, graphs/                      (build-local)
//   <out>/global/      graphs/ with .prov sidecars          (globalize)
//   <out>/questions/   questions, partitions, evidence      (gen-questions)
//   <out>/answers/     <model>.jsonl                        (answer)
//   <out>/report/      <model>.csv, summary.txt             (evaluate)

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mgraph/global_graph.hpp"
#include "mgraph/graph_store.hpp"
#include "mgraph/local_graph.hpp"
#include "mgraph/qa_gen.hpp"

namespace mgraph {

struct PipelineConfig {
  std::filesystem::path corpus;
  std::filesystem::path types;
  std::filesystem::path lexicon;
  std::filesystem::path out = "out";
  std::uint64_t seed = 1;
  unsigned threads = 0;
  LocalGraphConfig local;
  GlobalConfig global;
  QaGenConfig questions;
  bool compose_bu_uu = true;

  // Keys mirror to_json(); relative paths resolve against `base_dir`.
  // Unknown keys and out-of-range values raise UsageError.
  static PipelineConfig from_json(const nlohmann::json& j,
                                  const std::filesystem::path& base_dir = {});
  static PipelineConfig load(const std::filesystem::path& file);

  nlohmann::ordered_json to_json() const;
  // Hash of the settings that shape artifacts (paths excluded).
  std::string hash() const;
  void validate() const;
};

// Artifact locations under config.out.
struct Layout {
  explicit Layout(const std::filesystem::path& out) : root(out) {}

  std::filesystem::path corpus_file() const { return root / "corpus" / "corpus.jsonl"; }
  std::filesystem::path corpus_stats() const { return root / "corpus" / "stats.json"; }
  std::filesystem::path local_dir() const { return root / "local"; }
  std::filesystem::path local_graphs() const { return root / "local" / "graphs"; }
  std::filesystem::path global_graphs() const { return root / "global" / "graphs"; }
  std::filesystem::path questions_file() const { return root / "questions" / "questions.jsonl"; }
  std::filesystem::path partitions_file() const { return root / "questions" / "partitions.jsonl"; }
  std::filesystem::path evidence_file() const {
    return root / "questions" / "evidence_export.jsonl";
  }
  std::filesystem::path answers_dir() const { return root / "answers"; }
  std::filesystem::path report_dir() const { return root / "report"; }

  std::filesystem::path root;
};

void run_ingest(const PipelineConfig& config, std::ostream& log);
void run_build_local(const PipelineConfig& config, std::ostream& log);
void run_globalize(const PipelineConfig& config, std::ostream& log);
void run_gen_questions(const PipelineConfig& config, std::ostream& log);

enum class GraphSource { Auto, Local, Global };
GraphSource parse_graph_source(std::string_view text);

struct AnswerOptions {
  std::string model = "graph";  // exact | graph | external
  ComponentSet components;
  GraphSource graphs = GraphSource::Auto;
  std::filesystem::path scores;  // external model input
  std::string name;              // external model id suffix
};

// Returns the written answer file.
std::filesystem::path run_answer(const PipelineConfig& config, const AnswerOptions& options,
                                 std::ostream& log);

struct EvaluateOptions {
  std::vector<std::size_t> ks = {10, 50, 100};
  // Also score on questions whose predicate is a graph vertex, rebalanced.
  bool filtered = false;
  GraphSource graphs = GraphSource::Auto;
};

void run_evaluate(const PipelineConfig& config, const EvaluateOptions& options, std::ostream& out);

struct QueryOptions {
  std::string premise;
  std::string hypothesis;
  std::vector<std::string> premise_types;
  std::vector<std::string> hypothesis_types;
  GraphSource graphs = GraphSource::Auto;
};

// Prints the best score over all argument maps and its path.
QueryResult run_query(const PipelineConfig& config, const QueryOptions& options, std::ostream& out);

// Opens the graphs a later stage should use; names the missing stage when
// none exist.
GraphStore open_store(const PipelineConfig& config, GraphSource source, StoreConfig store = {});

}  // namespace mgraph
