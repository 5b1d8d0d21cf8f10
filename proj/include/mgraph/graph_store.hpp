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


// Query-time access to built graphs.
//
// A query asks whether premise(args) entails hypothesis(args'). It is routed
// to the subgraph of the premise's type signature; when the premise or the
// hypothesis is missing there, every subgraph holding both untyped predicates
// is consulted and the edge scores found are averaged (back-off).

#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mgraph/graph_io.hpp"
#include "mgraph/local_graph.hpp"

namespace mgraph {

// Which edge kinds a query may use. A BU edge followed by a UU hop counts as
// BU: the hop only carries the unary on within its own type.
struct ComponentSet {
  bool bb = true;
  bool bu = true;
  bool uu = true;

  // "bb,uu,bu" in any order; throws UsageError on unknown names.
  static ComponentSet parse(std::string_view text);
  bool allows(EdgeKind kind) const;
  std::string to_string() const;
};

struct StoreConfig {
  ComponentSet components;
  // Allow one UU hop after a BU edge.
  bool compose_bu_uu = true;
};

struct PathEdge {
  TypeSignature signature;
  TypedPredicate premise;
  TypedPredicate hypothesis;
  ArgMap arg_map;
  double score = 0.0;
  EdgeKind kind = EdgeKind::UU;
};

struct QueryResult {
  double score = 0.0;
  // One edge, or a BU edge followed by a UU edge. Empty for reflexive and
  // back-off answers.
  std::vector<PathEdge> path;
  bool backed_off = false;
};

class GraphStore {
 public:
  // Reads the vertex index in `dir`; subgraph files load on first use.
  static GraphStore open(const std::filesystem::path& dir, StoreConfig config = {});
  static GraphStore from_graphs(LocalGraphs graphs, StoreConfig config = {});

  GraphStore(GraphStore&&) = default;
  GraphStore& operator=(GraphStore&&) = default;

  const StoreConfig& config() const { return config_; }
  void set_components(ComponentSet components) { config_.components = components; }

  std::vector<TypeSignature> signatures() const;
  // True if the typed predicate is a vertex of any subgraph.
  bool has_vertex(const TypedPredicate& p) const;
  // Loads the subgraph if needed; nullptr when the store has no such graph.
  const TypedSubgraph* subgraph(const TypeSignature& sig) const;

  // Arguments are entity keys. Identical untyped predicates with identical
  // arguments score 1.0. Throws DataError if a graph file fails to load.
  QueryResult entailment_score(const TypedPredicate& premise,
                               const std::vector<std::string>& premise_args,
                               const TypedPredicate& hypothesis,
                               const std::vector<std::string>& hypothesis_args) const;
  // Same, restricted to `components` instead of the configured set.
  QueryResult entailment_score(const TypedPredicate& premise,
                               const std::vector<std::string>& premise_args,
                               const TypedPredicate& hypothesis,
                               const std::vector<std::string>& hypothesis_args,
                               const ComponentSet& components) const;

  // Mean over subgraphs holding both untyped predicates of the best edge
  // score between them (subgraphs with no such edge are skipped).
  QueryResult backoff_score(const TypedPredicate& premise,
                            const std::vector<std::string>& premise_args,
                            const TypedPredicate& hypothesis,
                            const std::vector<std::string>& hypothesis_args) const;
  QueryResult backoff_score(const TypedPredicate& premise,
                            const std::vector<std::string>& premise_args,
                            const TypedPredicate& hypothesis,
                            const std::vector<std::string>& hypothesis_args,
                            const ComponentSet& components) const;

 private:
  struct Slot {
    std::filesystem::path file;
    std::once_flag once;
    std::unique_ptr<TypedSubgraph> graph;
  };

  GraphStore() = default;
  void index_vertices(const std::vector<VertexIndexEntry>& entries);

  // Best direct or composed path inside the premise's subgraph, or nullopt
  // when the typed lookup fails.
  std::optional<QueryResult> typed_score(const TypedPredicate& premise,
                                         const TypedPredicate& hypothesis,
                                         const std::vector<ArgMap>& maps,
                                         const ComponentSet& components) const;

  StoreConfig config_;
  std::map<TypeSignature, std::unique_ptr<Slot>> slots_;
  std::map<std::string, std::vector<std::pair<TypeSignature, TypedPredicate>>> untyped_;
};

// Maps under which premise_args yield hypothesis_args.
std::vector<ArgMap> consistent_maps(const std::vector<std::string>& premise_args,
                                    const std::vector<std::string>& hypothesis_args);

}  // namespace mgraph
