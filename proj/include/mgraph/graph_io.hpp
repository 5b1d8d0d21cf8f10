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


// Text serialization of typed subgraphs.
//
//   mgraph-graph<TAB>1<TAB>signature=<sig><TAB>vertices=<n><TAB>edges=<m>
//   V<TAB><predicate key>                                  (n lines, sorted)
//   E<TAB><premise><TAB><hypothesis><TAB><kind><TAB><map><TAB><score>
//                                                          (m lines, sorted)
//
// Scores use the shortest decimal form that round-trips. docs/formats.md has
// the full description; tests/data/golden holds a reference file.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mgraph/local_graph.hpp"

namespace mgraph {

inline constexpr int kGraphFormatVersion = 1;

void write_graph(const TypedSubgraph& graph, std::ostream& out);
// Throws DataError on malformed input and VersionError on another version.
TypedSubgraph read_graph(std::istream& in, const std::string& source = "graph");

std::filesystem::path graph_path(const std::filesystem::path& dir, const TypeSignature& sig);
void save_graph(const TypedSubgraph& graph, const std::filesystem::path& dir);
TypedSubgraph load_graph(const std::filesystem::path& file);

// Maps the type-free identity of each vertex to the subgraphs holding it.
struct VertexIndexEntry {
  std::string untyped_key;
  TypeSignature signature;
  TypedPredicate vertex;

  auto operator<=>(const VertexIndexEntry&) const = default;
};

inline constexpr const char* kVertexIndexFile = "vertex_index.tsv";

std::vector<VertexIndexEntry> vertex_index(const LocalGraphs& graphs);
void write_vertex_index(const std::vector<VertexIndexEntry>& entries, std::ostream& out);
std::vector<VertexIndexEntry> read_vertex_index(const std::filesystem::path& file);

// Writes every subgraph plus the vertex index into `dir`.
void save_graphs(const LocalGraphs& graphs, const std::filesystem::path& dir);
// Loads every *.graph file in `dir`.
LocalGraphs load_graphs(const std::filesystem::path& dir);

// Per-edge score history written next to globalized graphs (<stem>.prov).
struct EdgeProvenance {
  TypedPredicate premise;
  TypedPredicate hypothesis;
  ArgMap arg_map;
  double local_score = 0.0;
  double final_score = 0.0;

  bool operator==(const EdgeProvenance&) const = default;
};

struct SubgraphProvenance {
  TypeSignature signature;
  int iterations = 0;
  bool converged = true;
  std::vector<EdgeProvenance> edges;

  bool operator==(const SubgraphProvenance&) const = default;
};

std::filesystem::path provenance_path(const std::filesystem::path& dir, const TypeSignature& sig);
void write_provenance(const SubgraphProvenance& prov, std::ostream& out);
SubgraphProvenance read_provenance(std::istream& in, const std::string& source = "provenance");

}  // namespace mgraph
