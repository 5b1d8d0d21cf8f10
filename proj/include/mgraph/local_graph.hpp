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


// Typed entailment subgraphs scored with balanced inclusion.
//
// A bivalent subgraph with signature (t1, t2) holds the binaries whose slots
// are typed (t1, t2) as premises. Its BB edges go to binaries of (t1, t2)
// under the identity map and to binaries of (t2, t1) under the swap map; its
// BU edges go from a binary slot to unaries of that slot's type. A univalent
// subgraph for type t holds UU edges between unaries of t.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mgraph/corpus.hpp"
#include "mgraph/features.hpp"
#include "mgraph/types.hpp"

namespace mgraph {

struct EntailmentEdge {
  // Vertex indexes within the owning subgraph.
  std::uint32_t premise = 0;
  std::uint32_t hypothesis = 0;
  ArgMap arg_map;
  double score = 0.0;
  EdgeKind kind = EdgeKind::UU;

  bool operator==(const EntailmentEdge&) const = default;
};

struct TypedSubgraph {
  TypeSignature signature;
  // Sorted and unique.
  std::vector<TypedPredicate> vertices;
  // Sorted by (premise, hypothesis, arg_map); at most one edge per triple.
  std::vector<EntailmentEdge> edges;

  std::optional<std::uint32_t> find_vertex(const TypedPredicate& p) const;
  std::span<const EntailmentEdge> out_edges(std::uint32_t premise) const;
  const EntailmentEdge* find_edge(std::uint32_t premise, std::uint32_t hypothesis,
                                  const ArgMap& map) const;
  std::size_t edge_count(EdgeKind kind) const;

  // Sorts vertices and edges into canonical order, remapping indexes.
  void canonicalize();
  // Throws ContractError on an out-of-range endpoint, a kind that disagrees
  // with the valencies, a map that does not fit them, a score outside [0, 1],
  // a self edge, or an edge kind not allowed in this family.
  void check_invariants() const;

  bool operator==(const TypedSubgraph&) const = default;
};

using GraphSet = std::map<TypeSignature, TypedSubgraph>;

struct LocalGraphConfig {
  FeatureConfig features;
  // Edges scoring below this are not stored.
  double edge_threshold = 0.01;
  // 0 = one worker per hardware thread.
  unsigned threads = 0;
};

// Vectors grouped for subgraph construction.
class FeatureIndex {
 public:
  FeatureIndex(const Corpus& corpus, const CountStore& pair_store, const VectorSet& vectors);

  const Corpus& corpus() const { return *corpus_; }
  const VectorSet& vectors() const { return *vectors_; }

  // Signatures with at least one binary, and types with at least one unary.
  std::vector<TypeSignature> bivalent_signatures() const;
  std::vector<EntityType> univalent_types() const;

  // Every corpus predicate of the signature / type, vectors or not.
  const std::vector<PredicateRef>& binaries(const TypeSignature& sig) const;
  const std::vector<PredicateRef>& unaries(const EntityType& type) const;

  const SparseVector* pair_vector(PredicateRef p) const;
  const SparseVector* swapped_pair_vector(PredicateRef p) const;
  const SparseVector* slot_vector(PredicateRef p, int slot) const;

 private:
  const Corpus* corpus_;
  const VectorSet* vectors_;
  std::map<TypeSignature, std::vector<PredicateRef>> binaries_;
  std::map<EntityType, std::vector<PredicateRef>> unaries_;
  std::map<PredicateRef, SparseVector> swapped_;
};

TypedSubgraph build_bivalent(const FeatureIndex& index, const TypeSignature& signature,
                             const LocalGraphConfig& config = {});
TypedSubgraph build_univalent(const FeatureIndex& index, const EntityType& type,
                              const LocalGraphConfig& config = {});

struct LocalGraphs {
  GraphSet bivalent;
  GraphSet univalent;
};

// Builds every subgraph; subgraphs are independent and built in parallel.
LocalGraphs build_all(const FeatureIndex& index, const LocalGraphConfig& config = {});

// Counting, vectors and graphs in one call.
struct LocalModel {
  CountStore pair_counts{CountMode::Pair};
  CountStore slot_counts{CountMode::Slot};
  VectorSet vectors;
  LocalGraphs graphs;
};
LocalModel build_local(const Corpus& corpus, const LocalGraphConfig& config = {});

// Runs fn(i) for i in [0, n) on up to `threads` workers (0 = hardware).
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace mgraph
