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


// Soft-constraint refinement of local edge scores.
//
// Minimizes, over the scores W of every edge in a family of subgraphs,
//
//   sum_e (W_e - L_e)^2 + sum_ties w * (W_a - W_b)^2
//
// where L are the local scores. Paraphrase ties (weight lambda_para) join the
// out-edges p->r and q->r (same map) of a paraphrase pair p, q inside one
// subgraph. Cross-graph ties (weight lambda_cross) join edges with the same
// untyped premise, untyped hypothesis and map in different subgraphs.
//
// The objective is a positive definite quadratic; it is minimized by
// Jacobi-preconditioned conjugate gradients starting from L, which decreases
// the objective at every step and reaches the exact minimizer of an n-edge
// problem in at most n steps.

#pragma once

#include <filesystem>
#include <map>
#include <utility>
#include <vector>

#include "mgraph/graph_io.hpp"
#include "mgraph/local_graph.hpp"

namespace mgraph {

struct GlobalConfig {
  double lambda_para = 1.0;
  double lambda_cross = 0.5;
  double paraphrase_tau = 0.9;
  int iterations = 20;
  double convergence_eps = 1e-4;

  // Throws UsageError on out-of-range values.
  void validate() const;
};

// Vertex pairs (a < b) joined by identity-map edges scoring >= tau both ways.
std::vector<std::pair<std::uint32_t, std::uint32_t>> find_paraphrases(const TypedSubgraph& graph,
                                                                       double tau);

struct GlobalGraph {
  GraphSet subgraphs;
  std::map<TypeSignature, SubgraphProvenance> provenance;
  int iterations = 0;
  bool converged = true;
  // Objective value after each iteration; entry 0 is the starting point.
  std::vector<double> objective_trace;
};

// Scores change; vertices, edge direction, kind and map never do.
GlobalGraph globalize(const GraphSet& family, const GlobalConfig& config = {});

// Runs globalize on each family separately.
std::pair<GlobalGraph, GlobalGraph> apply_to_all(const GraphSet& bivalent,
                                                 const GraphSet& univalent,
                                                 const GlobalConfig& config = {});

// Objective value of `current` scores against the `local` ones (same edges).
double global_objective(const GraphSet& local, const GraphSet& current,
                        const GlobalConfig& config = {});

// Graphs, provenance sidecars and the vertex index of both families.
void save_global(const GlobalGraph& bivalent, const GlobalGraph& univalent,
                 const std::filesystem::path& dir);

}  // namespace mgraph
