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


#include "mgraph/global_graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <tuple>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

namespace mgraph {

namespace {

struct Tie {
  std::size_t a;
  std::size_t b;
  double weight;
};

// Flattened view of a family: one variable per edge, in map/edge order.
struct Problem {
  std::vector<std::pair<const TypedSubgraph*, std::size_t>> edges;
  std::vector<double> local;
  std::vector<Tie> ties;
  std::vector<double> diagonal;
};

Problem build_problem(const GraphSet& family, const GlobalConfig& config) {
  Problem prob;
  std::map<const TypedSubgraph*, std::size_t> offset;
  for (const auto& [sig, g] : family) {
    offset[&g] = prob.edges.size();
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      prob.edges.emplace_back(&g, i);
      prob.local.push_back(g.edges[i].score);
    }
  }

  if (config.lambda_para > 0.0) {
    for (const auto& [sig, g] : family) {
      const std::size_t base = offset[&g];
      for (auto [p, q] : find_paraphrases(g, config.paraphrase_tau)) {
        auto p_edges = g.out_edges(p);
        const std::size_t p_base = base + static_cast<std::size_t>(p_edges.data() - g.edges.data());
        for (std::size_t k = 0; k < p_edges.size(); ++k) {
          const auto& e = p_edges[k];
          if (e.hypothesis == q) continue;
          if (const auto* other = g.find_edge(q, e.hypothesis, e.arg_map)) {
            prob.ties.push_back({p_base + k, base + static_cast<std::size_t>(other - g.edges.data()),
                                 config.lambda_para});
          }
        }
      }
    }
  }

  if (config.lambda_cross > 0.0) {
    std::map<std::tuple<std::string, std::string, ArgMap>, std::vector<std::size_t>> groups;
    for (std::size_t v = 0; v < prob.edges.size(); ++v) {
      const auto& [g, i] = prob.edges[v];
      const auto& e = g->edges[i];
      groups[{g->vertices[e.premise].untyped_key(), g->vertices[e.hypothesis].untyped_key(),
              e.arg_map}]
          .push_back(v);
    }
    for (const auto& [key, members] : groups) {
      for (std::size_t x = 0; x < members.size(); ++x) {
        for (std::size_t y = x + 1; y < members.size(); ++y) {
          if (prob.edges[members[x]].first == prob.edges[members[y]].first) continue;
          prob.ties.push_back({members[x], members[y], config.lambda_cross});
        }
      }
    }
  }

  prob.diagonal.assign(prob.edges.size(), 1.0);
  for (const auto& t : prob.ties) {
    prob.diagonal[t.a] += t.weight;
    prob.diagonal[t.b] += t.weight;
  }
  return prob;
}

// y = A x with A = I + weighted Laplacian of the ties.
void apply_matrix(const Problem& prob, const std::vector<double>& x, std::vector<double>& y) {
  y = x;
  for (const auto& t : prob.ties) {
    const double d = t.weight * (x[t.a] - x[t.b]);
    y[t.a] += d;
    y[t.b] -= d;
  }
}

double objective(const Problem& prob, const std::vector<double>& w) {
  double f = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) f += (w[i] - prob.local[i]) * (w[i] - prob.local[i]);
  for (const auto& t : prob.ties) f += t.weight * (w[t.a] - w[t.b]) * (w[t.a] - w[t.b]);
  return f;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

void GlobalConfig::validate() const {
  auto bad = [](double x) { return !std::isfinite(x) || x < 0.0; };
  if (bad(lambda_para) || bad(lambda_cross)) {
    throw UsageError("globalization weights must be finite and non-negative");
  }
  if (!(paraphrase_tau > 0.0 && paraphrase_tau <= 1.0)) {
    throw UsageError("paraphrase_tau must lie in (0, 1]");
  }
  if (iterations < 1) throw UsageError("iterations must be at least 1");
  if (!(convergence_eps > 0.0) || !std::isfinite(convergence_eps)) {
    throw UsageError("convergence_eps must be positive");
  }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> find_paraphrases(const TypedSubgraph& graph,
                                                                       double tau) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const auto& e : graph.edges) {
    if (e.premise > e.hypothesis || e.score < tau) continue;
    const auto& p = graph.vertices[e.premise];
    const auto& q = graph.vertices[e.hypothesis];
    if (p.valency() != q.valency() || p.slot_types != q.slot_types) continue;
    if (e.arg_map != ArgMap::identity(p.valency())) continue;
    const auto* back = graph.find_edge(e.hypothesis, e.premise, e.arg_map);
    if (back != nullptr && back->score >= tau) out.emplace_back(e.premise, e.hypothesis);
  }
  return out;
}

GlobalGraph globalize(const GraphSet& family, const GlobalConfig& config) {
  config.validate();
  const Problem prob = build_problem(family, config);
  const std::size_t n = prob.edges.size();

  std::vector<double> w = prob.local;
  std::vector<double> r(n), z(n), p(n), ap(n);
  apply_matrix(prob, w, ap);
  for (std::size_t i = 0; i < n; ++i) r[i] = prob.local[i] - ap[i];
  for (std::size_t i = 0; i < n; ++i) z[i] = r[i] / prob.diagonal[i];
  p = z;
  double rz = dot(r, z);

  GlobalGraph out;
  out.objective_trace.push_back(objective(prob, w));
  out.converged = false;
  for (int it = 1; it <= config.iterations; ++it) {
    out.iterations = it;
    if (rz <= 0.0) {
      out.converged = true;
      break;
    }
    apply_matrix(prob, p, ap);
    const double alpha = rz / dot(p, ap);
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] += alpha * p[i];
      r[i] -= alpha * ap[i];
      delta = std::max(delta, std::abs(alpha * p[i]));
    }
    out.objective_trace.push_back(objective(prob, w));
    if (delta < config.convergence_eps) {
      out.converged = true;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) z[i] = r[i] / prob.diagonal[i];
    const double rz_next = dot(r, z);
    const double beta = rz_next / rz;
    for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    rz = rz_next;
  }
  if (!out.converged) {
    spdlog::warn("globalization did not converge within {} iterations", config.iterations);
  }

  out.subgraphs = family;
  std::size_t v = 0;
  for (auto& [sig, g] : out.subgraphs) {
    auto& prov = out.provenance[sig];
    prov.signature = sig;
    prov.iterations = out.iterations;
    prov.converged = out.converged;
    for (auto& e : g.edges) {
      const double local = e.score;
      e.score = std::clamp(w[v++], 0.0, 1.0);
      prov.edges.push_back({g.vertices[e.premise], g.vertices[e.hypothesis], e.arg_map, local,
                            e.score});
    }
  }
  return out;
}

std::pair<GlobalGraph, GlobalGraph> apply_to_all(const GraphSet& bivalent,
                                                 const GraphSet& univalent,
                                                 const GlobalConfig& config) {
  return {globalize(bivalent, config), globalize(univalent, config)};
}

double global_objective(const GraphSet& local, const GraphSet& current,
                        const GlobalConfig& config) {
  const Problem prob = build_problem(local, config);
  std::vector<double> w;
  w.reserve(prob.edges.size());
  for (const auto& [sig, g] : current) {
    for (const auto& e : g.edges) w.push_back(e.score);
  }
  if (w.size() != prob.edges.size()) throw ContractError("graph sets have different edges");
  return objective(prob, w);
}

void save_global(const GlobalGraph& bivalent, const GlobalGraph& univalent,
                 const std::filesystem::path& dir) {
  LocalGraphs graphs{bivalent.subgraphs, univalent.subgraphs};
  save_graphs(graphs, dir);
  for (const auto* family : {&bivalent, &univalent}) {
    for (const auto& [sig, prov] : family->provenance) {
      std::ofstream out(provenance_path(dir, sig), std::ios::binary);
      if (!out) throw DataError(fmt::format("cannot write provenance for {}", sig.key()));
      write_provenance(prov, out);
    }
  }
}

}  // namespace mgraph
