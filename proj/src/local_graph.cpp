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


#include "mgraph/local_graph.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>
#include <unordered_map>

#include <fmt/format.h>

#include "mgraph/scores.hpp"

namespace mgraph {

namespace {

const std::vector<PredicateRef> kNoPredicates;

bool edge_less(const EntailmentEdge& a, const EntailmentEdge& b) {
  return std::tie(a.premise, a.hypothesis, a.arg_map) <
         std::tie(b.premise, b.hypothesis, b.arg_map);
}

// Inverted index from feature key to the targets carrying it.
class Postings {
 public:
  void add(PredicateRef target, const SparseVector* vector) {
    const auto id = static_cast<std::uint32_t>(targets_.size());
    targets_.push_back(target);
    vectors_.push_back(vector);
    for (auto key : vector->keys) lists_[key].push_back(id);
  }

  PredicateRef target(std::uint32_t id) const { return targets_[id]; }
  const SparseVector& vector(std::uint32_t id) const { return *vectors_[id]; }

  // Targets sharing at least one feature with v, ascending.
  std::vector<std::uint32_t> candidates(const SparseVector& v) const {
    std::vector<char> seen(targets_.size(), 0);
    std::vector<std::uint32_t> out;
    for (auto key : v.keys) {
      auto it = lists_.find(key);
      if (it == lists_.end()) continue;
      for (auto id : it->second) {
        if (!seen[id]) {
          seen[id] = 1;
          out.push_back(id);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<PredicateRef> targets_;
  std::vector<const SparseVector*> vectors_;
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> lists_;
};

struct PendingEdge {
  PredicateRef premise;
  PredicateRef hypothesis;
  ArgMap arg_map;
  double score;
  EdgeKind kind;
};

bool keep(double score, const LocalGraphConfig& config) {
  return score > 0.0 && score >= config.edge_threshold;
}

Postings unary_postings(const FeatureIndex& index, const EntityType& type) {
  Postings postings;
  for (auto u : index.unaries(type)) {
    if (const auto* v = index.slot_vector(u, 1)) postings.add(u, v);
  }
  return postings;
}

TypedSubgraph assemble(const FeatureIndex& index, TypeSignature signature,
                       const std::vector<PredicateRef>& own_vertices,
                       const std::vector<PendingEdge>& pending) {
  const Corpus& corpus = index.corpus();
  TypedSubgraph g;
  g.signature = std::move(signature);
  std::set<TypedPredicate> vertices;
  for (auto p : own_vertices) vertices.insert(corpus.predicate(p));
  for (const auto& e : pending) {
    vertices.insert(corpus.predicate(e.premise));
    vertices.insert(corpus.predicate(e.hypothesis));
  }
  g.vertices.assign(vertices.begin(), vertices.end());
  g.edges.reserve(pending.size());
  for (const auto& e : pending) {
    g.edges.push_back(EntailmentEdge{*g.find_vertex(corpus.predicate(e.premise)),
                                     *g.find_vertex(corpus.predicate(e.hypothesis)), e.arg_map,
                                     e.score, e.kind});
  }
  std::sort(g.edges.begin(), g.edges.end(), edge_less);
  return g;
}

}  // namespace

std::optional<std::uint32_t> TypedSubgraph::find_vertex(const TypedPredicate& p) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
  if (it == vertices.end() || *it != p) return std::nullopt;
  return static_cast<std::uint32_t>(it - vertices.begin());
}

std::span<const EntailmentEdge> TypedSubgraph::out_edges(std::uint32_t premise) const {
  auto lo = std::lower_bound(edges.begin(), edges.end(), premise,
                             [](const EntailmentEdge& e, std::uint32_t p) { return e.premise < p; });
  auto hi = std::upper_bound(lo, edges.end(), premise,
                             [](std::uint32_t p, const EntailmentEdge& e) { return p < e.premise; });
  return {lo, hi};
}

const EntailmentEdge* TypedSubgraph::find_edge(std::uint32_t premise, std::uint32_t hypothesis,
                                               const ArgMap& map) const {
  EntailmentEdge probe{premise, hypothesis, map, 0.0, EdgeKind::UU};
  auto it = std::lower_bound(edges.begin(), edges.end(), probe, edge_less);
  if (it == edges.end() || it->premise != premise || it->hypothesis != hypothesis ||
      it->arg_map != map) {
    return nullptr;
  }
  return &*it;
}

std::size_t TypedSubgraph::edge_count(EdgeKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [&](const auto& e) { return e.kind == kind; }));
}

void TypedSubgraph::canonicalize() {
  std::vector<std::uint32_t> order(vertices.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return vertices[a] < vertices[b]; });
  std::vector<std::uint32_t> remap(vertices.size());
  std::vector<TypedPredicate> sorted;
  sorted.reserve(vertices.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    remap[order[i]] = i;
    sorted.push_back(std::move(vertices[order[i]]));
  }
  vertices = std::move(sorted);
  for (auto& e : edges) {
    e.premise = remap.at(e.premise);
    e.hypothesis = remap.at(e.hypothesis);
  }
  std::sort(edges.begin(), edges.end(), edge_less);
}

void TypedSubgraph::check_invariants() const {
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (!(vertices[i - 1] < vertices[i])) throw ContractError("vertices are not sorted and unique");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (i > 0 && !edge_less(edges[i - 1], e)) throw ContractError("edges are not sorted and unique");
    if (e.premise >= vertices.size() || e.hypothesis >= vertices.size()) {
      throw ContractError("edge endpoint is not a vertex");
    }
    if (e.premise == e.hypothesis) throw ContractError("self edge stored");
    const auto& p = vertices[e.premise];
    const auto& h = vertices[e.hypothesis];
    if (edge_kind_for(p.valency(), h.valency()) != e.kind) {
      throw ContractError(fmt::format("edge {} -> {} has kind {}", p.key(), h.key(),
                                      to_string(e.kind)));
    }
    if (!e.arg_map.valid_for(p.valency(), h.valency())) {
      throw ContractError(fmt::format("edge {} -> {} has map {}", p.key(), h.key(),
                                      e.arg_map.to_string()));
    }
    if (!(e.score >= 0.0 && e.score <= 1.0)) {
      throw ContractError(fmt::format("edge {} -> {} has score {}", p.key(), h.key(), e.score));
    }
    if (signature.is_bivalent() == (e.kind == EdgeKind::UU)) {
      throw ContractError(fmt::format("{} edge in subgraph {}", to_string(e.kind), signature.key()));
    }
    if (signature.is_bivalent() && p.slot_types != signature.types) {
      throw ContractError(fmt::format("premise {} outside subgraph {}", p.key(), signature.key()));
    }
    // Argument types must travel with the map.
    if (e.arg_map.apply(p.slot_types) != h.slot_types) {
      throw ContractError(fmt::format("edge {} -> {} maps types inconsistently", p.key(), h.key()));
    }
  }
}

FeatureIndex::FeatureIndex(const Corpus& corpus, const CountStore& pair_store,
                           const VectorSet& vectors)
    : corpus_(&corpus), vectors_(&vectors) {
  for (std::uint32_t i = 0; i < corpus.predicate_count(); ++i) {
    const auto& p = corpus.predicate(PredicateRef{i});
    if (p.valency() == 2) {
      binaries_[TypeSignature::bivalent(p.slot_types[0], p.slot_types[1])].push_back({i});
    } else if (p.valency() == 1) {
      unaries_[p.slot_types[0]].push_back({i});
    }
  }
  for (const auto& [ref, v] : vectors.pair) {
    swapped_.emplace(ref, mgraph::swapped_pair_vector(v.features, pair_store));
  }
}

std::vector<TypeSignature> FeatureIndex::bivalent_signatures() const {
  std::vector<TypeSignature> out;
  for (const auto& [sig, _] : binaries_) out.push_back(sig);
  return out;
}

std::vector<EntityType> FeatureIndex::univalent_types() const {
  std::vector<EntityType> out;
  for (const auto& [t, _] : unaries_) out.push_back(t);
  return out;
}

const std::vector<PredicateRef>& FeatureIndex::binaries(const TypeSignature& sig) const {
  auto it = binaries_.find(sig);
  return it == binaries_.end() ? kNoPredicates : it->second;
}

const std::vector<PredicateRef>& FeatureIndex::unaries(const EntityType& type) const {
  auto it = unaries_.find(type);
  return it == unaries_.end() ? kNoPredicates : it->second;
}

const SparseVector* FeatureIndex::pair_vector(PredicateRef p) const {
  auto it = vectors_->pair.find(p);
  return it == vectors_->pair.end() ? nullptr : &it->second.features;
}

const SparseVector* FeatureIndex::swapped_pair_vector(PredicateRef p) const {
  auto it = swapped_.find(p);
  return it == swapped_.end() ? nullptr : &it->second;
}

const SparseVector* FeatureIndex::slot_vector(PredicateRef p, int slot) const {
  auto it = vectors_->slot.find({p, slot});
  return it == vectors_->slot.end() ? nullptr : &it->second.features;
}

TypedSubgraph build_bivalent(const FeatureIndex& index, const TypeSignature& signature,
                             const LocalGraphConfig& config) {
  if (!signature.is_bivalent()) throw ContractError("build_bivalent needs a type pair");
  const EntityType& t1 = signature.types[0];
  const EntityType& t2 = signature.types[1];
  const auto& premises = index.binaries(signature);

  Postings same;
  Postings reversed;
  for (auto q : premises) {
    if (const auto* v = index.pair_vector(q)) same.add(q, v);
  }
  for (auto q : index.binaries(TypeSignature::bivalent(t2, t1))) {
    if (const auto* v = index.pair_vector(q)) reversed.add(q, v);
  }
  std::map<EntityType, Postings> unary_targets;
  unary_targets.emplace(t1, unary_postings(index, t1));
  if (t2 != t1) unary_targets.emplace(t2, unary_postings(index, t2));

  std::vector<PendingEdge> pending;
  for (auto p : premises) {
    if (const auto* v = index.pair_vector(p)) {
      // With equal slot types both maps reach the same target; keep the
      // better one, preferring identity on ties.
      std::map<PredicateRef, std::pair<double, ArgMap>> best;
      for (auto id : same.candidates(*v)) {
        if (same.target(id) == p) continue;
        best[same.target(id)] = {binc(*v, same.vector(id)), ArgMap::identity(2)};
      }
      const SparseVector& swapped = *index.swapped_pair_vector(p);
      for (auto id : reversed.candidates(swapped)) {
        if (reversed.target(id) == p) continue;
        const double s = binc(swapped, reversed.vector(id));
        auto [it, inserted] = best.try_emplace(reversed.target(id), s, ArgMap::swap());
        if (!inserted && s > it->second.first) it->second = {s, ArgMap::swap()};
      }
      for (const auto& [q, scored] : best) {
        if (keep(scored.first, config)) {
          pending.push_back({p, q, scored.second, scored.first, EdgeKind::BB});
        }
      }
    }
    for (int slot = 1; slot <= 2; ++slot) {
      const auto* v = index.slot_vector(p, slot);
      if (v == nullptr) continue;
      const Postings& targets = unary_targets.at(signature.types[slot - 1]);
      for (auto id : targets.candidates(*v)) {
        const double s = binc(*v, targets.vector(id));
        if (keep(s, config)) {
          pending.push_back({p, targets.target(id), ArgMap::select(slot), s, EdgeKind::BU});
        }
      }
    }
  }
  return assemble(index, signature, premises, pending);
}

TypedSubgraph build_univalent(const FeatureIndex& index, const EntityType& type,
                              const LocalGraphConfig& config) {
  const auto& unaries = index.unaries(type);
  Postings targets = unary_postings(index, type);
  std::vector<PendingEdge> pending;
  for (auto u : unaries) {
    const auto* v = index.slot_vector(u, 1);
    if (v == nullptr) continue;
    for (auto id : targets.candidates(*v)) {
      if (targets.target(id) == u) continue;
      const double s = binc(*v, targets.vector(id));
      if (keep(s, config)) {
        pending.push_back({u, targets.target(id), ArgMap::identity(1), s, EdgeKind::UU});
      }
    }
  }
  return assemble(index, TypeSignature::univalent(type), unaries, pending);
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

LocalGraphs build_all(const FeatureIndex& index, const LocalGraphConfig& config) {
  const auto signatures = index.bivalent_signatures();
  const auto types = index.univalent_types();
  std::vector<TypedSubgraph> built(signatures.size() + types.size());
  parallel_for(built.size(), config.threads, [&](std::size_t i) {
    built[i] = i < signatures.size() ? build_bivalent(index, signatures[i], config)
                                     : build_univalent(index, types[i - signatures.size()], config);
  });
  LocalGraphs out;
  for (auto& g : built) {
    auto& family = g.signature.is_bivalent() ? out.bivalent : out.univalent;
    family.emplace(g.signature, std::move(g));
  }
  return out;
}

LocalModel build_local(const Corpus& corpus, const LocalGraphConfig& config) {
  LocalModel model;
  model.pair_counts = count(corpus, CountMode::Pair);
  model.slot_counts = count(corpus, CountMode::Slot);
  model.vectors = build_all_vectors(model.pair_counts, model.slot_counts, config.features);
  FeatureIndex index(corpus, model.pair_counts, model.vectors);
  model.graphs = build_all(index, config);
  return model;
}

}  // namespace mgraph
