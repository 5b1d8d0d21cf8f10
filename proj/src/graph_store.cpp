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


#include "mgraph/graph_store.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace mgraph {

namespace fs = std::filesystem;

namespace {

TypeSignature home_signature(const TypedPredicate& p) {
  return p.valency() == 2 ? TypeSignature::bivalent(p.slot_types[0], p.slot_types[1])
                          : TypeSignature::univalent(p.slot_types.at(0));
}

PathEdge path_edge(const TypedSubgraph& g, const EntailmentEdge& e) {
  return {g.signature, g.vertices[e.premise], g.vertices[e.hypothesis], e.arg_map, e.score, e.kind};
}

void offer(QueryResult& best, double score, std::vector<PathEdge> path) {
  if (score > best.score) {
    best.score = score;
    best.path = std::move(path);
  }
}

}  // namespace

ComponentSet ComponentSet::parse(std::string_view text) {
  ComponentSet c{false, false, false};
  for (const auto& part : split(text, ',')) {
    if (part == "bb") {
      c.bb = true;
    } else if (part == "bu") {
      c.bu = true;
    } else if (part == "uu") {
      c.uu = true;
    } else {
      throw UsageError(fmt::format("unknown graph component '{}' (expected bb, bu, uu)", part));
    }
  }
  return c;
}

bool ComponentSet::allows(EdgeKind kind) const {
  switch (kind) {
    case EdgeKind::BB: return bb;
    case EdgeKind::BU: return bu;
    case EdgeKind::UU: return uu;
  }
  return false;
}

std::string ComponentSet::to_string() const {
  std::vector<std::string> parts;
  if (bb) parts.push_back("bb");
  if (bu) parts.push_back("bu");
  if (uu) parts.push_back("uu");
  return join(parts, ",");
}

std::vector<ArgMap> consistent_maps(const std::vector<std::string>& premise_args,
                                    const std::vector<std::string>& hypothesis_args) {
  std::vector<ArgMap> out;
  const int i = static_cast<int>(premise_args.size());
  const int j = static_cast<int>(hypothesis_args.size());
  if (i < 1 || j < 1 || j > i || i > 2) return out;
  for (auto& map : valid_arg_maps(i, j)) {
    if (map.apply(premise_args) == hypothesis_args) out.push_back(std::move(map));
  }
  return out;
}

GraphStore GraphStore::open(const fs::path& dir, StoreConfig config) {
  const auto index_file = dir / kVertexIndexFile;
  if (!fs::exists(index_file)) {
    throw DataError(fmt::format("no graphs in {} ({} missing)", dir.string(), kVertexIndexFile));
  }
  GraphStore store;
  store.config_ = config;
  auto entries = read_vertex_index(index_file);
  for (const auto& e : entries) {
    auto& slot = store.slots_[e.signature];
    if (!slot) {
      slot = std::make_unique<Slot>();
      slot->file = graph_path(dir, e.signature);
    }
  }
  store.index_vertices(entries);
  return store;
}

GraphStore GraphStore::from_graphs(LocalGraphs graphs, StoreConfig config) {
  GraphStore store;
  store.config_ = config;
  store.index_vertices(vertex_index(graphs));
  for (auto* family : {&graphs.bivalent, &graphs.univalent}) {
    for (auto& [sig, g] : *family) {
      auto slot = std::make_unique<Slot>();
      slot->graph = std::make_unique<TypedSubgraph>(std::move(g));
      std::call_once(slot->once, [] {});
      store.slots_[sig] = std::move(slot);
    }
  }
  return store;
}

void GraphStore::index_vertices(const std::vector<VertexIndexEntry>& entries) {
  for (const auto& e : entries) untyped_[e.untyped_key].emplace_back(e.signature, e.vertex);
}

std::vector<TypeSignature> GraphStore::signatures() const {
  std::vector<TypeSignature> out;
  for (const auto& [sig, _] : slots_) out.push_back(sig);
  return out;
}

bool GraphStore::has_vertex(const TypedPredicate& p) const {
  auto it = untyped_.find(p.untyped_key());
  if (it == untyped_.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(),
                     [&](const auto& entry) { return entry.second == p; });
}

const TypedSubgraph* GraphStore::subgraph(const TypeSignature& sig) const {
  auto it = slots_.find(sig);
  if (it == slots_.end()) return nullptr;
  Slot& slot = *it->second;
  std::call_once(slot.once, [&] {
    auto g = load_graph(slot.file);
    if (g.signature != sig) {
      throw DataError(fmt::format("{} holds subgraph {}, expected {}", slot.file.string(),
                                  g.signature.key(), sig.key()));
    }
    slot.graph = std::make_unique<TypedSubgraph>(std::move(g));
  });
  return slot.graph.get();
}

std::optional<QueryResult> GraphStore::typed_score(const TypedPredicate& premise,
                                                   const TypedPredicate& hypothesis,
                                                   const std::vector<ArgMap>& maps,
                                                   const ComponentSet& components) const {
  const TypedSubgraph* g = subgraph(home_signature(premise));
  if (g == nullptr) return std::nullopt;
  auto p = g->find_vertex(premise);
  if (!p) return std::nullopt;

  QueryResult best;
  bool found_hypothesis = false;
  if (auto h = g->find_vertex(hypothesis)) {
    found_hypothesis = true;
    for (const auto& map : maps) {
      const auto* e = g->find_edge(*p, *h, map);
      if (e != nullptr && components.allows(e->kind)) {
        offer(best, e->score, {path_edge(*g, *e)});
      }
    }
  }

  if (premise.valency() == 2 && hypothesis.valency() == 1 && config_.compose_bu_uu) {
    const TypedSubgraph* uni = subgraph(TypeSignature::univalent(hypothesis.slot_types[0]));
    auto h = uni != nullptr ? uni->find_vertex(hypothesis) : std::nullopt;
    if (h) {
      found_hypothesis = true;
      if (components.bu) {
        for (const auto& bu : g->out_edges(*p)) {
          if (bu.kind != EdgeKind::BU ||
              std::find(maps.begin(), maps.end(), bu.arg_map) == maps.end()) {
            continue;
          }
          auto mid = uni->find_vertex(g->vertices[bu.hypothesis]);
          if (!mid) continue;
          const auto* uu = uni->find_edge(*mid, *h, ArgMap::identity(1));
          if (uu == nullptr) continue;
          offer(best, std::min(bu.score, uu->score), {path_edge(*g, bu), path_edge(*uni, *uu)});
        }
      }
    }
  }
  if (!found_hypothesis) return std::nullopt;
  return best;
}

QueryResult GraphStore::entailment_score(const TypedPredicate& premise,
                                         const std::vector<std::string>& premise_args,
                                         const TypedPredicate& hypothesis,
                                         const std::vector<std::string>& hypothesis_args) const {
  return entailment_score(premise, premise_args, hypothesis, hypothesis_args, config_.components);
}

QueryResult GraphStore::entailment_score(const TypedPredicate& premise,
                                         const std::vector<std::string>& premise_args,
                                         const TypedPredicate& hypothesis,
                                         const std::vector<std::string>& hypothesis_args,
                                         const ComponentSet& components) const {
  if (premise.untyped_key() == hypothesis.untyped_key() && premise_args == hypothesis_args) {
    return QueryResult{1.0, {}, false};
  }
  if (static_cast<int>(premise_args.size()) != premise.valency() ||
      static_cast<int>(hypothesis_args.size()) != hypothesis.valency()) {
    throw ContractError("argument count disagrees with predicate valency");
  }
  const auto maps = consistent_maps(premise_args, hypothesis_args);
  if (maps.empty()) return {};
  if (auto typed = typed_score(premise, hypothesis, maps, components)) return *typed;
  return backoff_score(premise, premise_args, hypothesis, hypothesis_args, components);
}

QueryResult GraphStore::backoff_score(const TypedPredicate& premise,
                                      const std::vector<std::string>& premise_args,
                                      const TypedPredicate& hypothesis,
                                      const std::vector<std::string>& hypothesis_args) const {
  return backoff_score(premise, premise_args, hypothesis, hypothesis_args, config_.components);
}

QueryResult GraphStore::backoff_score(const TypedPredicate& premise,
                                      const std::vector<std::string>& premise_args,
                                      const TypedPredicate& hypothesis,
                                      const std::vector<std::string>& hypothesis_args,
                                      const ComponentSet& components) const {
  QueryResult result;
  result.backed_off = true;
  const auto maps = consistent_maps(premise_args, hypothesis_args);
  auto p_it = untyped_.find(premise.untyped_key());
  auto h_it = untyped_.find(hypothesis.untyped_key());
  if (maps.empty() || p_it == untyped_.end() || h_it == untyped_.end()) return result;

  double sum = 0.0;
  int found = 0;
  for (const auto& [sig, p_vertex] : p_it->second) {
    // Premises only have out-edges in their own subgraph.
    if (home_signature(p_vertex) != sig) continue;
    const TypedSubgraph* g = subgraph(sig);
    auto p = g->find_vertex(p_vertex);
    double best = 0.0;
    bool any = false;
    for (const auto& [h_sig, h_vertex] : h_it->second) {
      if (h_sig != sig) continue;
      auto h = g->find_vertex(h_vertex);
      for (const auto& map : maps) {
        const auto* e = g->find_edge(*p, *h, map);
        if (e != nullptr && components.allows(e->kind)) {
          best = std::max(best, e->score);
          any = true;
        }
      }
    }
    if (any) {
      sum += best;
      ++found;
    }
  }
  if (found > 0) result.score = sum / found;
  return result;
}

}  // namespace mgraph
