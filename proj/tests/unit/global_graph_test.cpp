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


#include <doctest.h>

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "mgraph/common.hpp"
#include "mgraph/global_graph.hpp"
#include "mgraph/graph_io.hpp"
#include "mgraph/random.hpp"
#include "support/fixtures.hpp"

using namespace mgraph;
using namespace mgraph::testing;

namespace {

const EntityType kPerson{"person"};
const EntityType kPlace{"location"};

TypedSubgraph uni(const EntityType& t, std::vector<std::string> lemmas,
                  std::vector<std::tuple<int, int, double>> edges) {
  TypedSubgraph g;
  g.signature = TypeSignature::univalent(t);
  for (auto& l : lemmas) g.vertices.push_back(TypedPredicate::unary(l, 1, t));
  for (auto [p, h, s] : edges) {
    g.edges.push_back({static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(h),
                       ArgMap::identity(1), s, EdgeKind::UU});
  }
  g.canonicalize();
  return g;
}

double score(const GraphSet& family, const EntityType& t, const std::string& p,
             const std::string& h) {
  const auto& g = family.at(TypeSignature::univalent(t));
  auto pi = g.find_vertex(TypedPredicate::unary(p, 1, t));
  auto hi = g.find_vertex(TypedPredicate::unary(h, 1, t));
  return g.find_edge(*pi, *hi, ArgMap::identity(1))->score;
}

// Dense solve of (I + weighted Laplacian) W = L with ties rebuilt from the
// tie rules, by Gaussian elimination.
std::vector<double> dense_solution(const GraphSet& family, const GlobalConfig& cfg) {
  std::vector<std::tuple<const TypedSubgraph*, std::size_t>> vars;
  std::vector<double> local;
  for (const auto& [sig, g] : family) {
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      vars.emplace_back(&g, i);
      local.push_back(g.edges[i].score);
    }
  }
  const std::size_t n = vars.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = 1.0;
    a[i][n] = local[i];
  }
  auto tie = [&](std::size_t x, std::size_t y, double w) {
    a[x][x] += w;
    a[y][y] += w;
    a[x][y] -= w;
    a[y][x] -= w;
  };
  auto index_of = [&](const TypedSubgraph* g, std::uint32_t p, std::uint32_t h, const ArgMap& m)
      -> std::optional<std::size_t> {
    for (std::size_t v = 0; v < n; ++v) {
      auto [vg, vi] = vars[v];
      const auto& e = vg->edges[vi];
      if (vg == g && e.premise == p && e.hypothesis == h && e.arg_map == m) return v;
    }
    return std::nullopt;
  };
  for (const auto& [sig, g] : family) {
    for (std::uint32_t p = 0; p < g.vertices.size(); ++p) {
      for (std::uint32_t q = p + 1; q < g.vertices.size(); ++q) {
        const auto id = ArgMap::identity(g.vertices[p].valency());
        if (g.vertices[p].slot_types != g.vertices[q].slot_types) continue;
        auto pq = index_of(&g, p, q, id);
        auto qp = index_of(&g, q, p, id);
        if (!pq || !qp || local[*pq] < cfg.paraphrase_tau || local[*qp] < cfg.paraphrase_tau) {
          continue;
        }
        for (std::uint32_t r = 0; r < g.vertices.size(); ++r) {
          if (r == p || r == q) continue;
          for (const auto& m : valid_arg_maps(g.vertices[p].valency(), g.vertices[r].valency())) {
            auto pr = index_of(&g, p, r, m);
            auto qr = index_of(&g, q, r, m);
            if (pr && qr && cfg.lambda_para > 0) tie(*pr, *qr, cfg.lambda_para);
          }
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      auto [gx, ix] = vars[x];
      auto [gy, iy] = vars[y];
      if (gx == gy || cfg.lambda_cross <= 0) continue;
      const auto& ex = gx->edges[ix];
      const auto& ey = gy->edges[iy];
      if (gx->vertices[ex.premise].untyped_key() == gy->vertices[ey.premise].untyped_key() &&
          gx->vertices[ex.hypothesis].untyped_key() == gy->vertices[ey.hypothesis].untyped_key() &&
          ex.arg_map == ey.arg_map) {
        tie(x, y, cfg.lambda_cross);
      }
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    std::swap(a[c], a[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = a[i][n] / a[i][i];
  return w;
}

GraphSet random_family(Rng& rng) {
  static const char* lemmas[] = {"kill", "die", "murder", "attack", "hurt"};
  GraphSet family;
  for (const auto& t : {kPerson, kPlace, EntityType{"organization"}}) {
    std::vector<std::tuple<int, int, double>> edges;
    for (int p = 0; p < 5; ++p) {
      for (int h = 0; h < 5; ++h) {
        if (p == h || rng.below(3) == 0) continue;
        // Some high scores so paraphrase pairs appear.
        double s = rng.below(3) == 0 ? 0.9 + rng.below(100) / 1000.0 : rng.below(1000) / 1000.0;
        edges.emplace_back(p, h, s);
      }
    }
    auto g = uni(t, {lemmas, lemmas + 5}, edges);
    family.emplace(g.signature, g);
  }
  return family;
}

}  // namespace

TEST_SUITE("global_graph") {

TEST_CASE("zero weights leave scores unchanged") {
  Rng rng(41);
  auto family = random_family(rng);
  GlobalConfig cfg;
  cfg.lambda_para = 0.0;
  cfg.lambda_cross = 0.0;
  auto out = globalize(family, cfg);
  CHECK(out.converged);
  CHECK(out.iterations == 1);
  for (const auto& [sig, g] : family) {
    const auto& h = out.subgraphs.at(sig);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      CHECK(std::abs(h.edges[i].score - g.edges[i].score) <= 1e-9);
    }
  }
}

TEST_CASE("two tied edges follow the closed form") {
  GraphSet family;
  const double a = 0.8, b = 0.2;
  auto g1 = uni(kPerson, {"die", "kill"}, {{1, 0, a}});
  auto g2 = uni(kPlace, {"die", "kill"}, {{1, 0, b}});
  family.emplace(g1.signature, g1);
  family.emplace(g2.signature, g2);
  for (double lambda : {0.1, 0.5, 1.0, 7.0}) {
    GlobalConfig cfg;
    cfg.lambda_cross = lambda;
    auto out = globalize(family, cfg);
    CHECK(out.converged);
    const double w1 = (a * (1 + lambda) + lambda * b) / (1 + 2 * lambda);
    const double w2 = (b * (1 + lambda) + lambda * a) / (1 + 2 * lambda);
    CHECK(std::abs(score(out.subgraphs, kPerson, "kill", "die") - w1) <= 1e-9);
    CHECK(std::abs(score(out.subgraphs, kPlace, "kill", "die") - w2) <= 1e-9);
  }
}

TEST_CASE("strong ties pull scores to their mean") {
  GraphSet family;
  auto g1 = uni(kPerson, {"die", "kill"}, {{1, 0, 0.9}});
  auto g2 = uni(kPlace, {"die", "kill"}, {{1, 0, 0.3}});
  family.emplace(g1.signature, g1);
  family.emplace(g2.signature, g2);
  GlobalConfig cfg;
  cfg.lambda_cross = 1e6;
  auto out = globalize(family, cfg);
  CHECK(out.iterations <= 20);
  CHECK(std::abs(score(out.subgraphs, kPerson, "kill", "die") - 0.6) <= 1e-3);
  CHECK(std::abs(score(out.subgraphs, kPlace, "kill", "die") - 0.6) <= 1e-3);
}

TEST_CASE("solution matches a dense solve and the objective never rises") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    auto family = random_family(rng);
    GlobalConfig cfg;
    cfg.iterations = 500;
    cfg.convergence_eps = 1e-13;
    auto out = globalize(family, cfg);
    CHECK(out.converged);
    for (std::size_t i = 1; i < out.objective_trace.size(); ++i) {
      CHECK(out.objective_trace[i] <= out.objective_trace[i - 1] + 1e-12);
    }
    auto want = dense_solution(family, cfg);
    std::size_t v = 0;
    for (const auto& [sig, g] : out.subgraphs) {
      for (const auto& e : g.edges) {
        CHECK(std::abs(e.score - std::clamp(want[v++], 0.0, 1.0)) <= 1e-8);
      }
    }
    CHECK(global_objective(family, out.subgraphs, cfg) <= out.objective_trace.front() + 1e-12);
  }
}

TEST_CASE("paraphrases need strong identity edges both ways") {
  auto g = uni(kPerson, {"die", "perish", "kill"}, {{0, 1, 0.95}, {1, 0, 0.92}, {2, 0, 0.99}});
  auto pairs = find_paraphrases(g, 0.9);
  REQUIRE(pairs.size() == 1);
  CHECK(g.vertices[pairs[0].first].lemma == "die");
  CHECK(g.vertices[pairs[0].second].lemma == "perish");
  CHECK(find_paraphrases(g, 0.93).empty());
}

TEST_CASE("structure is preserved and provenance records both scores") {
  Rng rng(5);
  auto family = random_family(rng);
  auto out = globalize(family);
  for (const auto& [sig, g] : family) {
    const auto& h = out.subgraphs.at(sig);
    CHECK(h.vertices == g.vertices);
    REQUIRE(h.edges.size() == g.edges.size());
    const auto& prov = out.provenance.at(sig);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      CHECK(h.edges[i].premise == g.edges[i].premise);
      CHECK(h.edges[i].arg_map == g.edges[i].arg_map);
      CHECK(h.edges[i].score >= 0.0);
      CHECK(h.edges[i].score <= 1.0);
      CHECK(prov.edges[i].local_score == g.edges[i].score);
      CHECK(prov.edges[i].final_score == h.edges[i].score);
    }
  }
}

TEST_CASE("an iteration cap below convergence is reported") {
  Rng rng(9);
  auto family = random_family(rng);
  GlobalConfig cfg;
  cfg.iterations = 1;
  cfg.convergence_eps = 1e-15;
  auto out = globalize(family, cfg);
  CHECK_FALSE(out.converged);
  CHECK(out.iterations == 1);
}

TEST_CASE("bad settings are usage errors") {
  GlobalConfig cfg;
  cfg.lambda_para = -1;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg = {};
  cfg.iterations = 0;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg = {};
  cfg.paraphrase_tau = 0;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
}

TEST_CASE("saved global graphs carry provenance sidecars") {
  Rng rng(6);
  auto family = random_family(rng);
  auto [bi, un] = apply_to_all({}, family);
  TempDir dir("global");
  save_global(bi, un, dir.path());
  for (const auto& [sig, prov] : un.provenance) {
    std::ifstream in(provenance_path(dir.path(), sig));
    CHECK(read_provenance(in) == prov);
    CHECK(load_graph(graph_path(dir.path(), sig)) == un.subgraphs.at(sig));
  }
  CHECK(std::filesystem::exists(dir.path() / kVertexIndexFile));
}

}
