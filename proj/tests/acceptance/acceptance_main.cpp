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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances and time limits are fixed below.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "mgraph/common.hpp"
#include "mgraph/global_graph.hpp"
#include "mgraph/graph_store.hpp"
#include "mgraph/kernels.hpp"
#include "mgraph/local_graph.hpp"
#include "mgraph/mdih.hpp"
#include "mgraph/qa_eval.hpp"
#include "mgraph/qa_gen.hpp"
#include "mgraph/random.hpp"
#include "mgraph/scores.hpp"
#include "mgraph/wordnet.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace mgraph;
using namespace mgraph::testing;
namespace fs = std::filesystem;

namespace {

constexpr double kScoreRelTol = 1e-12;
constexpr double kGlobalIdentityTol = 1e-9;
constexpr double kParaphraseMeanTol = 1e-3;
constexpr int kParaphraseMaxIterations = 20;
constexpr double kBackoffTol = 1e-9;
constexpr double kDirectionalMin = 0.7;
constexpr double kSwapMin = 0.7;
constexpr double kMdihSeconds = 60.0;
constexpr double kDirectionalSeconds = 5.0;
constexpr double kQaGenSeconds = 30.0;
constexpr double kSmokeSeconds = 120.0;

const EntityType kPerson{"person"};
const EntityType kOrg{"organization"};

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Settings {
  fs::path cli;
  fs::path data;
  fs::path work;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Every (j, m) with j a strictly increasing choice of `out` premise slots and
// m a permutation of 1..out, enumerated without the library.
std::vector<std::pair<std::vector<int>, std::vector<int>>> enumerate_maps(int in, int out) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> maps;
  for (unsigned mask = 1; mask < (1u << in); ++mask) {
    std::vector<int> j;
    for (int s = 0; s < in; ++s) {
      if (mask & (1u << s)) j.push_back(s + 1);
    }
    if (static_cast<int>(j.size()) != out) continue;
    std::vector<int> m(out);
    for (int k = 0; k < out; ++k) m[k] = k + 1;
    do {
      maps.emplace_back(j, m);
    } while (std::next_permutation(m.begin(), m.end()));
  }
  return maps;
}

// Inclusion straight from the corpus propositions, one premise at a time.
bool brute_force_from_corpus(const Corpus& c, PredicateRef premise, PredicateRef hypothesis,
                             const std::vector<int>& j, const std::vector<int>& m) {
  for (std::size_t a = 0; a < c.size(); ++a) {
    const auto& p = c.proposition(a);
    if (!(p.predicate == premise)) continue;
    std::vector<std::uint32_t> want(m.size());
    for (std::size_t k = 0; k < j.size(); ++k) want[m[k] - 1] = p.args[j[k] - 1].index;
    bool found = false;
    for (std::size_t b = 0; b < c.size() && !found; ++b) {
      const auto& h = c.proposition(b);
      if (!(h.predicate == hypothesis)) continue;
      std::vector<std::uint32_t> got;
      for (auto e : h.args) got.push_back(e.index);
      found = got == want;
    }
    if (!found) return false;
  }
  return true;
}

Outcome mdih_equivalence() {
  Stopwatch clock;
  static const char* lemmas[] = {"kill", "buy", "sell.to", "attack"};
  std::size_t checks = 0, disagreements = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    Rng rng(mix_seed(seed, 0xacce));
    std::vector<RawRecord> records;
    const auto n = 1 + rng.below(100);
    const auto entities = 2 + rng.below(9);
    for (std::uint64_t i = 0; i < n; ++i) {
      Arg a{"e" + std::to_string(rng.below(entities)), "person"};
      Arg b{"e" + std::to_string(rng.below(entities)), "person"};
      std::string lemma = lemmas[rng.below(4)];
      if (rng.below(2) == 0) {
        records.push_back(unary(lemma, 1 + static_cast<int>(rng.below(2)), a));
      } else {
        records.push_back(binary(lemma, a, b));
      }
    }
    Corpus c = build_corpus(records);
    if (c.entity_count() > 10) return {false, fmt::format("seed {} produced {} entities", seed, c.entity_count())};
    for (std::uint32_t pi = 0; pi < c.predicate_count(); ++pi) {
      PredicateRef p{pi};
      const int in = c.predicate(p).valency();
      const auto premise = tuple_set(c, p);
      for (std::uint32_t hi = 0; hi < c.predicate_count(); ++hi) {
        PredicateRef h{hi};
        const int out = c.predicate(h).valency();
        if (out > in) continue;
        const auto hypothesis = tuple_set(c, h);
        auto library_maps = valid_arg_maps(in, out);
        auto maps = enumerate_maps(in, out);
        if (library_maps.size() != maps.size()) return {false, "map enumeration differs"};
        for (const auto& [j, m] : maps) {
          ++checks;
          if (mdih_oracle(premise, hypothesis, ArgMap{j, m}) != brute_force_from_corpus(c, p, h, j, m)) {
            ++disagreements;
          }
        }
      }
    }
  }
  const double t = clock.seconds();
  return {disagreements == 0 && t < kMdihSeconds,
          fmt::format("{} checks, {} disagreements, {:.2f}s (limit {}s)", checks, disagreements, t,
                      kMdihSeconds)};
}

double relative_error(double got, double want) {
  if (got == want) return 0.0;
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

Outcome score_oracle() {
  double worst = 0.0;
  std::size_t pairs = 0;
  std::vector<kernels::Isa> isas;
  for (auto isa : {kernels::Isa::Scalar, kernels::Isa::Avx2, kernels::Isa::Neon}) {
    if (kernels::isa_supported(isa)) isas.push_back(isa);
  }
  const auto original = kernels::active_isa();
  for (auto isa : isas) {
    kernels::set_active_isa(isa);
    Rng rng(mix_seed(2, 0xacce));
    for (int t = 0; t < 1000; ++t) {
      NaiveVector u, v;
      const std::uint32_t range = 1 + static_cast<std::uint32_t>(rng.below(200));
      std::set<std::uint32_t> ku, kv;
      for (auto n = rng.below(60); n > 0; --n) ku.insert(static_cast<std::uint32_t>(rng.below(range)));
      for (auto n = rng.below(60); n > 0; --n) kv.insert(static_cast<std::uint32_t>(rng.below(range)));
      for (auto k : ku) u.emplace_back(k, 0.01 + static_cast<double>(rng.below(1000000)) / 1e4);
      for (auto k : kv) v.emplace_back(k, 0.01 + static_cast<double>(rng.below(1000000)) / 1e4);
      auto su = SparseVector::from_pairs(u);
      auto sv = SparseVector::from_pairs(v);
      worst = std::max({worst, relative_error(weeds_precision(su, sv), naive_weeds(u, v)),
                        relative_error(lin_similarity(su, sv), naive_lin(u, v)),
                        relative_error(binc(su, sv), naive_binc(u, v))});
      ++pairs;
    }
  }
  kernels::set_active_isa(original);
  std::vector<std::string> names;
  for (auto isa : isas) names.emplace_back(kernels::to_string(isa));
  return {worst <= kScoreRelTol,
          fmt::format("{} pairs over [{}], max relative error {:.3g} (limit {:g})", pairs,
                      join(names, ","), worst, kScoreRelTol)};
}

const EntailmentEdge* edge_between(const TypedSubgraph& g, const TypedPredicate& p,
                                   const TypedPredicate& h, const ArgMap& map) {
  auto pi = g.find_vertex(p);
  auto hi = g.find_vertex(h);
  if (!pi || !hi) return nullptr;
  return g.find_edge(*pi, *hi, map);
}

Outcome directionality() {
  Stopwatch clock;
  std::vector<RawRecord> r;
  constexpr int kVictims = 20;
  for (int i = 0; i < kVictims; ++i) {
    Arg victim{"victim" + std::to_string(i), "person"};
    r.push_back(binary("kill", {"killer" + std::to_string(i % 5), "person"}, victim));
    r.push_back(unary("die", 1, victim));
  }
  for (int i = 0; i < kVictims; ++i) r.push_back(unary("die", 1, {"elder" + std::to_string(i), "person"}));
  for (int i = 0; i < 200; ++i) r.push_back(unary("visit", 1, {"tourist" + std::to_string(i), "person"}));
  Corpus c = build_corpus(r);
  LocalModel m = build_local(c);

  const auto kill = TypedPredicate::binary("kill", kPerson, kPerson);
  const auto die = TypedPredicate::unary("die", 1, kPerson);
  auto sig = TypeSignature::bivalent(kPerson, kPerson);
  if (!m.graphs.bivalent.contains(sig)) return {false, "no (person, person) subgraph"};
  const auto* edge = edge_between(m.graphs.bivalent.at(sig), kill, die, ArgMap::select(2));
  const double forward = edge ? edge->score : 0.0;

  auto kref = c.find_predicate(kill);
  auto dref = c.find_predicate(die);
  const auto& slots = m.vectors.slot;
  if (!kref || !dref || !slots.contains({*kref, 2}) || !slots.contains({*dref, 1})) {
    return {false, "missing slot vectors"};
  }
  const double reverse = binc(slots.at({*dref, 1}).features, slots.at({*kref, 2}).features);
  const double t = clock.seconds();
  return {forward >= kDirectionalMin && reverse < forward && t < kDirectionalSeconds,
          fmt::format("BInc kill(x,y)->die(y) {:.4f} (min {}), die->kill object {:.4f}, {:.3f}s",
                      forward, kDirectionalMin, reverse, t)};
}

Outcome swap_map() {
  std::vector<RawRecord> r;
  for (int i = 0; i < 30; ++i) {
    Arg buyer{"buyer" + std::to_string(i), "person"};
    Arg shop{"shop" + std::to_string(i % 10), "organization"};
    r.push_back(binary("buy", buyer, shop));
    r.push_back(binary("sell.to", shop, buyer));
  }
  // Sales with no recorded purchase.
  for (int i = 0; i < 6; ++i) {
    r.push_back(binary("sell.to", {"shop" + std::to_string(i), "organization"},
                       {"walkin" + std::to_string(i), "person"}));
  }
  for (int i = 0; i < 100; ++i) {
    r.push_back(binary("visit", {"tourist" + std::to_string(i), "person"},
                       {"shop" + std::to_string(i % 10), "organization"}));
  }
  Corpus c = build_corpus(r);
  LocalModel m = build_local(c);
  auto sig = TypeSignature::bivalent(kPerson, kOrg);
  if (!m.graphs.bivalent.contains(sig)) return {false, "no (person, organization) subgraph"};
  const auto& g = m.graphs.bivalent.at(sig);
  const auto buy = TypedPredicate::binary("buy", kPerson, kOrg);
  const auto sell = TypedPredicate::binary("sell.to", kOrg, kPerson);
  const auto* e = edge_between(g, buy, sell, ArgMap::swap());
  const auto* wrong = edge_between(g, buy, sell, ArgMap::identity(2));
  const double score = e ? e->score : 0.0;
  return {score >= kSwapMin && wrong == nullptr,
          fmt::format("buy(x,y)->sell.to(y,x) swap score {:.4f} (min {}), identity edge {}", score,
                      kSwapMin, wrong ? "present" : "absent")};
}

Outcome globalization_identity() {
  Rng rng(mix_seed(5, 0xacce));
  static const char* lemmas[] = {"kill", "buy", "sell.to", "visit", "attack", "meet"};
  std::vector<RawRecord> records;
  for (int i = 0; i < 400; ++i) {
    Arg a{"e" + std::to_string(rng.below(12)), rng.below(2) ? "person" : "organization"};
    Arg b{"e" + std::to_string(rng.below(12)), rng.below(2) ? "person" : "organization"};
    std::string lemma = lemmas[rng.below(6)];
    if (rng.below(2) == 0) {
      records.push_back(unary(lemma, 1 + static_cast<int>(rng.below(2)), a));
    } else {
      records.push_back(binary(lemma, a, b));
    }
  }
  Corpus c = build_corpus(records);
  LocalGraphConfig lc;
  lc.features.min_predicate_count = 2;
  LocalModel m = build_local(c, lc);
  GlobalConfig zero;
  zero.lambda_para = 0.0;
  zero.lambda_cross = 0.0;
  auto [gb, gu] = apply_to_all(m.graphs.bivalent, m.graphs.univalent, zero);
  double worst = 0.0;
  std::size_t edges = 0;
  for (const auto& [local, global] : {std::pair{&m.graphs.bivalent, &gb.subgraphs},
                                      std::pair{&m.graphs.univalent, &gu.subgraphs}}) {
    for (const auto& [sig, g] : *local) {
      const auto& out = global->at(sig);
      for (std::size_t i = 0; i < g.edges.size(); ++i) {
        worst = std::max(worst, std::abs(g.edges[i].score - out.edges[i].score));
        ++edges;
      }
    }
  }

  // p and q paraphrase each other; their out-edges to r disagree.
  TypedSubgraph toy;
  toy.signature = TypeSignature::univalent(kPerson);
  toy.vertices = {TypedPredicate::unary("p", 1, kPerson), TypedPredicate::unary("q", 1, kPerson),
                  TypedPredicate::unary("r", 1, kPerson)};
  const auto id = ArgMap::identity(1);
  toy.edges = {{0, 1, id, 0.95, EdgeKind::UU}, {0, 2, id, 0.2, EdgeKind::UU},
               {1, 0, id, 0.95, EdgeKind::UU}, {1, 2, id, 0.8, EdgeKind::UU}};
  toy.canonicalize();
  GlobalConfig strong;
  strong.lambda_para = 1e6;
  strong.lambda_cross = 0.0;
  strong.iterations = kParaphraseMaxIterations;
  GraphSet family{{toy.signature, toy}};
  auto refined = globalize(family, strong);
  const auto& rg = refined.subgraphs.at(toy.signature);
  const double pr = rg.find_edge(0, 2, id)->score;
  const double qr = rg.find_edge(1, 2, id)->score;
  const double mean = 0.5;
  const double gap = std::max(std::abs(pr - mean), std::abs(qr - mean));
  const bool ok = worst <= kGlobalIdentityTol && edges > 0 && gap <= kParaphraseMeanTol &&
                  refined.converged && refined.iterations <= kParaphraseMaxIterations;
  return {ok, fmt::format("zero weights: {} edges, max change {:.3g} (limit {:g}); paraphrase "
                          "p->r {:.6f}, q->r {:.6f}, gap to mean {:.3g} (limit {:g}) after {} iterations",
                          edges, worst, kGlobalIdentityTol, pr, qr, gap, kParaphraseMeanTol,
                          refined.iterations)};
}

Outcome backoff_averaging() {
  LocalGraphs gs;
  const auto id = ArgMap::identity(1);
  const std::pair<const char*, double> planted[] = {{"person", 0.4}, {"location", 0.8}};
  for (const auto& [type, score] : planted) {
    EntityType t{type};
    TypedSubgraph g;
    g.signature = TypeSignature::univalent(t);
    g.vertices = {TypedPredicate::unary("kill", 2, t), TypedPredicate::unary("die", 1, t)};
    g.edges = {{0, 1, id, score, EdgeKind::UU}};
    g.canonicalize();
    gs.univalent[g.signature] = g;
  }
  // A third subgraph holding neither predicate.
  TypedSubgraph other;
  other.signature = TypeSignature::univalent(kOrg);
  other.vertices = {TypedPredicate::unary("buy", 1, kOrg), TypedPredicate::unary("own", 1, kOrg)};
  other.edges = {{0, 1, id, 0.1, EdgeKind::UU}};
  other.canonicalize();
  gs.univalent[other.signature] = other;
  auto store = GraphStore::from_graphs(std::move(gs));

  const EntityType unseen{"event"};
  const std::vector<std::string> x{"x"};
  auto r = store.backoff_score(TypedPredicate::unary("kill", 2, unseen), x,
                               TypedPredicate::unary("die", 1, unseen), x);
  auto routed = store.entailment_score(TypedPredicate::unary("kill", 2, unseen), x,
                                       TypedPredicate::unary("die", 1, unseen), x);
  const bool ok = std::abs(r.score - 0.6) <= kBackoffTol && r.backed_off &&
                  std::abs(routed.score - 0.6) <= kBackoffTol && routed.backed_off;
  return {ok, fmt::format("backoff_score {:.12f}, typed-miss query {:.12f} (want 0.6 +- {:g})", r.score,
                          routed.score, kBackoffTol)};
}

Outcome qa_gen_contract() {
  Stopwatch clock;
  auto lex = LexicalResource::load(wordnet_dir());
  Corpus c = synthetic_news(mix_seed(7, 0xacce), 5000, 60);
  QaGenConfig cfg;
  auto qs = generate_questions(c, lex, cfg);
  std::vector<std::string> failures;

  // (a) windows.
  const Partition* prev = nullptr;
  std::set<std::size_t> seen;
  bool disjoint = true;
  for (const auto& p : qs.partitions.partitions) {
    if (p.end.day_number() - p.start.day_number() + 1 > cfg.window_days) failures.push_back("window too wide");
    if (prev && !(prev->end < p.start)) disjoint = false;
    for (auto id : p.propositions) disjoint &= seen.insert(id).second;
    prev = &p;
  }
  if (!disjoint) failures.push_back("partitions overlap");

  std::map<int, const Partition*> by_id;
  for (const auto& p : qs.partitions.partitions) by_id[p.id] = &p;
  std::size_t negatives = 0;
  for (const auto& q : qs.questions) {
    if (q.polarity != Polarity::Negative) continue;
    ++negatives;
    auto ref = c.find_predicate(q.predicate);
    // (c) corpus-wide occurrence.
    if (!ref || c.predicate_occurrences(*ref) < 1) {
      failures.push_back(fmt::format("negative {} absent from corpus", q.id));
      continue;
    }
    // (b) absent from its own partition.
    for (auto id : by_id.at(q.partition_id)->propositions) {
      const auto& p = c.proposition(id);
      if (p.predicate == *ref && c.arg_keys(p) == q.args) {
        failures.push_back(fmt::format("negative {} occurs in partition {}", q.id, q.partition_id));
      }
    }
  }

  // (d) quadrants.
  std::map<std::pair<bool, Polarity>, std::size_t> quads;
  for (const auto& q : qs.questions) ++quads[{q.is_unary(), q.polarity}];
  for (const auto& [quad, n] : quads) {
    if (n != qs.balance.per_quadrant) failures.push_back("unequal quadrants");
  }
  if (qs.questions.empty() || negatives == 0) failures.push_back("no questions");

  // (e) byte-identical rerun.
  std::ostringstream a, b;
  write_questions(qs.questions, a);
  write_questions(generate_questions(c, lex, cfg).questions, b);
  if (a.str() != b.str()) failures.push_back("rerun differs");

  const double t = clock.seconds();
  if (t >= kQaGenSeconds) failures.push_back("too slow");
  return {failures.empty(),
          fmt::format("{} propositions, {} partitions, {} questions ({} per quadrant, {} quadrants), "
                      "{:.2f}s (limit {}s){}",
                      c.size(), qs.partitions.partitions.size(), qs.questions.size(),
                      qs.balance.per_quadrant, quads.size(), t, kQaGenSeconds,
                      failures.empty() ? "" : "; " + join(failures, "; "))};
}

AnswerRecord scored(std::uint64_t id, double confidence) {
  AnswerRecord r;
  r.question_id = id;
  r.model = "hand";
  r.confidence = confidence;
  if (confidence > 0.0) r.best_evidence = id;
  return r;
}

Question make_question(std::uint64_t id, const TypedPredicate& p, std::vector<std::string> args,
                       Polarity pol) {
  Question q;
  q.id = id;
  q.predicate = p;
  q.args = std::move(args);
  q.polarity = pol;
  return q;
}

Outcome evaluation_harness() {
  // Questions 1-20 are true, 21-40 false.
  GoldLabels gold;
  std::vector<AnswerRecord> records;
  for (std::uint64_t id = 1; id <= 40; ++id) {
    gold[id] = id <= 20;
    double conf = 0.0;
    if (id <= 10 || (id >= 21 && id <= 25)) conf = 0.9;
    else if (id <= 15) conf = 0.6;
    else if (id >= 26 && id <= 30) conf = 0.3;
    records.push_back(scored(id, conf));
  }
  // Worked by hand: at 0.9, 15 predicted of which 10 true; at 0.6, 20 and 15;
  // at 0.3, 25 and 15. Twenty questions are true.
  const std::vector<PrPoint> want_pr = {
      {0.3, 15.0 / 25.0, 15.0 / 20.0}, {0.6, 15.0 / 20.0, 15.0 / 20.0}, {0.9, 10.0 / 15.0, 10.0 / 20.0}};
  // Ties at 0.9 rank by id: 1..10, then 21..25.
  const std::vector<std::tuple<std::size_t, std::size_t, double>> want_acc = {
      {5, 5, 1.0}, {12, 12, 10.0 / 12.0}, {20, 20, 15.0 / 20.0}, {100, 25, 15.0 / 25.0}};

  std::vector<std::string> failures;
  auto curve = pr_curve(records, gold);
  if (curve.points.size() != want_pr.size()) {
    failures.push_back("PR point count");
  } else {
    for (std::size_t i = 0; i < want_pr.size(); ++i) {
      const auto& g = curve.points[i];
      const auto& w = want_pr[i];
      if (g.threshold != w.threshold || g.precision != w.precision || g.recall != w.recall) {
        failures.push_back(fmt::format("PR point {}", i));
      }
    }
  }
  for (const auto& [k, actual, acc] : want_acc) {
    auto got = accuracy_at_k(records, gold, k);
    if (got.k != actual || got.accuracy != acc) failures.push_back(fmt::format("acc@{}", k));
  }

  // Balanced fixture: ten questions per quadrant, every true one answerable.
  LocalGraphs gs;
  auto pp = TypeSignature::bivalent(kPerson, kPerson);
  auto up = TypeSignature::univalent(kPerson);
  const auto defeat = TypedPredicate::binary("defeat", kPerson, kPerson);
  const auto play = TypedPredicate::binary("play", kPerson, kPerson);
  const auto win = TypedPredicate::unary("win", 1, kPerson);
  const auto compete = TypedPredicate::unary("compete", 1, kPerson);
  TypedSubgraph bg;
  bg.signature = pp;
  bg.vertices = {defeat, play};
  bg.edges = {{0, 1, ArgMap::identity(2), 0.8, EdgeKind::BB}};
  bg.canonicalize();
  gs.bivalent[pp] = bg;
  TypedSubgraph ug;
  ug.signature = up;
  ug.vertices = {win, compete};
  ug.edges = {{0, 1, ArgMap::identity(1), 0.7, EdgeKind::UU}};
  ug.canonicalize();
  gs.univalent[up] = ug;
  auto store = GraphStore::from_graphs(std::move(gs));

  std::vector<Question> qs;
  std::map<std::uint64_t, std::vector<Evidence>> evidence;
  std::uint64_t next = 1;
  for (int i = 0; i < 10; ++i) {
    const std::string a = "s:a" + std::to_string(i), b = "s:b" + std::to_string(i);
    qs.push_back(make_question(next, play, {a, b}, Polarity::Positive));
    evidence[next++] = {{0, defeat, {a, b}}};
    qs.push_back(make_question(next, play, {b, a}, Polarity::Negative));
    evidence[next++] = {{0, defeat, {a, b}}};
    qs.push_back(make_question(next, compete, {a}, Polarity::Positive));
    evidence[next++] = {{1, win, {a}}};
    qs.push_back(make_question(next, compete, {b}, Polarity::Negative));
    evidence[next++] = {{1, win, {a}}};
  }
  auto fixture_gold = gold_labels(qs);
  auto max_recall = [&](const std::string& components) {
    std::vector<AnswerRecord> rs;
    auto set = ComponentSet::parse(components);
    for (const auto& q : qs) rs.push_back(answer_graph(q, evidence.at(q.id), store, set));
    return pr_curve(rs, fixture_gold).max_recall;
  };
  const double bb = max_recall("bb");
  const double uu = max_recall("uu");
  const double all = max_recall("bb,uu,bu");
  if (bb > 0.5 || uu > 0.5) failures.push_back("component exceeds the 50% ceiling");
  return {failures.empty(),
          fmt::format("40-question PR ({} points) and acc@K exact; balanced max recall BB {:.2f}, "
                      "UU {:.2f} (ceiling 0.50), all {:.2f}{}",
                      curve.points.size(), bb, uu, all,
                      failures.empty() ? "" : "; " + join(failures, "; "))};
}

Outcome additivity() {
  // kill(x, y) and die(y) share victims; murder.2(y) is a unary that also
  // goes with die(y). Unary die questions come with either binary evidence
  // (only BU can answer them) or unary evidence (UU can).
  std::vector<RawRecord> r;
  for (int i = 0; i < 20; ++i) {
    Arg victim{"victim" + std::to_string(i), "person"};
    r.push_back(binary("kill", {"killer" + std::to_string(i % 5), "person"}, victim));
    r.push_back(binary("attack", {"killer" + std::to_string(i % 5), "person"}, victim));
    r.push_back(unary("die", 1, victim));
    if (i % 2 == 0) r.push_back(unary("murder", 2, victim));
  }
  for (int i = 0; i < 10; ++i) r.push_back(unary("die", 1, {"elder" + std::to_string(i), "person"}));
  // Background in both the unary and the pair space keeps shared PMI positive.
  for (int i = 0; i < 100; ++i) {
    r.push_back(unary("visit", 1, {"tourist" + std::to_string(i), "person"}));
    r.push_back(binary("meet", {"tourist" + std::to_string(i), "person"},
                       {"host" + std::to_string(i % 7), "person"}));
  }
  Corpus c = build_corpus(r);
  auto store = GraphStore::from_graphs(build_local(c).graphs);

  const auto kill = TypedPredicate::binary("kill", kPerson, kPerson);
  const auto attack = TypedPredicate::binary("attack", kPerson, kPerson);
  const auto die = TypedPredicate::unary("die", 1, kPerson);
  const auto murder = TypedPredicate::unary("murder", 2, kPerson);
  const auto visit = TypedPredicate::unary("visit", 1, kPerson);
  std::vector<Question> qs;
  std::map<std::uint64_t, std::vector<Evidence>> evidence;
  std::uint64_t next = 1;
  for (int i = 0; i < 6; ++i) {
    const std::string k = "s:killer" + std::to_string(i), v = "s:victim" + std::to_string(i);
    const std::string w = "s:witness" + std::to_string(i);
    qs.push_back(make_question(next, die, {v}, Polarity::Positive));
    evidence[next++] = {{0, kill, {k, v}}};
    qs.push_back(make_question(next, die, {v}, Polarity::Positive));
    evidence[next++] = {{1, murder, {v}}};
    qs.push_back(make_question(next, visit, {v}, Polarity::Negative));
    evidence[next++] = {{1, murder, {v}}};
    qs.push_back(make_question(next, attack, {k, v}, Polarity::Positive));
    evidence[next++] = {{0, kill, {k, v}}};
    qs.push_back(make_question(next, attack, {v, k}, Polarity::Negative));
    evidence[next++] = {{0, kill, {k, v}}};
    qs.push_back(make_question(next, die, {w}, Polarity::Negative));
    evidence[next++] = {{0, kill, {k, v}}};
  }
  auto gold = gold_labels(qs);
  std::map<std::string, double> recall;
  for (const char* components : {"uu", "bu", "bb", "uu,bu", "bb,uu,bu"}) {
    std::vector<AnswerRecord> rs;
    auto set = ComponentSet::parse(components);
    for (const auto& q : qs) rs.push_back(answer_graph(q, evidence.at(q.id), store, set));
    recall[components] = pr_curve(rs, gold).max_recall;
  }
  bool ok = recall["uu,bu"] > recall["uu"];
  for (const char* component : {"uu", "bu", "bb", "uu,bu"}) ok &= recall["bb,uu,bu"] >= recall[component];
  return {ok, fmt::format("max recall UU {:.3f}, BU {:.3f}, BB {:.3f}, UU+BU {:.3f}, BB+UU+BU {:.3f}",
                          recall["uu"], recall["bu"], recall["bb"], recall["uu,bu"],
                          recall["bb,uu,bu"])};
}

int run_cli(const Settings& s, const std::string& args, const fs::path& log) {
  const std::string cmd = fmt::format("\"{}\" {} >> \"{}\" 2>&1", s.cli.string(), args, log.string());
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::size_t count_edges(const fs::path& dir) {
  std::size_t edges = 0;
  if (!fs::exists(dir)) return 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() != ".graph") continue;
    std::ifstream in(e.path());
    std::string line;
    while (std::getline(in, line)) edges += line.rfind("E\t", 0) == 0;
  }
  return edges;
}

std::size_t count_lines(const fs::path& file) {
  std::ifstream in(file);
  std::size_t n = 0;
  std::string line;
  while (std::getline(in, line)) n += !line.empty();
  return n;
}

Outcome end_to_end(const Settings& s) {
  Stopwatch clock;
  const fs::path out = s.work / "smoke";
  fs::remove_all(out);
  fs::create_directories(out);
  const fs::path log = s.work / "smoke.log";
  fs::remove(log);
  const std::string base = fmt::format("--config \"{}\" --out \"{}\" ", (s.data / "config.json").string(),
                                       out.string());
  for (const char* stage : {"ingest", "build-local", "globalize", "gen-questions", "answer --model exact",
                            "answer --model graph", "evaluate"}) {
    if (int rc = run_cli(s, base + stage, log); rc != 0) {
      return {false, fmt::format("`mgraph {}` exited {} (see {})", stage, rc, log.string())};
    }
  }
  const double t = clock.seconds();
  const std::size_t local = count_edges(out / "local" / "graphs");
  const std::size_t global = count_edges(out / "global" / "graphs");
  const std::size_t questions = count_lines(out / "questions" / "questions.jsonl");
  const fs::path csv = out / "report" / "graph_bb+bu+uu.csv";
  const std::size_t pr_rows = count_lines(csv);
  const bool ok = t < kSmokeSeconds && local > 0 && global > 0 && questions > 1 && pr_rows > 1 &&
                  fs::exists(out / "report" / "summary.txt");
  return {ok, fmt::format("{} local edges, {} global edges, {} question lines, {} PR rows, {:.2f}s "
                          "(limit {}s)",
                          local, global, questions, pr_rows, t, kSmokeSeconds)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mgraph acceptance run"};
  Settings s;
  app.add_option("--cli", s.cli, "mgraph executable")->required();
  app.add_option("--data", s.data, "Sample data directory")->required();
  app.add_option("--work", s.work, "Scratch directory")->required();
  CLI11_PARSE(app, argc, argv);
  fs::create_directories(s.work);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"mdih-oracle-equivalence", mdih_equivalence},
      {"score-formula-oracle", score_oracle},
      {"directionality-kill-die", directionality},
      {"swap-map-buy-sell", swap_map},
      {"globalization-identity", globalization_identity},
      {"backoff-averaging", backoff_averaging},
      {"qa-gen-contract", qa_gen_contract},
      {"evaluation-harness", evaluation_harness},
      {"additivity-bu", additivity},
      {"end-to-end-smoke", [&] { return end_to_end(s); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, fmt::format("threw: {}", e.what())};
    }
    failed += o.pass ? 0 : 1;
    std::cout << fmt::format("{} [{:2}] {}: {}", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                             o.detail)
              << std::endl;
  }
  std::cout << fmt::format("{} of {} criteria passed", criteria.size() - failed, criteria.size())
            << std::endl;
  return failed == 0 ? 0 : 1;
}
