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


#include "mgraph/mdih.hpp"

#include <fmt/format.h>

namespace mgraph {

namespace {

int arity_of(const TupleSet& tuples, int fallback, const char* what) {
  if (tuples.empty()) return fallback;
  const auto arity = static_cast<int>(tuples.begin()->size());
  for (const auto& t : tuples) {
    if (static_cast<int>(t.size()) != arity) {
      throw ContractError(fmt::format("{} tuples have mixed arity", what));
    }
  }
  return arity;
}

}  // namespace

bool mdih_oracle(const TupleSet& premise, const TupleSet& hypothesis, const ArgMap& map) {
  // Empty sets take the smallest arity the map can apply to.
  const int premise_arity = arity_of(premise, map.j.empty() ? 0 : map.j.back(), "premise");
  const int hypothesis_arity = arity_of(hypothesis, static_cast<int>(map.size()), "hypothesis");
  if (!map.valid_for(premise_arity, hypothesis_arity)) {
    throw ContractError(fmt::format("map {} does not fit arities {} -> {}", map.to_string(),
                                    premise_arity, hypothesis_arity));
  }
  for (const auto& t : premise) {
    if (!hypothesis.contains(map.apply(t))) return false;
  }
  return true;
}

TupleSet tuple_set(const Corpus& corpus, PredicateRef predicate) {
  TupleSet out;
  for (const auto& p : corpus.propositions()) {
    if (p.predicate != predicate) continue;
    ArgTuple t;
    t.reserve(p.args.size());
    for (auto a : p.args) t.push_back(a.index);
    out.insert(std::move(t));
  }
  return out;
}

}  // namespace mgraph
