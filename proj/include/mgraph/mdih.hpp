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


// Exact multivalent inclusion check over argument tuple sets.
//
// For premise tuples P (arity I), hypothesis tuples H (arity J) and a map
// (j, m), the check holds iff every premise tuple, restricted to slots j and
// rearranged by m, is a hypothesis tuple.

#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "mgraph/corpus.hpp"
#include "mgraph/types.hpp"

namespace mgraph {

using ArgTuple = std::vector<std::uint32_t>;
using TupleSet = std::set<ArgTuple>;

// Throws ContractError when a tuple arity disagrees with the map, or the map
// is not valid for (I, J).
bool mdih_oracle(const TupleSet& premise, const TupleSet& hypothesis, const ArgMap& map);

// Argument tuples (entity indexes) of one predicate in a corpus.
TupleSet tuple_set(const Corpus& corpus, PredicateRef predicate);

}  // namespace mgraph
