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

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace mgraph {

// Sparse non-negative feature vector. Keys are strictly increasing, every
// stored weight is > 0 and `total` is their sum accumulated in key order.
struct SparseVector {
  std::vector<std::uint32_t> keys;
  std::vector<double> weights;
  double total = 0.0;

  // Sorts by key and drops non-positive weights. Keys must be unique.
  static SparseVector from_pairs(std::vector<std::pair<std::uint32_t, double>> entries);

  std::size_t size() const { return keys.size(); }
  bool empty() const { return keys.empty(); }
  // Weight of `key`, 0 when absent.
  double at(std::uint32_t key) const;

  bool operator==(const SparseVector&) const = default;
};

}  // namespace mgraph
