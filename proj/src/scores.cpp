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

#include "mgraph/scores.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mgraph/kernels.hpp"

namespace mgraph {

SparseVector SparseVector::from_pairs(std::vector<std::pair<std::uint32_t, double>> entries) {
  std::sort(entries.begin(), entries.end());
  SparseVector v;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && entries[i].first == entries[i - 1].first) {
      throw std::invalid_argument("duplicate key in sparse vector");
    }
    if (!(entries[i].second > 0.0)) continue;
    v.keys.push_back(entries[i].first);
    v.weights.push_back(entries[i].second);
    v.total += entries[i].second;
  }
  return v;
}

double SparseVector::at(std::uint32_t key) const {
  auto it = std::lower_bound(keys.begin(), keys.end(), key);
  if (it == keys.end() || *it != key) return 0.0;
  return weights[static_cast<std::size_t>(it - keys.begin())];
}

InclusionScores inclusion_scores(const SparseVector& u, const SparseVector& v) {
  InclusionScores s;
  if (u.empty() || v.empty()) return s;
  auto shared = kernels::shared_mass({u.keys, u.weights}, {v.keys, v.weights});
  if (shared.matches == 0) return s;
  // Subset sums taken in the same order never exceed the full sums.
  s.weeds = std::min(1.0, shared.left / u.total);
  s.lin = std::min(1.0, (shared.left + shared.right) / (u.total + v.total));
  s.binc = std::sqrt(s.weeds * s.lin);
  return s;
}

double weeds_precision(const SparseVector& u, const SparseVector& v) {
  return inclusion_scores(u, v).weeds;
}

double lin_similarity(const SparseVector& u, const SparseVector& v) {
  return inclusion_scores(u, v).lin;
}

double binc(const SparseVector& u, const SparseVector& v) { return inclusion_scores(u, v).binc; }

}  // namespace mgraph
