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

// Distributional inclusion scores between sparse feature vectors.
//
//   weeds(u, v) = sum_{f in u & v} u[f] / sum_f u[f]           (directional)
//   lin(u, v)   = sum_{f in u & v} (u[f] + v[f]) / (|u| + |v|)  (symmetric)
//   binc(u, v)  = sqrt(weeds(u, v) * lin(u, v))
//
// All three lie in [0, 1] and are 0 when the relevant mass is empty.

#pragma once

#include "mgraph/sparse_vector.hpp"

namespace mgraph {

struct InclusionScores {
  double weeds = 0.0;
  double lin = 0.0;
  double binc = 0.0;
};

// One intersection pass for all three scores.
InclusionScores inclusion_scores(const SparseVector& u, const SparseVector& v);

double weeds_precision(const SparseVector& u, const SparseVector& v);
double lin_similarity(const SparseVector& u, const SparseVector& v);
double binc(const SparseVector& u, const SparseVector& v);

}  // namespace mgraph
