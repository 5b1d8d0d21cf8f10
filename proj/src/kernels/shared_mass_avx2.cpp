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

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "mgraph/kernels.hpp"

namespace mgraph::kernels {

namespace {

constexpr std::size_t kLanes = 8;

// Probes every key of the shorter list against 8-key blocks of the longer
// one. Matches are found in increasing key order, so the sums accumulate in
// the same order as the scalar merge.
template <bool kProbeIsLeft>
SharedMass probe_blocks(KeyedWeights probe, KeyedWeights scan) {
  SharedMass s;
  const std::size_t np = probe.keys.size(), ns = scan.keys.size();
  const std::uint32_t* sk = scan.keys.data();
  std::size_t j = 0;
  for (std::size_t i = 0; i < np; ++i) {
    const std::uint32_t key = probe.keys[i];
    // Everything before j is below key; skip whole blocks that stay below.
    while (j + kLanes <= ns && sk[j + kLanes - 1] < key) j += kLanes;
    std::size_t hit = ns;
    if (j + kLanes <= ns) {
      const __m256i block = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sk + j));
      const __m256i eq = _mm256_cmpeq_epi32(block, _mm256_set1_epi32(static_cast<int>(key)));
      const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(eq));
      if (mask != 0) hit = j + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(mask)));
    } else {
      while (j < ns && sk[j] < key) ++j;
      if (j < ns && sk[j] == key) hit = j;
    }
    if (hit == ns) continue;
    if constexpr (kProbeIsLeft) {
      s.left += probe.weights[i];
      s.right += scan.weights[hit];
    } else {
      s.left += scan.weights[hit];
      s.right += probe.weights[i];
    }
    ++s.matches;
    j = hit + 1;
  }
  return s;
}

}  // namespace

SharedMass shared_mass_avx2(KeyedWeights left, KeyedWeights right) {
  if (left.keys.size() <= right.keys.size()) return probe_blocks<true>(left, right);
  return probe_blocks<false>(right, left);
}

}  // namespace mgraph::kernels
