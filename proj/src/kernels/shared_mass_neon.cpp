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

// AArch64 variant. NEON is mandatory on AArch64, so no runtime check.

#include <arm_neon.h>

#include "mgraph/kernels.hpp"

namespace mgraph::kernels {

namespace {

constexpr std::size_t kLanes = 4;

template <bool kProbeIsLeft>
SharedMass probe_blocks(KeyedWeights probe, KeyedWeights scan) {
  SharedMass s;
  const std::size_t np = probe.keys.size(), ns = scan.keys.size();
  const std::uint32_t* sk = scan.keys.data();
  std::size_t j = 0;
  for (std::size_t i = 0; i < np; ++i) {
    const std::uint32_t key = probe.keys[i];
    while (j + kLanes <= ns && sk[j + kLanes - 1] < key) j += kLanes;
    std::size_t hit = ns;
    if (j + kLanes <= ns) {
      const uint32x4_t eq = vceqq_u32(vld1q_u32(sk + j), vdupq_n_u32(key));
      if (vmaxvq_u32(eq) != 0) {
        std::uint32_t lanes[kLanes];
        vst1q_u32(lanes, eq);
        for (std::size_t k = 0; k < kLanes; ++k) {
          if (lanes[k] != 0) {
            hit = j + k;
            break;
          }
        }
      }
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

SharedMass shared_mass_neon(KeyedWeights left, KeyedWeights right) {
  if (left.keys.size() <= right.keys.size()) return probe_blocks<true>(left, right);
  return probe_blocks<false>(right, left);
}

}  // namespace mgraph::kernels
