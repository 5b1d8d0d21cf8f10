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

// Sorted-key intersection kernels behind the inclusion scores.
//
// Every variant visits matching keys in increasing key order and adds the
// matched weights to its two accumulators in that order, so all variants
// return bit-identical sums. Only the key search is vectorized.

#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace mgraph::kernels {

struct SharedMass {
  double left = 0.0;   // sum of left weights over shared keys
  double right = 0.0;  // sum of right weights over shared keys
  std::size_t matches = 0;
};

struct KeyedWeights {
  std::span<const std::uint32_t> keys;
  std::span<const double> weights;
};

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

SharedMass shared_mass_scalar(KeyedWeights left, KeyedWeights right);
#if defined(MGRAPH_HAVE_AVX2)
SharedMass shared_mass_avx2(KeyedWeights left, KeyedWeights right);
#endif
#if defined(MGRAPH_HAVE_NEON)
SharedMass shared_mass_neon(KeyedWeights left, KeyedWeights right);
#endif

// True when the variant is compiled in and the running CPU supports it.
bool isa_supported(Isa isa);
// Fastest supported variant. MGRAPH_ISA=scalar|avx2|neon in the environment
// overrides the choice at first use.
Isa detected_isa();
Isa active_isa();
// Throws std::invalid_argument if `isa` is unsupported.
void set_active_isa(Isa isa);

// Dispatches to the active variant.
SharedMass shared_mass(KeyedWeights left, KeyedWeights right);

}  // namespace mgraph::kernels
