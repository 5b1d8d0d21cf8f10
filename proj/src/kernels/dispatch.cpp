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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "mgraph/kernels.hpp"

namespace mgraph::kernels {

namespace {

using KernelFn = SharedMass (*)(KeyedWeights, KeyedWeights);

KernelFn kernel_for(Isa isa) {
  switch (isa) {
#if defined(MGRAPH_HAVE_AVX2)
    case Isa::Avx2: return &shared_mass_avx2;
#endif
#if defined(MGRAPH_HAVE_NEON)
    case Isa::Neon: return &shared_mass_neon;
#endif
    default: return &shared_mass_scalar;
  }
}

Isa initial_isa() {
  if (const char* env = std::getenv("MGRAPH_ISA")) {
    std::string want(env);
    if (want == "scalar") return Isa::Scalar;
    if (want == "avx2" && isa_supported(Isa::Avx2)) return Isa::Avx2;
    if (want == "neon" && isa_supported(Isa::Neon)) return Isa::Neon;
  }
  if (isa_supported(Isa::Avx2)) return Isa::Avx2;
  if (isa_supported(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

struct Dispatch {
  std::atomic<Isa> isa{initial_isa()};
  std::atomic<KernelFn> fn{kernel_for(isa.load())};
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "?";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(MGRAPH_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(MGRAPH_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() { return initial_isa(); }

Isa active_isa() { return dispatch().isa.load(); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("kernel variant not supported: " + std::string(to_string(isa)));
  }
  dispatch().isa.store(isa);
  dispatch().fn.store(kernel_for(isa));
}

SharedMass shared_mass(KeyedWeights left, KeyedWeights right) {
  return dispatch().fn.load(std::memory_order_relaxed)(left, right);
}

}  // namespace mgraph::kernels
