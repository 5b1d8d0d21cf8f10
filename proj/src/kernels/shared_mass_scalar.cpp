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

#include "mgraph/kernels.hpp"

namespace mgraph::kernels {

SharedMass shared_mass_scalar(KeyedWeights left, KeyedWeights right) {
  SharedMass s;
  std::size_t i = 0, j = 0;
  const std::size_t nl = left.keys.size(), nr = right.keys.size();
  while (i < nl && j < nr) {
    const std::uint32_t a = left.keys[i], b = right.keys[j];
    if (a < b) {
      ++i;
    } else if (b < a) {
      ++j;
    } else {
      s.left += left.weights[i];
      s.right += right.weights[j];
      ++s.matches;
      ++i;
      ++j;
    }
  }
  return s;
}

}  // namespace mgraph::kernels
