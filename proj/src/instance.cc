// Copyright 2026 The subsel Authors
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

#include "subsel/instance.h"

#include <string>

#include "subsel/errors.h"

namespace subsel {

std::string_view SenseName(Sense sense) {
  return sense == Sense::kMinimize ? "minimize" : "maximize";
}

void ValidateWeights(std::span<const Weight> weights) {
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 1) {
      throw ValidationError("item " + std::to_string(i) + " has weight " +
                            std::to_string(weights[i]) +
                            "; weights must be positive integers");
    }
  }
}

Weight TotalWeight(std::span<const Weight> weights) {
  Int128 total = 0;
  for (const Weight w : weights) total += w;
  return NarrowToInt64(total);
}

Weight SumSelected(std::span<const Weight> weights,
                   std::span<const std::size_t> selected) {
  Int128 total = 0;
  for (const std::size_t i : selected) total += weights[i];
  return NarrowToInt64(total);
}

}  // namespace subsel
