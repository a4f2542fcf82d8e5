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

#ifndef SUBSEL_BRUTE_FORCE_H_
#define SUBSEL_BRUTE_FORCE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subsel/errors.h"
#include "subsel/instance.h"

namespace subsel {

inline constexpr std::size_t kMaxBruteForceItems = 25;

// Enumerates all 2^n subsets and returns the best feasible one, or nullopt
// if none is feasible. Ties go to the lexicographically smallest ascending
// index sequence. `feasible` is called with the selection mask.
template <typename FeasibleFn>
std::optional<std::vector<std::size_t>> EnumerateBestSubset(
    std::span<const Weight> weights, Sense sense, FeasibleFn&& feasible) {
  const std::size_t n = weights.size();
  if (n > kMaxBruteForceItems) {
    throw InstanceTooLarge("brute force limited to " +
                           std::to_string(kMaxBruteForceItems) +
                           " items, got " + std::to_string(n));
  }
  auto to_indices = [n](std::uint32_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) out.push_back(i);
    }
    return out;
  };
  std::optional<std::uint32_t> best_mask;
  Weight best_value = 0;
  const std::uint32_t end = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    if (!feasible(mask)) continue;
    Weight value = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) value += weights[i];
    }
    bool better = !best_mask.has_value();
    if (!better) {
      if (value != best_value) {
        better = sense == Sense::kMinimize ? value < best_value
                                           : value > best_value;
      } else {
        better = to_indices(mask) < to_indices(*best_mask);
      }
    }
    if (better) {
      best_mask = mask;
      best_value = value;
    }
  }
  if (!best_mask) return std::nullopt;
  return to_indices(*best_mask);
}

}  // namespace subsel

#endif  // SUBSEL_BRUTE_FORCE_H_
