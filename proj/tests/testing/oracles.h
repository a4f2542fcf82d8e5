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

#ifndef SUBSEL_TESTS_TESTING_ORACLES_H_
#define SUBSEL_TESTS_TESTING_ORACLES_H_

// Test-only optimum oracles. Deliberately share no code with the library:
// plain include/exclude recursion over every subset.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace subsel::testing {

// Calls visit(selection, total_weight, total_size) for all 2^n subsets.
inline void ForEachSubset(
    const std::vector<std::int64_t>& weights,
    const std::vector<std::int64_t>& sizes,
    const std::function<void(const std::vector<std::size_t>&, std::int64_t,
                             std::int64_t)>& visit) {
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::int64_t, std::int64_t)> rec =
      [&](std::size_t i, std::int64_t w, std::int64_t a) {
        if (i == weights.size()) {
          visit(chosen, w, a);
          return;
        }
        rec(i + 1, w, a);
        chosen.push_back(i);
        rec(i + 1, w + weights[i], a + sizes[i]);
        chosen.pop_back();
      };
  rec(0, 0, 0);
}

// Minimum weight of a subset with size >= demand.
inline std::optional<std::int64_t> OracleMinCover(
    const std::vector<std::int64_t>& weights,
    const std::vector<std::int64_t>& sizes, std::int64_t demand) {
  std::optional<std::int64_t> best;
  ForEachSubset(weights, sizes,
                [&](const std::vector<std::size_t>&, std::int64_t w,
                    std::int64_t a) {
                  if (a >= demand && (!best || w < *best)) best = w;
                });
  return best;
}

// Maximum weight of a subset with size <= capacity.
inline std::int64_t OracleMaxPack(const std::vector<std::int64_t>& weights,
                                  const std::vector<std::int64_t>& sizes,
                                  std::int64_t capacity) {
  std::int64_t best = 0;
  ForEachSubset(weights, sizes,
                [&](const std::vector<std::size_t>&, std::int64_t w,
                    std::int64_t a) {
                  if (a <= capacity && w > best) best = w;
                });
  return best;
}

}  // namespace subsel::testing

#endif  // SUBSEL_TESTS_TESTING_ORACLES_H_
