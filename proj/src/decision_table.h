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

#ifndef SUBSEL_SRC_DECISION_TABLE_H_
#define SUBSEL_SRC_DECISION_TABLE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace subsel::internal {

// rows x cols bit matrix recording "item taken" decisions of a 0/1 knapsack
// DP, used for backtracking.
class DecisionTable {
 public:
  DecisionTable(std::size_t rows, std::size_t cols)
      : cols_(cols), bits_((rows * cols + 63) / 64, 0) {}

  void Set(std::size_t row, std::size_t col) {
    const std::size_t k = row * cols_ + col;
    bits_[k >> 6] |= std::uint64_t{1} << (k & 63);
  }

  bool Get(std::size_t row, std::size_t col) const {
    const std::size_t k = row * cols_ + col;
    return (bits_[k >> 6] >> (k & 63)) & 1U;
  }

 private:
  std::size_t cols_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace subsel::internal

#endif  // SUBSEL_SRC_DECISION_TABLE_H_
