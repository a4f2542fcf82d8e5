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

#ifndef SUBSEL_MAX_KNAPSACK_H_
#define SUBSEL_MAX_KNAPSACK_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "subsel/instance.h"
#include "subsel/min_knapsack.h"
#include "subsel/rational.h"

namespace subsel {

// Single packing constraint: a subset is feasible iff its sizes sum to at
// most `capacity`.
struct MaxKnapsackStructure {
  static constexpr Sense kSense = Sense::kMaximize;

  std::vector<Weight> sizes;
  Weight capacity = 0;

  friend bool operator==(const MaxKnapsackStructure&,
                         const MaxKnapsackStructure&) = default;
};

using MaxKnapsackInstance = SubsetInstance<MaxKnapsackStructure>;

void Validate(const MaxKnapsackInstance& instance);

bool IsFeasible(const MaxKnapsackInstance& instance,
                std::span<const std::size_t> selected);

std::size_t StructureBytes(const MaxKnapsackStructure& structure);

// Profit-indexed O(n W) DP: min_size[p] is the smallest total size with
// profit exactly p; the answer is the largest p with min_size[p] <= capacity.
// Ties prefer leaving the current item out. Reports n * (W + 1) DP cells.
SolutionReport ExactDpMax(
    const MaxKnapsackInstance& instance,
    std::uint64_t cell_budget = kDefaultReconstructBudget);

DpValue ExactDpMaxValue(const MaxKnapsackInstance& instance,
                        std::uint64_t cell_budget);

// Better of the density-ordered greedy prefix and the best single item that
// fits; at least OPT / 2.
SolutionReport ApproxHalfMax(const MaxKnapsackInstance& instance);

SolutionReport BruteForceMax(const MaxKnapsackInstance& instance);

SolverHooks<MaxKnapsackStructure> MaxKnapsackHooks();

// Requires 0 < epsilon < 1.
SolutionReport FptasMax(const MaxKnapsackInstance& instance,
                        const Rational& epsilon);

}  // namespace subsel

#endif  // SUBSEL_MAX_KNAPSACK_H_
