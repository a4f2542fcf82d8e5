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

#ifndef SUBSEL_MIN_KNAPSACK_H_
#define SUBSEL_MIN_KNAPSACK_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "subsel/instance.h"
#include "subsel/rational.h"

namespace subsel {

// Single covering constraint: a subset is feasible iff its sizes sum to at
// least `demand`.
struct MinKnapsackStructure {
  static constexpr Sense kSense = Sense::kMinimize;

  std::vector<Weight> sizes;
  Weight demand = 0;

  friend bool operator==(const MinKnapsackStructure&,
                         const MinKnapsackStructure&) = default;
};

using MinKnapsackInstance = SubsetInstance<MinKnapsackStructure>;

// Throws ValidationError on mismatched lengths, non-positive weights or
// sizes, or a negative demand.
void Validate(const MinKnapsackInstance& instance);

bool IsFeasible(const MinKnapsackInstance& instance,
                std::span<const std::size_t> selected);

// Byte length of the structure's text encoding; stands in for l(S).
std::size_t StructureBytes(const MinKnapsackStructure& structure);

// Decision-bit budget for ExactDpMin reconstruction (n * (W + 1) bits).
inline constexpr std::uint64_t kDefaultReconstructBudget = 4'000'000'000;

// Exact O(n W) dynamic program over objective cost. best[c] is the largest
// coverage reachable at cost <= c; the answer is the least c with
// best[c] >= demand. Ties prefer leaving the current item out. Reports
// n * (W + 1) DP cells.
//
// Throws InfeasibleInstance if all items together miss the demand and
// BudgetExceeded if n * (W + 1) exceeds `cell_budget`.
SolutionReport ExactDpMin(
    const MinKnapsackInstance& instance,
    std::uint64_t cell_budget = kDefaultReconstructBudget);

struct DpValue {
  Weight value = 0;
  std::uint64_t dp_cells = 0;
};

// Same table as ExactDpMin with a single rolling row and no backtracking.
DpValue ExactDpMinValue(const MinKnapsackInstance& instance,
                        std::uint64_t cell_budget);

// 2-approximation in O(n^2) after an O(n log n) sort by w / a.
//
// Items are scanned in efficiency order on top of a growing fixed prefix.
// Each round finds the critical item that first completes the cover; fixed
// prefix + scanned prefix + critical item is a candidate solution. The
// scanned prefix then joins the fixed prefix and the critical item is
// discarded. The cheapest candidate is returned.
//
// Consider the first round whose critical item belongs to some optimal
// solution. Up to then no optimal item was discarded, so the fixed and
// scanned prefix is the cheapest way to cover its own (short of demand)
// size and costs at most OPT; the critical item costs at most OPT too.
SolutionReport Approx2Min(const MinKnapsackInstance& instance);

// Exhaustive oracle; n <= 25.
SolutionReport BruteForceMin(const MinKnapsackInstance& instance);

SolverHooks<MinKnapsackStructure> MinKnapsackHooks();

SolutionReport FptasMin(const MinKnapsackInstance& instance,
                        const Rational& epsilon);

}  // namespace subsel

#endif  // SUBSEL_MIN_KNAPSACK_H_
