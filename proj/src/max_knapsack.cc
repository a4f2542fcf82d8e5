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

#include "subsel/max_knapsack.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "decision_table.h"
#include "subsel/brute_force.h"
#include "subsel/errors.h"
#include "subsel/fptas.h"

namespace subsel {
namespace {

const Rational kRho(1, 2);
constexpr Weight kUnreachable = std::numeric_limits<Weight>::max();

std::uint64_t CellCount(const MaxKnapsackInstance& instance,
                        std::uint64_t budget) {
  const Int128 cells =
      CheckedMul(static_cast<Int128>(instance.size()),
                 CheckedAdd(TotalWeight(instance.weights), 1));
  if (cells > budget) {
    throw BudgetExceeded("exact DP needs " + Int128ToString(cells) +
                         " cells, budget is " + std::to_string(budget));
  }
  return static_cast<std::uint64_t>(cells);
}

SolutionReport MakeReport(const MaxKnapsackInstance& instance,
                          std::vector<std::size_t> selected,
                          Rational guarantee) {
  std::sort(selected.begin(), selected.end());
  SolutionReport report;
  report.value = SumSelected(instance.weights, selected);
  report.feasible = IsFeasible(instance, selected);
  report.selected = std::move(selected);
  report.guarantee = guarantee;
  return report;
}

// Fills min_size over profits 0..W; records decisions if `taken` is set.
void RunProfitDp(const MaxKnapsackInstance& instance,
                 std::vector<Weight>& min_size,
                 internal::DecisionTable* taken) {
  const auto& sizes = instance.structure.sizes;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const auto w = static_cast<std::size_t>(instance.weights[i]);
    const Weight a = sizes[i];
    for (std::size_t p = min_size.size() - 1; p >= w; --p) {
      if (min_size[p - w] == kUnreachable) continue;
      const Weight with = min_size[p - w] + a;
      if (with < min_size[p]) {
        min_size[p] = with;
        if (taken != nullptr) taken->Set(i, p);
      }
    }
  }
}

std::size_t BestProfit(const std::vector<Weight>& min_size, Weight capacity) {
  std::size_t p = min_size.size() - 1;
  while (min_size[p] > capacity) --p;  // min_size[0] == 0 <= capacity
  return p;
}

}  // namespace

void Validate(const MaxKnapsackInstance& instance) {
  ValidateWeights(instance.weights);
  const auto& s = instance.structure;
  if (s.sizes.size() != instance.weights.size()) {
    throw ValidationError("maxkp: " + std::to_string(s.sizes.size()) +
                          " sizes for " +
                          std::to_string(instance.weights.size()) + " items");
  }
  for (std::size_t i = 0; i < s.sizes.size(); ++i) {
    if (s.sizes[i] < 1) {
      throw ValidationError("maxkp: item " + std::to_string(i) +
                            " has non-positive size");
    }
  }
  if (s.capacity < 0) throw ValidationError("maxkp: negative capacity");
}

bool IsFeasible(const MaxKnapsackInstance& instance,
                std::span<const std::size_t> selected) {
  return SumSelected(instance.structure.sizes, selected) <=
         instance.structure.capacity;
}

std::size_t StructureBytes(const MaxKnapsackStructure& structure) {
  std::size_t bytes = std::to_string(structure.capacity).size() + 1;
  for (const Weight a : structure.sizes) bytes += std::to_string(a).size() + 1;
  return bytes;
}

SolutionReport ExactDpMax(const MaxKnapsackInstance& instance,
                          std::uint64_t cell_budget) {
  Validate(instance);
  const std::uint64_t cells = CellCount(instance, cell_budget);
  const std::size_t n = instance.size();
  const auto total = static_cast<std::size_t>(TotalWeight(instance.weights));

  std::vector<Weight> min_size(total + 1, kUnreachable);
  min_size[0] = 0;
  internal::DecisionTable taken(n, total + 1);
  RunProfitDp(instance, min_size, &taken);

  std::size_t profit = BestProfit(min_size, instance.structure.capacity);
  std::vector<std::size_t> selected;
  for (std::size_t i = n; i-- > 0;) {
    if (taken.Get(i, profit)) {
      selected.push_back(i);
      profit -= static_cast<std::size_t>(instance.weights[i]);
    }
  }
  SolutionReport report = MakeReport(instance, std::move(selected), 1);
  report.work.dp_cells = cells;
  return report;
}

DpValue ExactDpMaxValue(const MaxKnapsackInstance& instance,
                        std::uint64_t cell_budget) {
  Validate(instance);
  const std::uint64_t cells = CellCount(instance, cell_budget);
  const auto total = static_cast<std::size_t>(TotalWeight(instance.weights));
  std::vector<Weight> min_size(total + 1, kUnreachable);
  min_size[0] = 0;
  RunProfitDp(instance, min_size, nullptr);
  return DpValue{
      static_cast<Weight>(BestProfit(min_size, instance.structure.capacity)),
      cells};
}

SolutionReport ApproxHalfMax(const MaxKnapsackInstance& instance) {
  Validate(instance);
  const auto& w = instance.weights;
  const auto& a = instance.structure.sizes;
  const Weight capacity = instance.structure.capacity;
  std::uint64_t steps = 0;

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    ++steps;
    if (a[i] <= capacity) order.push_back(i);
  }
  // Density w / a descending; stable sort keeps smaller ids first on ties.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) {
                     ++steps;
                     return Int128{w[i]} * a[j] > Int128{w[j]} * a[i];
                   });

  std::vector<std::size_t> prefix;
  Weight used = 0;
  Weight prefix_value = 0;
  for (const std::size_t i : order) {
    ++steps;
    if (used + a[i] > capacity) break;
    used += a[i];
    prefix_value += w[i];
    prefix.push_back(i);
  }

  std::optional<std::size_t> single;
  for (const std::size_t i : order) {
    ++steps;
    if (!single || w[i] > w[*single] || (w[i] == w[*single] && i < *single)) {
      single = i;
    }
  }

  std::vector<std::size_t> chosen = std::move(prefix);
  if (single && w[*single] > prefix_value) chosen = {*single};
  SolutionReport report = MakeReport(instance, std::move(chosen), kRho);
  report.bound_used = report.value;
  report.work.approx_steps = steps;
  return report;
}

SolutionReport BruteForceMax(const MaxKnapsackInstance& instance) {
  Validate(instance);
  const auto& a = instance.structure.sizes;
  const Weight capacity = instance.structure.capacity;
  auto best = EnumerateBestSubset(
      instance.weights, Sense::kMaximize, [&](std::uint32_t mask) {
        Weight used = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (mask >> i & 1U) used += a[i];
        }
        return used <= capacity;
      });
  // The empty set always fits.
  return MakeReport(instance, std::move(*best), 1);
}

SolverHooks<MaxKnapsackStructure> MaxKnapsackHooks() {
  return {.exact = [](const MaxKnapsackInstance& i) { return ExactDpMax(i); },
          .approx = ApproxHalfMax,
          .rho = kRho};
}

SolutionReport FptasMax(const MaxKnapsackInstance& instance,
                        const Rational& epsilon) {
  Validate(instance);
  return Fptas(instance, epsilon, MaxKnapsackHooks());
}

}  // namespace subsel
