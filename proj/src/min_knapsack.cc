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

#include "subsel/min_knapsack.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "decision_table.h"
#include "subsel/brute_force.h"
#include "subsel/errors.h"
#include "subsel/fptas.h"

namespace subsel {
namespace {

constexpr Rational kRho{2};

std::size_t DecimalLength(Weight v) { return std::to_string(v).size(); }

Weight TotalSize(const MinKnapsackInstance& instance) {
  return TotalWeight(instance.structure.sizes);
}

void CheckCoverable(const MinKnapsackInstance& instance) {
  if (TotalSize(instance) < instance.structure.demand) {
    throw InfeasibleInstance(
        "items cover at most " + std::to_string(TotalSize(instance)) +
        " < demand " + std::to_string(instance.structure.demand));
  }
}

std::uint64_t CellCount(const MinKnapsackInstance& instance,
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

SolutionReport MakeReport(const MinKnapsackInstance& instance,
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

}  // namespace

void Validate(const MinKnapsackInstance& instance) {
  ValidateWeights(instance.weights);
  const auto& s = instance.structure;
  if (s.sizes.size() != instance.weights.size()) {
    throw ValidationError("minkp: " + std::to_string(s.sizes.size()) +
                          " sizes for " +
                          std::to_string(instance.weights.size()) + " items");
  }
  for (std::size_t i = 0; i < s.sizes.size(); ++i) {
    if (s.sizes[i] < 1) {
      throw ValidationError("minkp: item " + std::to_string(i) +
                            " has non-positive size");
    }
  }
  if (s.demand < 0) throw ValidationError("minkp: negative demand");
}

bool IsFeasible(const MinKnapsackInstance& instance,
                std::span<const std::size_t> selected) {
  return SumSelected(instance.structure.sizes, selected) >=
         instance.structure.demand;
}

std::size_t StructureBytes(const MinKnapsackStructure& structure) {
  std::size_t bytes = DecimalLength(structure.demand) + 1;
  for (const Weight a : structure.sizes) bytes += DecimalLength(a) + 1;
  return bytes;
}

SolutionReport ExactDpMin(const MinKnapsackInstance& instance,
                          std::uint64_t cell_budget) {
  Validate(instance);
  CheckCoverable(instance);
  const std::uint64_t cells = CellCount(instance, cell_budget);
  const std::size_t n = instance.size();
  const auto total = static_cast<std::size_t>(TotalWeight(instance.weights));
  const auto& sizes = instance.structure.sizes;

  std::vector<Weight> best(total + 1, 0);
  internal::DecisionTable taken(n, total + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto w = static_cast<std::size_t>(instance.weights[i]);
    for (std::size_t c = total; c >= w; --c) {
      const Weight with = best[c - w] + sizes[i];
      if (with > best[c]) {
        best[c] = with;
        taken.Set(i, c);
      }
    }
  }

  std::size_t cost = 0;
  while (best[cost] < instance.structure.demand) ++cost;
  std::vector<std::size_t> selected;
  for (std::size_t i = n; i-- > 0;) {
    if (taken.Get(i, cost)) {
      selected.push_back(i);
      cost -= static_cast<std::size_t>(instance.weights[i]);
    }
  }
  SolutionReport report = MakeReport(instance, std::move(selected), 1);
  report.work.dp_cells = cells;
  return report;
}

DpValue ExactDpMinValue(const MinKnapsackInstance& instance,
                        std::uint64_t cell_budget) {
  Validate(instance);
  CheckCoverable(instance);
  const std::uint64_t cells = CellCount(instance, cell_budget);
  const auto total = static_cast<std::size_t>(TotalWeight(instance.weights));
  const auto& sizes = instance.structure.sizes;

  std::vector<Weight> best(total + 1, 0);
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const auto w = static_cast<std::size_t>(instance.weights[i]);
    const Weight a = sizes[i];
    for (std::size_t c = total; c >= w; --c) {
      best[c] = std::max(best[c], best[c - w] + a);
    }
  }
  std::size_t cost = 0;
  while (best[cost] < instance.structure.demand) ++cost;
  return DpValue{static_cast<Weight>(cost), cells};
}

SolutionReport Approx2Min(const MinKnapsackInstance& instance) {
  Validate(instance);
  CheckCoverable(instance);
  const Weight demand = instance.structure.demand;
  const auto& w = instance.weights;
  const auto& a = instance.structure.sizes;
  const std::size_t n = instance.size();
  std::uint64_t steps = 0;

  if (demand == 0) return MakeReport(instance, {}, kRho);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) {
                     ++steps;
                     return Int128{w[i]} * a[j] < Int128{w[j]} * a[i];
                   });

  std::vector<std::size_t> fixed;
  Weight fixed_size = 0;
  Weight fixed_cost = 0;
  std::vector<std::size_t> best;
  std::optional<Weight> best_cost;

  std::vector<std::size_t> remaining = std::move(order);
  while (true) {
    Weight size = fixed_size;
    Weight cost = fixed_cost;
    std::size_t k = 0;
    for (; k < remaining.size(); ++k) {
      ++steps;
      if (size + a[remaining[k]] >= demand) break;
      size += a[remaining[k]];
      cost += w[remaining[k]];
    }
    if (k == remaining.size()) break;

    const std::size_t critical = remaining[k];
    if (!best_cost || cost + w[critical] < *best_cost) {
      best_cost = cost + w[critical];
      best = fixed;
      best.insert(best.end(), remaining.begin(), remaining.begin() + k);
      best.push_back(critical);
      steps += best.size();
    }
    fixed.insert(fixed.end(), remaining.begin(), remaining.begin() + k);
    fixed_size = size;
    fixed_cost = cost;
    remaining.erase(remaining.begin(), remaining.begin() + k + 1);
  }

  SolutionReport report = MakeReport(instance, std::move(best), kRho);
  report.bound_used = report.value;
  report.work.approx_steps = steps;
  return report;
}

SolutionReport BruteForceMin(const MinKnapsackInstance& instance) {
  Validate(instance);
  const auto& a = instance.structure.sizes;
  const Weight demand = instance.structure.demand;
  auto best = EnumerateBestSubset(
      instance.weights, Sense::kMinimize, [&](std::uint32_t mask) {
        Weight covered = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (mask >> i & 1U) covered += a[i];
        }
        return covered >= demand;
      });
  if (!best) throw InfeasibleInstance("no subset covers the demand");
  return MakeReport(instance, std::move(*best), 1);
}

SolverHooks<MinKnapsackStructure> MinKnapsackHooks() {
  return {.exact = [](const MinKnapsackInstance& i) { return ExactDpMin(i); },
          .approx = Approx2Min,
          .rho = kRho};
}

SolutionReport FptasMin(const MinKnapsackInstance& instance,
                        const Rational& epsilon) {
  Validate(instance);
  return Fptas(instance, epsilon, MinKnapsackHooks());
}

}  // namespace subsel
