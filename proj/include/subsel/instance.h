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

#ifndef SUBSEL_INSTANCE_H_
#define SUBSEL_INSTANCE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "subsel/rational.h"

namespace subsel {

using Weight = std::int64_t;

enum class Sense { kMinimize, kMaximize };

std::string_view SenseName(Sense sense);

// A subset selection instance (X, w, S): items 0..n-1 with positive integer
// objective weights and a problem-specific feasibility structure. The
// structure type fixes the optimization sense through `Structure::kSense`.
template <typename Structure>
struct SubsetInstance {
  std::vector<Weight> weights;
  Structure structure;

  std::size_t size() const { return weights.size(); }
  static constexpr Sense sense() { return Structure::kSense; }

  friend bool operator==(const SubsetInstance&,
                         const SubsetInstance&) = default;
};

// Throws ValidationError unless every weight is >= 1.
void ValidateWeights(std::span<const Weight> weights);

// W = sum of all weights; throws OverflowError past int64.
Weight TotalWeight(std::span<const Weight> weights);

// Sum of `weights` over `selected`.
Weight SumSelected(std::span<const Weight> weights,
                   std::span<const std::size_t> selected);

// Counted work attached to a solver result.
struct WorkCounters {
  std::uint64_t dp_cells = 0;
  std::uint64_t approx_steps = 0;
  // W' of the instance the exact solver actually ran on, when it was scaled.
  std::optional<Weight> scaled_total_weight;
};

struct SolutionReport {
  std::vector<std::size_t> selected;  // ascending item ids
  Weight value = 0;                   // under the original weights
  bool feasible = false;
  Rational guarantee = Rational(1);   // proven multiplicative bound
  Weight bound_used = 0;              // UB or LB from the approximation
  WorkCounters work;
};

// Algorithm A (exact, pseudo-polynomial) and algorithm B (rho-approximation)
// for one problem.
template <typename Structure>
struct SolverHooks {
  using Solver = std::function<SolutionReport(const SubsetInstance<Structure>&)>;
  Solver exact;
  Solver approx;
  Rational rho;
};

}  // namespace subsel

#endif  // SUBSEL_INSTANCE_H_
