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

#ifndef SUBSEL_FPTAS_H_
#define SUBSEL_FPTAS_H_

#include <cstdint>

#include "subsel/instance.h"
#include "subsel/rational.h"
#include "subsel/scaling.h"

namespace subsel {

// Approximation scheme built from an exact pseudo-polynomial solver and a
// constant-ratio approximation:
//
//   1. run hooks.approx to get UB (minimize) or LB (maximize);
//   2. derive z from that bound and round every weight (ScaleWeightsMin/Max);
//   3. solve the rounded instance exactly with hooks.exact;
//   4. re-value the chosen subset under the original weights.
//
// The rounded instance has W' = O(n^2 / epsilon), so step 3 costs
// exact-solver time on W' rather than on W. The result is within (1 + eps)
// of optimal when minimizing and (1 - eps) when maximizing.
//
// A zero bound is returned as is (only the empty set has value 0). When
// z <= 1 rounding cannot shrink the instance and the original is solved
// exactly instead.
template <typename Structure>
SolutionReport Fptas(const SubsetInstance<Structure>& instance,
                     const Rational& epsilon,
                     const SolverHooks<Structure>& hooks) {
  constexpr Sense sense = SubsetInstance<Structure>::sense();
  ValidateScalingRanges(sense, epsilon, hooks.rho);
  const Rational guarantee = sense == Sense::kMinimize
                                 ? Rational(1) + epsilon
                                 : Rational(1) - epsilon;

  SolutionReport approx = hooks.approx(instance);
  if (approx.value == 0) {
    approx.guarantee = guarantee;
    approx.bound_used = 0;
    return approx;
  }

  const ScalingParameters params =
      ComputeScale(sense, static_cast<std::int64_t>(instance.size()), epsilon,
                   hooks.rho, approx.value);
  SolutionReport result;
  if (params.z <= Rational(1)) {
    result = hooks.exact(instance);
  } else {
    const ScaledInstance<Structure> scaled =
        sense == Sense::kMinimize ? ScaleWeightsMin(instance, params)
                                  : ScaleWeightsMax(instance, params);
    result = hooks.exact(scaled.instance);
    result.work.scaled_total_weight = scaled.total_scaled_weight;
  }
  result.value = SumSelected(instance.weights, result.selected);
  result.guarantee = guarantee;
  result.bound_used = approx.value;
  result.work.approx_steps = approx.work.approx_steps;
  return result;
}

}  // namespace subsel

#endif  // SUBSEL_FPTAS_H_
