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

#ifndef SUBSEL_SCALING_H_
#define SUBSEL_SCALING_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "subsel/errors.h"
#include "subsel/instance.h"
#include "subsel/rational.h"

namespace subsel {

struct ScalingParameters {
  Sense sense = Sense::kMinimize;
  Rational epsilon;
  Rational rho;
  Weight bound = 0;  // UB when minimizing, LB when maximizing
  std::int64_t n = 0;
  Rational z;        // the scale every weight is divided by
};

// Throws DomainError unless epsilon > 0 and, for minimization, rho > 1, or
// for maximization, 0 < rho < 1 and epsilon < 1.
void ValidateScalingRanges(Sense sense, const Rational& epsilon,
                           const Rational& rho);

// Minimize: z = (epsilon / rho) * UB / n.  Maximize: z = epsilon * LB / n.
ScalingParameters ComputeScale(Sense sense, std::int64_t n,
                               const Rational& epsilon, const Rational& rho,
                               Weight bound);

// A-priori bound on W' for any instance scaled under these parameters:
// n * (ceil(rho * n / epsilon) + n + 1) when minimizing,
// n * floor(n / (epsilon * rho)) + n when maximizing.
Weight ScaledWeightBound(Sense sense, std::int64_t n, const Rational& epsilon,
                         const Rational& rho);

struct ScaledWeights {
  std::vector<Weight> weights;
  Weight total = 0;
  std::vector<std::size_t> big_items;  // ascending
};

// Minimization rounding. Items with w <= UB get ceil(w / z); heavier items,
// which no optimum can contain, get the penalty ceil(UB / z) + n + 1. That
// penalty strictly exceeds UB / z + n, the most any scaled optimum can cost.
ScaledWeights ScaleWeightsMin(std::span<const Weight> weights,
                              const ScalingParameters& params);

// Maximization rounding. Items with w <= LB / rho get max(1, floor(w / z));
// heavier items, which fit in no feasible solution, get 1. The clamp keeps
// weights positive and costs at most z per item of the symmetric difference
// between the scaled and the true optimum, so the (1 - epsilon) bound holds.
ScaledWeights ScaleWeightsMax(std::span<const Weight> weights,
                              const ScalingParameters& params);

// I': same structure as the base instance, rounded weights.
template <typename Structure>
struct ScaledInstance {
  SubsetInstance<Structure> instance;
  Weight total_scaled_weight = 0;
  ScalingParameters params;
  std::vector<std::size_t> big_item_ids;
};

namespace internal {

template <typename Structure>
ScaledInstance<Structure> MakeScaled(const SubsetInstance<Structure>& base,
                                     const ScalingParameters& params,
                                     ScaledWeights scaled) {
  return ScaledInstance<Structure>{
      .instance = {std::move(scaled.weights), base.structure},
      .total_scaled_weight = scaled.total,
      .params = params,
      .big_item_ids = std::move(scaled.big_items),
  };
}

inline void CheckScaleApplies(Sense instance_sense, Sense wanted,
                              const ScalingParameters& params,
                              std::size_t n) {
  if (instance_sense != wanted || params.sense != wanted) {
    throw DomainError("scaling rule does not match the instance sense");
  }
  if (params.z.sign() <= 0) throw DomainError("scale z must be positive");
  if (static_cast<std::size_t>(params.n) != n) {
    throw DomainError("scaling parameters were computed for another n");
  }
}

}  // namespace internal

template <typename Structure>
ScaledInstance<Structure> ScaleWeightsMin(
    const SubsetInstance<Structure>& instance,
    const ScalingParameters& params) {
  internal::CheckScaleApplies(instance.sense(), Sense::kMinimize, params,
                              instance.size());
  return internal::MakeScaled(instance, params,
                              ScaleWeightsMin(instance.weights, params));
}

template <typename Structure>
ScaledInstance<Structure> ScaleWeightsMax(
    const SubsetInstance<Structure>& instance,
    const ScalingParameters& params) {
  internal::CheckScaleApplies(instance.sense(), Sense::kMaximize, params,
                              instance.size());
  return internal::MakeScaled(instance, params,
                              ScaleWeightsMax(instance.weights, params));
}

// value <= (1 + epsilon) * opt when minimizing, value >= (1 - epsilon) * opt
// when maximizing. Exact rational comparison.
bool VerifyGuarantee(Weight value, Weight opt, Sense sense,
                     const Rational& epsilon);

inline bool VerifyGuarantee(const SolutionReport& report, Weight opt,
                            Sense sense, const Rational& epsilon) {
  return VerifyGuarantee(report.value, opt, sense, epsilon);
}

}  // namespace subsel

#endif  // SUBSEL_SCALING_H_
