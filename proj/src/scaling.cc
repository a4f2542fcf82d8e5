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

#include "subsel/scaling.h"

#include <string>

namespace subsel {

void ValidateScalingRanges(Sense sense, const Rational& epsilon,
                           const Rational& rho) {
  if (epsilon.sign() <= 0) {
    throw DomainError("epsilon must be positive, got " + epsilon.ToString());
  }
  if (sense == Sense::kMinimize) {
    if (rho <= Rational(1)) {
      throw DomainError("minimization needs rho > 1, got " + rho.ToString());
    }
    return;
  }
  if (rho.sign() <= 0 || rho >= Rational(1)) {
    throw DomainError("maximization needs 0 < rho < 1, got " +
                      rho.ToString());
  }
  if (epsilon >= Rational(1)) {
    throw DomainError("maximization needs epsilon < 1, got " +
                      epsilon.ToString());
  }
}

ScalingParameters ComputeScale(Sense sense, std::int64_t n,
                               const Rational& epsilon, const Rational& rho,
                               Weight bound) {
  ValidateScalingRanges(sense, epsilon, rho);
  if (n < 1) throw DomainError("n must be at least 1");
  if (bound < 0) throw DomainError("bound must be nonnegative");
  Rational z = epsilon * Rational(bound, n);
  if (sense == Sense::kMinimize) z /= rho;
  return ScalingParameters{.sense = sense,
                           .epsilon = epsilon,
                           .rho = rho,
                           .bound = bound,
                           .n = n,
                           .z = z};
}

Weight ScaledWeightBound(Sense sense, std::int64_t n, const Rational& epsilon,
                         const Rational& rho) {
  ValidateScalingRanges(sense, epsilon, rho);
  if (n < 1) throw DomainError("n must be at least 1");
  if (sense == Sense::kMinimize) {
    const Int128 per_item = CheckedAdd(Ceil(rho * Rational(n) / epsilon), n + 1);
    return NarrowToInt64(CheckedMul(n, per_item));
  }
  const Int128 per_item = Floor(Rational(n) / (epsilon * rho));
  return NarrowToInt64(CheckedAdd(CheckedMul(n, per_item), n));
}

ScaledWeights ScaleWeightsMin(std::span<const Weight> weights,
                              const ScalingParameters& params) {
  const Rational& z = params.z;
  // w / z = w * den / num
  const Int128 penalty = CheckedAdd(
      CeilDiv(CheckedMul(params.bound, z.den()), z.num()), params.n + 1);
  ScaledWeights out;
  out.weights.reserve(weights.size());
  Int128 total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    Int128 scaled;
    if (weights[i] <= params.bound) {
      scaled = CeilDiv(CheckedMul(weights[i], z.den()), z.num());
    } else {
      scaled = penalty;
      out.big_items.push_back(i);
    }
    out.weights.push_back(NarrowToInt64(scaled));
    total = CheckedAdd(total, scaled);
  }
  out.total = NarrowToInt64(total);
  return out;
}

ScaledWeights ScaleWeightsMax(std::span<const Weight> weights,
                              const ScalingParameters& params) {
  const Rational& z = params.z;
  ScaledWeights out;
  out.weights.reserve(weights.size());
  Int128 total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    Int128 scaled = 1;
    // w <= LB / rho  <=>  w * rho <= LB
    if (Rational(weights[i]) * params.rho <= Rational(params.bound)) {
      scaled = FloorDiv(CheckedMul(weights[i], z.den()), z.num());
      if (scaled < 1) scaled = 1;
    } else {
      out.big_items.push_back(i);
    }
    out.weights.push_back(NarrowToInt64(scaled));
    total = CheckedAdd(total, scaled);
  }
  out.total = NarrowToInt64(total);
  return out;
}

bool VerifyGuarantee(Weight value, Weight opt, Sense sense,
                     const Rational& epsilon) {
  if (sense == Sense::kMinimize) {
    return Rational(value) <= (Rational(1) + epsilon) * Rational(opt);
  }
  return Rational(value) >= (Rational(1) - epsilon) * Rational(opt);
}

}  // namespace subsel
