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

#ifndef SUBSEL_GENERATOR_H_
#define SUBSEL_GENERATOR_H_

#include <cstdint>
#include <string_view>

#include "subsel/instance_io.h"
#include "subsel/rational.h"

namespace subsel {

enum class ProblemKind { kMinKnapsack, kMaxKnapsack };

// "minkp" / "maxkp"; throws DomainError otherwise.
ProblemKind ParseProblemKind(std::string_view name);
std::string_view ProblemKindName(ProblemKind kind);

struct GeneratorConfig {
  ProblemKind kind = ProblemKind::kMinKnapsack;
  std::int64_t n = 1;
  Weight weight_max = 1;
  Weight size_max = 1;
  Rational tightness{1, 2};  // in (0, 1]
  std::uint64_t seed = 0;
};

// Weights and sizes uniform on [1, max]; demand or capacity is
// round(tightness * sum of sizes), halves rounded up. Deterministic in the
// seed (mt19937_64).
AnyInstance GenerateInstance(const GeneratorConfig& config);

MinKnapsackInstance GenerateMinKnapsack(std::int64_t n, Weight weight_max,
                                        Weight size_max,
                                        const Rational& tightness,
                                        std::uint64_t seed);
MaxKnapsackInstance GenerateMaxKnapsack(std::int64_t n, Weight weight_max,
                                        Weight size_max,
                                        const Rational& tightness,
                                        std::uint64_t seed);

}  // namespace subsel

#endif  // SUBSEL_GENERATOR_H_
