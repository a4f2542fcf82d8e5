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

#include "subsel/generator.h"

#include <random>
#include <string>
#include <vector>

#include "subsel/errors.h"

namespace subsel {
namespace {

struct Draw {
  std::vector<Weight> weights;
  std::vector<Weight> sizes;
  Weight rhs = 0;
};

Draw DrawItems(std::int64_t n, Weight weight_max, Weight size_max,
               const Rational& tightness, std::uint64_t seed) {
  if (n < 1) throw DomainError("generator needs n >= 1");
  if (weight_max < 1 || size_max < 1) {
    throw DomainError("generator needs weight_max, size_max >= 1");
  }
  if (tightness.sign() <= 0 || tightness > Rational(1)) {
    throw DomainError("tightness must lie in (0, 1], got " +
                      tightness.ToString());
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> weight_dist(1, weight_max);
  std::uniform_int_distribution<Weight> size_dist(1, size_max);
  Draw draw;
  draw.weights.reserve(static_cast<std::size_t>(n));
  draw.sizes.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    draw.weights.push_back(weight_dist(rng));
    draw.sizes.push_back(size_dist(rng));
  }
  // round(t * S) = floor(t * S + 1/2)
  const Rational scaled = tightness * Rational(TotalWeight(draw.sizes));
  draw.rhs = NarrowToInt64(Floor(scaled + Rational(1, 2)));
  return draw;
}

}  // namespace

ProblemKind ParseProblemKind(std::string_view name) {
  if (name == "minkp") return ProblemKind::kMinKnapsack;
  if (name == "maxkp") return ProblemKind::kMaxKnapsack;
  throw DomainError("unknown problem kind '" + std::string(name) + "'");
}

std::string_view ProblemKindName(ProblemKind kind) {
  return kind == ProblemKind::kMinKnapsack ? "minkp" : "maxkp";
}

MinKnapsackInstance GenerateMinKnapsack(std::int64_t n, Weight weight_max,
                                        Weight size_max,
                                        const Rational& tightness,
                                        std::uint64_t seed) {
  Draw d = DrawItems(n, weight_max, size_max, tightness, seed);
  return {std::move(d.weights), {std::move(d.sizes), d.rhs}};
}

MaxKnapsackInstance GenerateMaxKnapsack(std::int64_t n, Weight weight_max,
                                        Weight size_max,
                                        const Rational& tightness,
                                        std::uint64_t seed) {
  Draw d = DrawItems(n, weight_max, size_max, tightness, seed);
  return {std::move(d.weights), {std::move(d.sizes), d.rhs}};
}

AnyInstance GenerateInstance(const GeneratorConfig& c) {
  if (c.kind == ProblemKind::kMinKnapsack) {
    return GenerateMinKnapsack(c.n, c.weight_max, c.size_max, c.tightness,
                               c.seed);
  }
  return GenerateMaxKnapsack(c.n, c.weight_max, c.size_max, c.tightness,
                             c.seed);
}

}  // namespace subsel
