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

#include "subsel/fptas.h"

#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "subsel/errors.h"
#include "subsel/max_knapsack.h"
#include "subsel/min_knapsack.h"
#include "testing/oracles.h"

namespace subsel {
namespace {

MinKnapsackInstance ThreeItemMin() { return {{3, 5, 4}, {{2, 4, 3}, 5}}; }

TEST(FptasTest, MinPipelineHandTrace) {
  // UB = 8 from the approximation; z = (1/2)(1/3)8 = 4/3; w' = [3, 4, 3];
  // the exact DP on I' picks {0, 2} (scaled cost 6), original value 7.
  const MinKnapsackInstance inst = ThreeItemMin();
  const auto params = ComputeScale(Sense::kMinimize, 3, Rational(1),
                                   Rational(2), 8);
  ASSERT_EQ(params.z, Rational(4, 3));
  const auto scaled = ScaleWeightsMin(inst, params);
  EXPECT_EQ(scaled.instance.weights, (std::vector<Weight>{3, 4, 3}));
  EXPECT_EQ(scaled.instance.structure, inst.structure);

  const SolutionReport r = FptasMin(inst, Rational(1));
  EXPECT_EQ(r.bound_used, 8);
  EXPECT_EQ(r.selected, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(r.value, 7);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.guarantee, Rational(2));
  ASSERT_TRUE(r.work.scaled_total_weight.has_value());
  EXPECT_EQ(*r.work.scaled_total_weight, 10);
  EXPECT_EQ(r.work.dp_cells, 3u * 11u);
  EXPECT_GT(r.work.approx_steps, 0u);
  EXPECT_EQ(testing::OracleMinCover(inst.weights, inst.structure.sizes, 5), 7);
}

TEST(FptasTest, ZeroBoundShortCircuits) {
  SolverHooks<MinKnapsackStructure> hooks = MinKnapsackHooks();
  hooks.exact = [](const MinKnapsackInstance&) -> SolutionReport {
    throw std::logic_error("exact solver must not run");
  };
  const MinKnapsackInstance zero_demand{{3, 5}, {{2, 4}, 0}};
  const SolutionReport r = Fptas(zero_demand, Rational(1, 4), hooks);
  EXPECT_TRUE(r.selected.empty());
  EXPECT_EQ(r.value, 0);
  EXPECT_EQ(r.bound_used, 0);
  EXPECT_EQ(r.guarantee, Rational(5, 4));

  const SolutionReport m =
      FptasMax(MaxKnapsackInstance{{4, 6}, {{3, 9}, 2}}, Rational(1, 2));
  EXPECT_TRUE(m.selected.empty());
  EXPECT_EQ(m.value, 0);
}

TEST(FptasTest, SmallScaleFallsBackToExactSolve) {
  // z = (1/100)/2 * 8/3 < 1
  const SolutionReport r = FptasMin(ThreeItemMin(), Rational(1, 100));
  EXPECT_EQ(r.value, 7);
  EXPECT_FALSE(r.work.scaled_total_weight.has_value());
  EXPECT_EQ(r.work.dp_cells, 3u * 13u);
}

TEST(FptasTest, ExactSolverReceivesScaledWeights) {
  SolverHooks<MinKnapsackStructure> hooks = MinKnapsackHooks();
  std::vector<Weight> seen;
  hooks.exact = [&seen](const MinKnapsackInstance& i) {
    seen = i.weights;
    return ExactDpMin(i);
  };
  Fptas(ThreeItemMin(), Rational(1), hooks);
  EXPECT_EQ(seen, (std::vector<Weight>{3, 4, 3}));
}

TEST(FptasTest, MinBigItemNeverSelected) {
  // UB = 7 from {1, 2}; item 0 (weight 100 > UB) gets the penalty weight.
  const MinKnapsackInstance inst{{100, 3, 4}, {{10, 3, 3}, 5}};
  ASSERT_EQ(Approx2Min(inst).value, 7);
  const auto params =
      ComputeScale(Sense::kMinimize, 3, Rational(1), Rational(2), 7);
  EXPECT_EQ(ScaleWeightsMin(inst, params).big_item_ids,
            (std::vector<std::size_t>{0}));
  for (const Rational eps : {Rational(1), Rational(1, 2)}) {
    const SolutionReport r = FptasMin(inst, eps);
    EXPECT_EQ(r.selected, (std::vector<std::size_t>{1, 2}));
  }
}

TEST(FptasTest, MaxBigItemNeverSelected) {
  const MaxKnapsackInstance inst{{50, 4, 5}, {{10, 2, 2}, 5}};
  ASSERT_EQ(ApproxHalfMax(inst).value, 9);
  const auto params =
      ComputeScale(Sense::kMaximize, 3, Rational(1, 2), Rational(1, 2), 9);
  EXPECT_EQ(ScaleWeightsMax(inst, params).big_item_ids,
            (std::vector<std::size_t>{0}));
  const SolutionReport r = FptasMax(inst, Rational(1, 2));
  EXPECT_EQ(r.selected, (std::vector<std::size_t>{1, 2}));
}

TEST(FptasTest, RejectsOutOfRangeParameters) {
  EXPECT_THROW(FptasMin(ThreeItemMin(), Rational(0)), DomainError);
  const MaxKnapsackInstance inst{{6, 5, 4}, {{5, 4, 3}, 7}};
  EXPECT_THROW(FptasMax(inst, Rational(1)), DomainError);
  EXPECT_THROW(FptasMax(inst, Rational(3, 2)), DomainError);
  SolverHooks<MinKnapsackStructure> bad = MinKnapsackHooks();
  bad.rho = Rational(1, 2);
  EXPECT_THROW(Fptas(ThreeItemMin(), Rational(1), bad), DomainError);
}

TEST(FptasTest, InfeasiblePropagates) {
  EXPECT_THROW(FptasMin(MinKnapsackInstance{{3}, {{2}, 5}}, Rational(1)),
               InfeasibleInstance);
}

}  // namespace
}  // namespace subsel
