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

#ifndef SUBSEL_BENCH_H_
#define SUBSEL_BENCH_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "subsel/generator.h"
#include "subsel/instance.h"
#include "subsel/rational.h"

namespace subsel {

// Counted work for one solver run.
struct WorkMetrics {
  std::int64_t n = 0;
  Weight total_weight = 0;
  std::optional<Weight> total_scaled_weight;
  std::optional<Rational> epsilon;
  std::uint64_t dp_cells = 0;
  std::uint64_t approx_steps = 0;
  std::size_t structure_bytes = 0;
  std::int64_t wall_time_ms = 0;
};

// One (n, epsilon, seed) comparison: exact DP on the original weights vs the
// scaled approximation scheme.
struct BenchRow {
  ProblemKind kind = ProblemKind::kMinKnapsack;
  std::uint64_t seed = 0;
  WorkMetrics exact;
  WorkMetrics fptas;
  Weight scaled_weight_bound = 0;
  Weight value_exact = 0;
  Weight value_fptas = 0;

  // value_fptas / value_exact (1 when both are 0).
  Rational OptRatio() const;
};

struct BenchConfig {
  ProblemKind kind = ProblemKind::kMinKnapsack;
  std::vector<std::int64_t> n_list;
  std::vector<Rational> epsilon_list;
  Weight weight_max = 1'000'000;
  Weight size_max = 100;
  Rational tightness{1, 2};
  std::vector<std::uint64_t> seeds;
  // Upper limit on the baseline's n * (W + 1) cells.
  std::uint64_t cell_budget = 10'000'000'000;
  // Record wall-clock times; off by default so output is reproducible.
  bool record_time = false;
};

// Rows are ordered by n, then epsilon, then seed, each in config order.
// Throws BudgetExceeded if a baseline run would exceed the cell budget and
// std::logic_error if a scaled instance breaks its W' bound.
std::vector<BenchRow> BenchCompare(const BenchConfig& config);

inline constexpr char kBenchCsvHeader[] =
    "kind,n,eps_num,eps_den,seed,W,Wprime,Wprime_bound,cells_exact,"
    "cells_fptas,approx_steps,value_exact,value_fptas,opt_ratio_num,"
    "opt_ratio_den,time_exact_ms,time_fptas_ms";

// Header plus one line per row. Wprime is left empty when the scheme fell
// back to the unscaled instance.
void WriteBenchCsv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace subsel

#endif  // SUBSEL_BENCH_H_
