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

#include "subsel/bench.h"

#include <chrono>
#include <stdexcept>
#include <string>

#include "subsel/max_knapsack.h"
#include "subsel/min_knapsack.h"
#include "subsel/scaling.h"

namespace subsel {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ElapsedMs(Clock::time_point start, bool record) {
  if (!record) return 0;
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

struct KindOps {
  template <typename Instance>
  static Instance Generate(const BenchConfig& c, std::int64_t n,
                           std::uint64_t seed) {
    if constexpr (Instance::sense() == Sense::kMinimize) {
      return GenerateMinKnapsack(n, c.weight_max, c.size_max, c.tightness,
                                 seed);
    } else {
      return GenerateMaxKnapsack(n, c.weight_max, c.size_max, c.tightness,
                                 seed);
    }
  }

  template <typename Instance>
  static DpValue Exact(const Instance& instance, std::uint64_t budget) {
    if constexpr (Instance::sense() == Sense::kMinimize) {
      return ExactDpMinValue(instance, budget);
    } else {
      return ExactDpMaxValue(instance, budget);
    }
  }

  template <typename Instance>
  static SolutionReport Approximate(const Instance& instance,
                                    const Rational& epsilon) {
    if constexpr (Instance::sense() == Sense::kMinimize) {
      return FptasMin(instance, epsilon);
    } else {
      return FptasMax(instance, epsilon);
    }
  }

  template <typename Instance>
  static Rational Rho() {
    return Instance::sense() == Sense::kMinimize ? Rational(2)
                                                 : Rational(1, 2);
  }
};

template <typename Instance>
std::vector<BenchRow> Run(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (const std::int64_t n : config.n_list) {
    struct Baseline {
      Instance instance;
      WorkMetrics metrics;
      Weight value = 0;
    };
    std::vector<Baseline> baselines;
    for (const std::uint64_t seed : config.seeds) {
      Baseline b{KindOps::Generate<Instance>(config, n, seed), {}, 0};
      const auto start = Clock::now();
      const DpValue exact = KindOps::Exact(b.instance, config.cell_budget);
      b.metrics.wall_time_ms = ElapsedMs(start, config.record_time);
      b.metrics.n = n;
      b.metrics.total_weight = TotalWeight(b.instance.weights);
      b.metrics.dp_cells = exact.dp_cells;
      b.metrics.structure_bytes = StructureBytes(b.instance.structure);
      b.value = exact.value;
      baselines.push_back(std::move(b));
    }

    for (const Rational& epsilon : config.epsilon_list) {
      const Weight bound = ScaledWeightBound(Instance::sense(), n, epsilon,
                                             KindOps::Rho<Instance>());
      for (std::size_t s = 0; s < baselines.size(); ++s) {
        const Baseline& b = baselines[s];
        const auto start = Clock::now();
        const SolutionReport report =
            KindOps::Approximate(b.instance, epsilon);

        BenchRow row;
        row.kind = config.kind;
        row.seed = config.seeds[s];
        row.exact = b.metrics;
        row.fptas = b.metrics;
        row.fptas.wall_time_ms = ElapsedMs(start, config.record_time);
        row.fptas.epsilon = epsilon;
        row.fptas.total_scaled_weight = report.work.scaled_total_weight;
        row.fptas.dp_cells = report.work.dp_cells;
        row.fptas.approx_steps = report.work.approx_steps;
        row.scaled_weight_bound = bound;
        row.value_exact = b.value;
        row.value_fptas = report.value;
        if (row.fptas.total_scaled_weight &&
            *row.fptas.total_scaled_weight > bound) {
          throw std::logic_error(
              "scaled total weight " +
              std::to_string(*row.fptas.total_scaled_weight) +
              " exceeds bound " + std::to_string(bound));
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace

Rational BenchRow::OptRatio() const {
  if (value_exact == 0) return Rational(1);
  return Rational(value_fptas, value_exact);
}

std::vector<BenchRow> BenchCompare(const BenchConfig& config) {
  if (config.kind == ProblemKind::kMinKnapsack) {
    return Run<MinKnapsackInstance>(config);
  }
  return Run<MaxKnapsackInstance>(config);
}

void WriteBenchCsv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchCsvHeader << '\n';
  for (const BenchRow& r : rows) {
    const Rational eps = r.fptas.epsilon.value_or(Rational(0));
    const Rational ratio = r.OptRatio();
    out << ProblemKindName(r.kind) << ',' << r.exact.n << ','
        << Int128ToString(eps.num()) << ','
        << Int128ToString(eps.den()) << ',' << r.seed << ','
        << r.exact.total_weight << ',';
    if (r.fptas.total_scaled_weight) out << *r.fptas.total_scaled_weight;
    out << ',' << r.scaled_weight_bound << ',' << r.exact.dp_cells << ','
        << r.fptas.dp_cells << ',' << r.fptas.approx_steps << ','
        << r.value_exact << ',' << r.value_fptas << ',' << Int128ToString(ratio.num())
        << ',' << Int128ToString(ratio.den()) << ',' << r.exact.wall_time_ms << ','
        << r.fptas.wall_time_ms << '\n';
  }
}

}  // namespace subsel
