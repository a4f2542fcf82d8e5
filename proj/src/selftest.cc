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

#include "subsel/selftest.h"

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "subsel/generator.h"
#include "subsel/max_knapsack.h"
#include "subsel/min_knapsack.h"
#include "subsel/scaling.h"

namespace subsel {
namespace {

struct Corpus {
  std::vector<MinKnapsackInstance> min;
  std::vector<MaxKnapsackInstance> max;
};

Corpus MakeCorpus(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> n_dist(1, 12);
  std::uniform_int_distribution<std::int64_t> tight_dist(1, 10);
  Corpus corpus;
  for (int i = 0; i < count; ++i) {
    const Rational tight(tight_dist(rng), 10);
    corpus.min.push_back(
        GenerateMinKnapsack(n_dist(rng), 100, 100, tight, rng()));
    corpus.max.push_back(
        GenerateMaxKnapsack(n_dist(rng), 100, 100, tight, rng()));
  }
  return corpus;
}

bool Report(std::ostream& out, const std::string& name, int failures,
            int total) {
  out << (failures == 0 ? "PASS " : "FAIL ") << name << " (" << total - failures
      << "/" << total << ")\n";
  return failures == 0;
}

}  // namespace

bool RunSelfTest(std::ostream& out, int instances_per_suite,
                 std::uint64_t seed) {
  const Corpus corpus = MakeCorpus(instances_per_suite, seed);
  const std::vector<Rational> epsilons = {Rational(1, 2), Rational(1, 4),
                                          Rational(1, 10)};
  bool ok = true;

  int bad = 0;
  for (const auto& i : corpus.min) {
    bad += ExactDpMin(i).value != BruteForceMin(i).value;
  }
  ok &= Report(out, "minkp exact DP == brute force", bad, corpus.min.size());

  bad = 0;
  for (const auto& i : corpus.max) {
    bad += ExactDpMax(i).value != BruteForceMax(i).value;
  }
  ok &= Report(out, "maxkp exact DP == brute force", bad, corpus.max.size());

  bad = 0;
  for (const auto& i : corpus.min) {
    const Weight opt = BruteForceMin(i).value;
    const SolutionReport ub = Approx2Min(i);
    bad += !ub.feasible || ub.value < opt || ub.value > 2 * opt;
  }
  ok &= Report(out, "minkp OPT <= UB <= 2 OPT", bad, corpus.min.size());

  bad = 0;
  for (const auto& i : corpus.max) {
    const Weight opt = BruteForceMax(i).value;
    const SolutionReport lb = ApproxHalfMax(i);
    bad += !lb.feasible || lb.value > opt || 2 * lb.value < opt;
  }
  ok &= Report(out, "maxkp OPT >= LB >= OPT / 2", bad, corpus.max.size());

  int total = 0;
  bad = 0;
  for (const Rational& eps : epsilons) {
    for (const auto& i : corpus.min) {
      const SolutionReport r = FptasMin(i, eps);
      bad += !r.feasible ||
             !VerifyGuarantee(r, BruteForceMin(i).value, Sense::kMinimize, eps);
      ++total;
    }
  }
  ok &= Report(out, "minkp scheme within (1 + eps) OPT", bad, total);

  total = 0;
  bad = 0;
  for (const Rational& eps : epsilons) {
    for (const auto& i : corpus.max) {
      const SolutionReport r = FptasMax(i, eps);
      bad += !r.feasible ||
             !VerifyGuarantee(r, BruteForceMax(i).value, Sense::kMaximize, eps);
      ++total;
    }
  }
  ok &= Report(out, "maxkp scheme within (1 - eps) OPT", bad, total);
  return ok;
}

}  // namespace subsel
