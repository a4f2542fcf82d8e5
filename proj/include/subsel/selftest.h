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

#ifndef SUBSEL_SELFTEST_H_
#define SUBSEL_SELFTEST_H_

#include <cstdint>
#include <ostream>

namespace subsel {

// Randomized oracle suites over small instances: exact DP vs brute force,
// approximation ratios, and the approximation-scheme guarantee for several
// epsilons. Prints one line per suite; returns true iff all pass.
bool RunSelfTest(std::ostream& out, int instances_per_suite = 200,
                 std::uint64_t seed = 1);

}  // namespace subsel

#endif  // SUBSEL_SELFTEST_H_
