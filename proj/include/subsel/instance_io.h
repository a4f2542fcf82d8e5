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

#ifndef SUBSEL_INSTANCE_IO_H_
#define SUBSEL_INSTANCE_IO_H_

#include <string>
#include <string_view>
#include <variant>

#include "subsel/max_knapsack.h"
#include "subsel/min_knapsack.h"

namespace subsel {

using AnyInstance = std::variant<MinKnapsackInstance, MaxKnapsackInstance>;

// Text format, base-10 integers separated by spaces, LF line endings:
//
//   minkp <n> <demand>        or   maxkp <n> <capacity>
//   <weight> <size>           (n lines)
//
// Throws ParseError (with the 1-based line) on malformed text and
// ValidationError on non-positive weights or sizes.
AnyInstance ParseInstance(std::string_view text);

std::string SerializeInstance(const MinKnapsackInstance& instance);
std::string SerializeInstance(const MaxKnapsackInstance& instance);
std::string SerializeInstance(const AnyInstance& instance);

AnyInstance ReadInstanceFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view contents);

}  // namespace subsel

#endif  // SUBSEL_INSTANCE_IO_H_
