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

#ifndef SUBSEL_ERRORS_H_
#define SUBSEL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace subsel {

// Parameter outside the range an operation accepts (epsilon, rho, n, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// No subset satisfies the feasibility structure.
class InfeasibleInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive enumeration refused.
class InstanceTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Instance data violates a structural invariant (non-positive weight, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A dynamic program would exceed its configured cell budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace subsel

#endif  // SUBSEL_ERRORS_H_
