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

#ifndef SUBSEL_RATIONAL_H_
#define SUBSEL_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace subsel {

// 128-bit signed integer used for every intermediate product on the
// guarantee path. All helpers below throw OverflowError instead of wrapping.
using Int128 = __int128;

Int128 CheckedAdd(Int128 a, Int128 b);
Int128 CheckedSub(Int128 a, Int128 b);
Int128 CheckedMul(Int128 a, Int128 b);

// Floor and ceiling of a / b for b > 0 (any sign of a).
Int128 FloorDiv(Int128 a, Int128 b);
Int128 CeilDiv(Int128 a, Int128 b);

// Narrows to int64, throwing OverflowError if the value does not fit.
std::int64_t NarrowToInt64(Int128 v);

std::string Int128ToString(Int128 v);

// Exact rational number. Always kept in lowest terms with a positive
// denominator, so structural equality is value equality.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(Int128 value) : num_(value), den_(1) {}  // NOLINT: implicit
  Rational(Int128 num, Int128 den);

  // Accepts "p/q" or a bare integer "p".
  static Rational Parse(std::string_view text);

  Int128 num() const { return num_; }
  Int128 den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const;
  Rational Reciprocal() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  std::string ToString() const;

 private:
  Int128 num_ = 0;
  Int128 den_ = 1;
};

Int128 Floor(const Rational& r);
Int128 Ceil(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace subsel

#endif  // SUBSEL_RATIONAL_H_
