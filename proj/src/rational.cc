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

#include "subsel/rational.h"

#include <algorithm>
#include <charconv>
#include <limits>

#include "subsel/errors.h"

namespace subsel {
namespace {

constexpr Int128 kInt128Min = static_cast<Int128>(
    static_cast<unsigned __int128>(1) << 127);

Int128 Abs(Int128 v) {
  if (v == kInt128Min) throw OverflowError("int128 abs overflow");
  return v < 0 ? -v : v;
}

Int128 Gcd(Int128 a, Int128 b) {
  a = Abs(a);
  b = Abs(b);
  while (b != 0) {
    const Int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool ParseInt128(std::string_view text, Int128* out) {
  if (text.empty()) return false;
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) return false;
  Int128 value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') return false;
    Int128 next;
    if (__builtin_mul_overflow(value, Int128{10}, &next) ||
        __builtin_add_overflow(next, Int128{c - '0'}, &next)) {
      throw OverflowError("integer literal does not fit in 128 bits");
    }
    value = next;
  }
  *out = negative ? -value : value;
  return true;
}

}  // namespace

Int128 CheckedAdd(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int128 add");
  return r;
}

Int128 CheckedSub(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int128 sub");
  return r;
}

Int128 CheckedMul(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int128 mul");
  return r;
}

Int128 FloorDiv(Int128 a, Int128 b) {
  if (b <= 0) throw DomainError("FloorDiv requires a positive divisor");
  Int128 q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

Int128 CeilDiv(Int128 a, Int128 b) {
  if (b <= 0) throw DomainError("CeilDiv requires a positive divisor");
  Int128 q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

std::int64_t NarrowToInt64(Int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("value " + Int128ToString(v) +
                        " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

std::string Int128ToString(Int128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1
                                 : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Rational::Rational(Int128 num, Int128 den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = CheckedMul(num, -1);
    den = CheckedMul(den, -1);
  }
  const Int128 g = Gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::Parse(std::string_view text) {
  const std::size_t slash = text.find('/');
  Int128 num = 0;
  Int128 den = 1;
  if (!ParseInt128(text.substr(0, slash), &num) ||
      (slash != std::string_view::npos &&
       !ParseInt128(text.substr(slash + 1), &den))) {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

Rational Rational::operator-() const { return Rational(CheckedMul(num_, -1), den_); }

Rational Rational::Reciprocal() const {
  if (num_ == 0) throw DomainError("reciprocal of zero");
  return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  const Int128 g = Gcd(a.den_, b.den_);
  const Int128 lhs = CheckedMul(a.num_, b.den_ / g);
  const Int128 rhs = CheckedMul(b.num_, a.den_ / g);
  return Rational(CheckedAdd(lhs, rhs), CheckedMul(a.den_ / g, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-reduce first so intermediate products stay as small as possible.
  const Int128 g1 = Gcd(a.num_, b.den_);
  const Int128 g2 = Gcd(b.num_, a.den_);
  return Rational(CheckedMul(a.num_ / g1, b.num_ / g2),
                  CheckedMul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  return a * b.Reciprocal();
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return CheckedMul(a.num_, b.den_) <=> CheckedMul(b.num_, a.den_);
}

std::string Rational::ToString() const {
  if (den_ == 1) return Int128ToString(num_);
  return Int128ToString(num_) + "/" + Int128ToString(den_);
}

Int128 Floor(const Rational& r) { return FloorDiv(r.num(), r.den()); }
Int128 Ceil(const Rational& r) { return CeilDiv(r.num(), r.den()); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

}  // namespace subsel
