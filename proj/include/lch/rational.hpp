// Copyright 2026 The lch Authors
//
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

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lch {

using Integer = mpz_class;

/// Thrown when textual input (rationals, JSON documents, CLI values) cannot
/// be parsed into a well-formed value.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact rational number with arbitrary-precision parts.
///
/// The representation is always reduced: gcd(|num|, den) = 1 and den > 0.
/// Textual form is "p/q", or "p" when the denominator is one.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : num_(value), den_(1) {}  // NOLINT
  Rational(Integer num, Integer den);

  static Rational parse(std::string_view text);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return sgn(num_); }

  Integer floor() const;
  Integer ceil() const;
  /// Fractional part in [0, 1).
  Rational frac() const;
  Rational abs() const;

  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Nonnegative gcd of two rationals: the positive generator of aZ + bZ.
/// gcd(0, 0) = 0.
Rational gcd(const Rational& a, const Rational& b);

Integer lcm_of(const Integer& a, const Integer& b);

struct RationalHash {
  std::size_t operator()(const Rational& r) const {
    return std::hash<std::string>{}(r.str());
  }
};

}  // namespace lch
