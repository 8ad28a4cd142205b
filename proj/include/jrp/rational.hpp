// Copyright 2026 The jrp Authors
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
#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace jrp {

using BigInt = mpz_class;

// Exact fraction over arbitrary-precision integers. Always in lowest terms
// with a positive denominator, so equality and hashing are structural.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}
  Rational(const BigInt& numerator, const BigInt& denominator);

  // Exact binary value of a finite double.
  static Rational from_double(double value);

  // Accepts "p", "p/q", and plain decimals such as "0.45" or "-1.25e-3".
  // Decimals are converted exactly (0.45 -> 9/20), never through binary.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }
  BigInt floor() const;
  BigInt ceil() const;
  double to_double() const;

  // "p/q", or "p" when the denominator is one.
  std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

// Smallest positive L with L/a and L/b both integers:
// lcm(p, r) / gcd(q, s) for a = p/q, b = r/s. Throws DomainError unless both
// arguments are positive.
Rational rational_lcm(const Rational& a, const Rational& b);

// Fold of rational_lcm. Throws DomainError on an empty or non-positive set.
Rational set_lcm(std::span<const Rational> values);

Rational rational_power(const Rational& base, unsigned exponent);

// True when a / b is an integer (b != 0).
bool divides(const Rational& b, const Rational& a);

}  // namespace jrp

template <>
struct std::hash<jrp::Rational> {
  std::size_t operator()(const jrp::Rational& r) const noexcept;
};
