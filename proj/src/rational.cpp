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

#include "jrp/rational.hpp"

#include <cctype>
#include <cmath>

#include "jrp/errors.hpp"

namespace jrp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw DomainError("not a rational number: '" + std::string(whole) + "'");
  }
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite double");
  Rational r;
  r.value_ = mpq_class(value);
  return r;
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const BigInt p = parse_integer(trim(s.substr(0, slash)), text);
    const BigInt q = parse_integer(trim(s.substr(slash + 1)), text);
    return Rational(p, q);
  }

  std::string_view mantissa = s;
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    const BigInt ev = parse_integer(s.substr(e + 1), text);
    if (!ev.fits_slong_p() || abs(ev) > 4096) {
      throw DomainError("exponent out of range: '" + std::string(text) + "'");
    }
    exponent = ev.get_si();
    mantissa = s.substr(0, e);
  }

  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long scale = 0;
  if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    const std::string_view ip = mantissa.substr(0, dot);
    const std::string_view fp = mantissa.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
        (ip.empty() && fp.empty())) {
      throw DomainError("not a rational number: '" + std::string(text) + "'");
    }
    digits = std::string(ip) + std::string(fp);
    scale = static_cast<long>(fp.size());
  } else {
    if (!all_digits(mantissa)) {
      throw DomainError("not a rational number: '" + std::string(text) + "'");
    }
    digits = std::string(mantissa);
  }

  BigInt num(digits, 10);
  if (negative) num = -num;
  const long shift = exponent - scale;
  if (shift >= 0) return Rational(BigInt(num * pow10(shift)), BigInt(1));
  return Rational(num, pow10(static_cast<unsigned long>(-shift)));
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

double Rational::to_double() const { return value_.get_d(); }

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational rational_lcm(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || b.sign() <= 0) {
    throw DomainError("rational_lcm requires positive arguments, got " +
                      a.str() + " and " + b.str());
  }
  BigInt num;
  BigInt den;
  mpz_lcm(num.get_mpz_t(), a.raw().get_num_mpz_t(), b.raw().get_num_mpz_t());
  mpz_gcd(den.get_mpz_t(), a.raw().get_den_mpz_t(), b.raw().get_den_mpz_t());
  return Rational(num, den);
}

Rational set_lcm(std::span<const Rational> values) {
  if (values.empty()) throw DomainError("set_lcm of an empty set");
  Rational acc = values.front();
  if (acc.sign() <= 0) {
    throw DomainError("set_lcm requires positive values, got " + acc.str());
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    acc = rational_lcm(acc, values[i]);
  }
  return acc;
}

Rational rational_power(const Rational& base, unsigned exponent) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

bool divides(const Rational& b, const Rational& a) {
  return (a / b).is_integer();
}

}  // namespace jrp

std::size_t std::hash<jrp::Rational>::operator()(
    const jrp::Rational& r) const noexcept {
  const std::size_t h1 = mpz_get_ui(r.raw().get_num_mpz_t()) ^
                         (static_cast<std::size_t>(mpz_sgn(r.raw().get_num_mpz_t())) << 63);
  const std::size_t h2 = mpz_get_ui(r.raw().get_den_mpz_t());
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}
