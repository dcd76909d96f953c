// Copyright 2026 The combilu Authors
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
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace combilu {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive
/// denominator. Zero is stored as 0/1.
class BigRational {
 public:
  BigRational() = default;

  template <std::integral I>
  BigRational(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      value_ = static_cast<long>(value);
    } else {
      value_ = static_cast<unsigned long>(value);
    }
  }

  BigRational(const BigInt& value)  // NOLINT(google-explicit-constructor)
      : value_(value) {}

  /// Throws DivisionByZero when `den` is zero.
  BigRational(const BigInt& num, const BigInt& den);

  /// Accepts "a" or "a/b" with optional leading sign.
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  BigRational abs() const;
  BigRational inverse() const;

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) {
    return lhs += rhs;
  }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) {
    return lhs -= rhs;
  }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) {
    return lhs *= rhs;
  }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) {
    return lhs /= rhs;
  }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const BigRational& a,
                                          const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  std::string str() const;
  std::string latex() const;

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& value);

/// n! for n >= 0. Throws std::domain_error for n < 0.
BigInt factorial(long n);

/// 1/n!, with the convention 1/n! = 0 for negative n.
BigRational reciprocal_factorial(long n);

/// (2n-1)!! = 1*3*5*...*(2n-1); empty product 1 for n <= 0.
BigInt odd_double_factorial(long n);

/// Ordinary binomial coefficient for n >= 0; zero when k < 0 or k > n.
BigInt binomial(long n, long k);

BigInt pow(const BigInt& base, unsigned long exponent);

/// Positive gcd of two rationals: gcd of numerators over lcm of
/// denominators. gcd(0, x) = |x|.
BigRational gcd(const BigRational& a, const BigRational& b);

}  // namespace combilu
