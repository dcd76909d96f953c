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

#include <optional>
#include <ostream>
#include <string>

#include "combilu/big_rational.hpp"
#include "combilu/multi_poly.hpp"

namespace combilu {

/// Quotient of two polynomials over the same VariableSet.
///
/// Normal form:
///  - the zero function is 0/1;
///  - common monomial factors are removed;
///  - when numerator and denominator together use at most one variable,
///    their full polynomial gcd is removed;
///  - otherwise an exact divisibility test cancels the denominator into the
///    numerator (or vice versa) when one divides the other;
///  - the denominator is primitive with integer coefficients and a positive
///    leading coefficient.
///
/// In the multivariate case the representation need not be unique, so
/// equality is always decided by cross multiplication.
class RatFunc {
 public:
  RatFunc() : RatFunc(VariableSet{}) {}
  explicit RatFunc(VariableSet vars);
  explicit RatFunc(MultiPoly num);
  /// Throws DivisionByZero for a zero denominator.
  RatFunc(MultiPoly num, MultiPoly den);

  static RatFunc constant(VariableSet vars, const BigRational& value);
  static RatFunc one(VariableSet vars) { return constant(std::move(vars), 1); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const VariableSet& variables() const { return num_.variables(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator-() const;
  RatFunc inverse() const;

  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  /// Cross-multiplication equality.
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  /// Replaces one variable by a rational value. Throws DivisionByZero when
  /// the denominator vanishes there.
  RatFunc substitute(std::size_t var, const BigRational& value) const;

  /// The numerator/denominator quotient when it is a polynomial.
  std::optional<MultiPoly> as_polynomial() const;
  /// The value when the function is a constant.
  std::optional<BigRational> as_constant() const;

  /// "num" when the denominator is 1, otherwise "(num)/(den)" with
  /// parentheses only around multi-term parts.
  std::string str() const;
  std::string latex() const;

 private:
  void normalize();

  MultiPoly num_;
  MultiPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace combilu
