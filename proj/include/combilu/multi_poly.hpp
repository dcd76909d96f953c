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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "combilu/big_rational.hpp"

namespace combilu {

inline constexpr std::size_t kMaxVariables = 8;

/// Ordered list of symbol names shared by every polynomial of one ring.
/// Copies share storage; two sets compare equal when their names agree.
class VariableSet {
 public:
  VariableSet();
  explicit VariableSet(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t index) const { return (*names_)[index]; }
  const std::vector<std::string>& names() const { return *names_; }

  /// Throws std::out_of_range for unknown names.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const VariableSet& a, const VariableSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Exponent vector. Unused trailing slots stay zero, so comparisons do not
/// need the variable count.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<std::uint32_t> exponents);

  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }

  std::uint64_t total_degree() const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial min(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Graded lexicographic: total degree first, then the first variable
  /// with differing exponent decides.
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b);

 private:
  std::array<std::uint32_t, kMaxVariables> exps_{};
};

/// Sparse polynomial with rational coefficients over a fixed VariableSet.
/// Terms are kept in strictly descending graded-lex order with no zero
/// coefficients, so equal polynomials have identical term lists.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, BigRational>;

  MultiPoly() = default;
  explicit MultiPoly(VariableSet vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(VariableSet vars, const BigRational& value);
  static MultiPoly variable(VariableSet vars, std::size_t index,
                            std::uint32_t power = 1);
  static MultiPoly variable(const VariableSet& vars, std::string_view name,
                            std::uint32_t power = 1);
  static MultiPoly term(VariableSet vars, const Monomial& mono,
                        const BigRational& coeff);
  /// Builds from arbitrary (possibly repeated, unsorted, zero) terms.
  static MultiPoly from_terms(VariableSet vars, std::vector<Term> terms);

  const VariableSet& variables() const { return vars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  BigRational constant_term() const;
  BigRational coefficient(const Monomial& mono) const;

  /// Requires a nonzero polynomial.
  const Term& leading_term() const { return terms_.front(); }
  const BigRational& leading_coefficient() const { return terms_.front().second; }

  std::uint64_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;

  /// Bit i set when variable i occurs with positive exponent.
  std::uint32_t variable_mask() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const BigRational& rhs);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigRational& b) { return a *= b; }
  friend MultiPoly operator*(const BigRational& b, MultiPoly a) { return a *= b; }

  MultiPoly pow(unsigned exponent) const;

  /// Quotient when `divisor` divides this polynomial exactly, otherwise
  /// nullopt. Throws DivisionByZero for a zero divisor.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  /// Positive gcd of all coefficients; zero for the zero polynomial.
  BigRational content() const;

  /// Componentwise minimum exponent over all terms.
  Monomial monomial_gcd() const;

  /// Requires mono to divide every term.
  MultiPoly divide_by_monomial(const Monomial& mono) const;

  /// Replaces variable `var` by the rational `value`.
  MultiPoly substitute(std::size_t var, const BigRational& value) const;

  /// Evaluates at a full point (one value per variable).
  BigRational evaluate(std::span<const BigRational> point) const;

  /// Rewrites every monomial through `map` into the ring `target`.
  MultiPoly map_monomials(VariableSet target,
                          const std::function<Monomial(const Monomial&)>& map) const;

  /// Canonical plain-text form, e.g. "3*X^2 + 4*X + 1".
  std::string str() const;
  /// LaTeX form, e.g. "3 X^{2} + 4 X + 1".
  std::string latex() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void require_same_ring(const MultiPoly& other) const;

  VariableSet vars_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Monic gcd of two polynomials that together involve at most one
/// variable. gcd(0, 0) = 0. Throws std::invalid_argument otherwise.
MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace combilu
