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

// The s x s matrix with entries 1/((2l)^2 - t^2 (2i-1)^2), 1 <= i, l <= s,
// its transpose, and closed forms for their LU factors, the inverses of
// those factors, and the determinant.
//
// Only even powers of t occur, so everything is written in T = t^2 and the
// ring is univariate. Formulas use the 1-based indices (i, j, l) of the
// closed forms; matrix storage is 0-based, so entry (i, l) is stored at
// (i - 1, l - 1).

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "combilu/field_matrix.hpp"

namespace combilu::kt {

/// Ring with the single variable "T" (standing for t^2).
const VariableSet& t_ring();

class KTConfig {
 public:
  /// Symbolic T. Throws std::invalid_argument for s == 0.
  static KTConfig symbolic(std::size_t s);
  /// t fixed to a rational value. Rejects t = 0 and the poles
  /// t = +-2l/(2i-1), 1 <= i, l <= s.
  static KTConfig specialized(std::size_t s, const BigRational& t);

  std::size_t size() const { return s_; }
  const std::optional<BigRational>& t() const { return t_; }
  bool is_symbolic() const { return !t_.has_value(); }

  /// T as a polynomial: the variable itself, or the constant t^2.
  const MultiPoly& t_squared() const { return t_squared_; }

 private:
  KTConfig(std::size_t s, std::optional<BigRational> t);

  std::size_t s_;
  std::optional<BigRational> t_;
  MultiPoly t_squared_;
};

/// A matrix with closed-form LU factors and factor inverses.
struct KTFactorization {
  FieldMatrix matrix;
  FieldMatrix lower;
  FieldMatrix upper;
  FieldMatrix lower_inverse;
  FieldMatrix upper_inverse;
};

FieldMatrix kt_matrix(const KTConfig& cfg);
FieldMatrix kt_L(const KTConfig& cfg);
FieldMatrix kt_U(const KTConfig& cfg);
FieldMatrix kt_Linv(const KTConfig& cfg);
FieldMatrix kt_Uinv(const KTConfig& cfg);

KTFactorization kt_factorization(const KTConfig& cfg);
/// Factorization of the transpose of kt_matrix(cfg).
KTFactorization kt_transposed(const KTConfig& cfg);

/// Product of the closed-form diagonal entries of U.
RatFunc kt_det(const KTConfig& cfg);

/// The determinant at t = 1 evaluated through each successive closed
/// expression of its simplification, every one computed literally.
struct DetChain {
  static constexpr std::size_t kLength = 6;
  static const std::array<std::string, kLength>& labels();

  std::size_t s = 0;
  std::array<BigRational, kLength> expressions;

  bool all_equal() const;
};

DetChain kt_det_chain(std::size_t s);

}  // namespace combilu::kt
