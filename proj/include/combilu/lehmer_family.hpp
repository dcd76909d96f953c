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

// Lehmer's tridiagonal matrix: ones on the diagonal and z^{1/2} q^{(i-1)/2}
// in positions (i, i+1) and (i+1, i), 1-based.
//
// Half-integer powers are avoided by working over the square-root
// variables sq, sz with q = sq^2 and z = sz^2.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "combilu/field_matrix.hpp"
#include "combilu/qseries.hpp"

namespace combilu::lehmer {

/// Ring with variables "sq", "sz" in that order.
const VariableSet& sqrt_ring();

class LehmerConfig {
 public:
  /// Throws std::invalid_argument for n == 0.
  explicit LehmerConfig(std::size_t n);
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
};

/// q -> sq^2, z -> sz^2.
MultiPoly lift_to_sqrt(const qseries::QZPoly& p);
/// Inverse of lift_to_sqrt; nullopt when some exponent is odd.
std::optional<qseries::QZPoly> lower_to_qz(const MultiPoly& p);
/// True when numerator and denominator use only even exponents.
bool in_qz_subring(const RatFunc& f);

/// lambda(j) over (sq, sz).
MultiPoly lambda_sqrt(unsigned j);

/// Closed-form factor entries, 1-based, for any positive indices.
RatFunc lower_entry(std::size_t i, std::size_t j);
RatFunc upper_entry(std::size_t j, std::size_t l);
/// Matrix entry, 1-based.
RatFunc matrix_entry(std::size_t i, std::size_t j);

FieldMatrix lehmer_matrix(const LehmerConfig& cfg);
FieldMatrix lehmer_L(const LehmerConfig& cfg);
FieldMatrix lehmer_U(const LehmerConfig& cfg);

/// lambda(n)/lambda(0) = lambda(n), in q and z.
qseries::QZPoly lehmer_det(const LehmerConfig& cfg);

struct LimitCoefficient {
  unsigned k = 0;
  unsigned m = 0;
  unsigned n = 0;  // size of the finite determinant compared
  BigRational finite;
  BigRational limit;
  bool pass() const { return finite == limit; }
};

/// Compares the z^k q^m coefficient of lambda(2k + m + 2) with the
/// coefficient of the infinite-size determinant, for k <= k_max and
/// m <= m_max. Ordered by (k, m).
std::vector<LimitCoefficient> lehmer_limit_check(unsigned k_max, unsigned m_max);

}  // namespace combilu::lehmer
