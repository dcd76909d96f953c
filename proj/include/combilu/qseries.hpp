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

#include <cstddef>
#include <vector>

#include "combilu/multi_poly.hpp"
#include "combilu/rat_func.hpp"

namespace combilu::qseries {

/// Ring with the single variable "q".
const VariableSet& q_ring();
/// Ring with variables "q", "z" in that order.
const VariableSet& qz_ring();

/// Polynomial in q (lives in q_ring()).
using QPoly = MultiPoly;
/// Polynomial in q and z (lives in qz_ring()).
using QZPoly = MultiPoly;

/// Coefficients of q^0 .. q^order of a formal power series.
struct TruncatedQSeries {
  std::size_t order = 0;
  std::vector<BigRational> coeffs;

  friend bool operator==(const TruncatedQSeries&, const TruncatedQSeries&) = default;
};

/// (q;q)_k = (1-q)(1-q^2)...(1-q^k).
QPoly q_pochhammer(unsigned k);

/// Gaussian binomial [n choose k]_q, zero outside 0 <= k <= n. Computed by
/// exact division of q-Pochhammer products.
QPoly gauss_binomial(long n, long k);

/// lambda(j) = sum_{0 <= k <= j/2} [j-k choose k]_q (-1)^k q^{k(k-1)} z^k.
QZPoly lambda_poly(unsigned j);

/// Schur coefficient a_n = q^{n^2 + m n} / (q;q)_n.
RatFunc schur_coeff(unsigned n, unsigned m);

/// Power-series coefficients of `f` up to q^order. `f` must live in a
/// single-variable ring. Throws DenominatorVanishesAtZero.
TruncatedQSeries series_expand(const RatFunc& f, std::size_t order);

/// Truncated (-1)^k q^{k(k-1)} / (q;q)_k, the z^k coefficient of the
/// infinite Lehmer determinant.
TruncatedQSeries lehmer_limit_term(unsigned k, std::size_t order);

}  // namespace combilu::qseries
