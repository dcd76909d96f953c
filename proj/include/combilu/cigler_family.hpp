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

// Two binomial matrices whose determinants are Fibonacci-type polynomials
// in X = x^2, with closed-form LU factors for each matrix and its
// transpose. Indices are 0-based: 0 <= i, j < n.
//
//   first:  M1(i, j) = C(i-1, j) X + C(i+1, j+1)
//   second: M2(i, j) = C(i, j) X + C(i+2, j+1)
//
// The factors are expressed through
//   f_n = sum_h C(n+h, 2h) X^h
//   e_n = sum_h C(n+h, 2h-1) X^h      (= X g_n)
//   g_n = sum_h C(n+1+h, 2h+1) X^h

#pragma once

#include <cstddef>

#include "combilu/field_matrix.hpp"

namespace combilu::cigler {

/// Ring with the single variable "X".
const VariableSet& x_ring();

/// Binomial coefficient for any integer n: n(n-1)...(n-k+1)/k! for k >= 0,
/// zero for k < 0. Row i = 0 of M1 needs C(-1, j) = (-1)^j.
BigInt gen_binom(long n, long k);

MultiPoly fib_f(unsigned n);
MultiPoly fib_e(unsigned n);
MultiPoly fib_g(unsigned n);

struct CiglerFactorization {
  FieldMatrix matrix;
  FieldMatrix lower;
  FieldMatrix upper;
};

enum class Family { kFirst = 1, kSecond = 2 };

/// Throws std::invalid_argument for n == 0.
CiglerFactorization cigler1(std::size_t n);
CiglerFactorization cigler1_transposed(std::size_t n);
CiglerFactorization cigler2(std::size_t n);
CiglerFactorization cigler2_transposed(std::size_t n);

/// Telescoped determinant: f_n for the first family, g_n for the second.
MultiPoly cigler_det(Family which, std::size_t n);

}  // namespace combilu::cigler
