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

#include "combilu/errors.hpp"
#include "combilu/kernels.hpp"

namespace combilu {

RatFunc det_from_pivots(const LUPair& lu) {
  RatFunc det = RatFunc::one(lu.upper.variables());
  for (const auto& p : lu.pivots) det *= p;
  return det;
}

namespace reference {

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("mat_mul: inner dimensions differ");
  FieldMatrix c(a.variables(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      RatFunc sum(a.variables());
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        sum += a(i, k) * b(k, j);
      }
      c(i, j) = std::move(sum);
    }
  }
  return c;
}

LUPair lu_decompose(const FieldMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("lu_decompose: matrix not square");
  const std::size_t n = m.rows();
  LUPair lu{FieldMatrix::identity(m.variables(), n), FieldMatrix(m.variables(), n, n), {}};
  auto& L = lu.lower;
  auto& U = lu.upper;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      RatFunc v = m(i, j);
      for (std::size_t k = 0; k < i; ++k) {
        if (L(i, k).is_zero() || U(k, j).is_zero()) continue;
        v -= L(i, k) * U(k, j);
      }
      U(i, j) = std::move(v);
    }
    if (U(i, i).is_zero()) throw ZeroPivot(i);
    for (std::size_t r = i + 1; r < n; ++r) {
      RatFunc v = m(r, i);
      for (std::size_t k = 0; k < i; ++k) {
        if (L(r, k).is_zero() || U(k, i).is_zero()) continue;
        v -= L(r, k) * U(k, i);
      }
      L(r, i) = v / U(i, i);
    }
    lu.pivots.push_back(U(i, i));
  }
  return lu;
}

FieldMatrix mat_inverse(const FieldMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("mat_inverse: matrix not square");
  const std::size_t n = m.rows();
  FieldMatrix a = m;
  FieldMatrix inv = FieldMatrix::identity(m.variables(), n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw SingularMatrix();
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const RatFunc scale = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const RatFunc factor = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(r, j) -= factor * a(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace reference

}  // namespace combilu
