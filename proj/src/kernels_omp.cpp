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

#include <cstdint>

#include "combilu/errors.hpp"
#include "combilu/kernels.hpp"

// Nothing inside a parallel region may throw: zero pivots are detected
// between regions, and every division inside one is by a checked pivot.

namespace combilu {

namespace {

using Index = std::int64_t;

RatFunc dot_tail(const FieldMatrix& L, const FieldMatrix& U, std::size_t row,
                 std::size_t col, std::size_t upto, RatFunc start) {
  for (std::size_t k = 0; k < upto; ++k) {
    if (L(row, k).is_zero() || U(k, col).is_zero()) continue;
    start -= L(row, k) * U(k, col);
  }
  return start;
}

}  // namespace

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("mat_mul: inner dimensions differ");
  FieldMatrix c(a.variables(), a.rows(), b.cols());
  const Index rows = static_cast<Index>(a.rows());
  const Index cols = static_cast<Index>(b.cols());
#pragma omp parallel for collapse(2) schedule(dynamic)
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
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
    // Row i of U: each entry depends only on earlier rows of U.
#pragma omp parallel for schedule(dynamic)
    for (Index j = static_cast<Index>(i); j < static_cast<Index>(n); ++j) {
      U(i, j) = dot_tail(L, U, i, j, i, m(i, j));
    }
    if (U(i, i).is_zero()) throw ZeroPivot(i);
    const RatFunc& pivot = U(i, i);
    // Column i of L below the diagonal.
#pragma omp parallel for schedule(dynamic)
    for (Index r = static_cast<Index>(i) + 1; r < static_cast<Index>(n); ++r) {
      L(r, i) = dot_tail(L, U, r, i, i, m(r, i)) / pivot;
    }
    lu.pivots.push_back(pivot);
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
    // Rows other than `col` are updated independently.
#pragma omp parallel for schedule(dynamic)
    for (Index r = 0; r < static_cast<Index>(n); ++r) {
      if (r == static_cast<Index>(col) || a(r, col).is_zero()) continue;
      const RatFunc factor = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(r, j) -= factor * a(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace combilu
