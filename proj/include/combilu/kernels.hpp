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

// Exact elimination kernels over FieldMatrix.
//
// The functions in namespace combilu are OpenMP-parallel over the
// independent entries of each elimination step (or of the product). The
// functions in combilu::reference are the plain serial loops they were
// derived from; tests check both agree and the benchmark compares them.
//
// LU is Doolittle elimination without pivoting: a vanishing pivot raises
// ZeroPivot instead of permuting rows, so the factors line up with closed
// forms that presume nonzero leading minors.

#pragma once

#include <vector>

#include "combilu/field_matrix.hpp"

namespace combilu {

/// Unit lower triangular `lower`, upper triangular `upper`, and
/// pivots[k] == upper(k, k), all nonzero.
struct LUPair {
  FieldMatrix lower;
  FieldMatrix upper;
  std::vector<RatFunc> pivots;
};

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b);
LUPair lu_decompose(const FieldMatrix& m);
/// Gauss-Jordan with row exchange on the first nonzero candidate pivot.
FieldMatrix mat_inverse(const FieldMatrix& m);

/// Product of the pivots; the determinant of lower * upper.
RatFunc det_from_pivots(const LUPair& lu);

namespace reference {

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b);
LUPair lu_decompose(const FieldMatrix& m);
FieldMatrix mat_inverse(const FieldMatrix& m);

}  // namespace reference

}  // namespace combilu
