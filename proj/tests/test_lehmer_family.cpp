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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "combilu/kernels.hpp"
#include "combilu/lehmer_family.hpp"
#include "combilu/qseries.hpp"
#include "test_support.hpp"

using namespace combilu;
using namespace combilu::lehmer;
using combilu::testing::bipoly;
using combilu::testing::leibniz_det;

namespace {

RatFunc sqrt_mono(unsigned sq, unsigned sz) {
  return RatFunc(MultiPoly::term(sqrt_ring(), Monomial{sq, sz}, 1));
}

// Tridiagonal matrix with unit diagonal and z^{1/2} q^{(i-1)/2} beside it
// (1-based i = smaller index), built here without the library entries.
FieldMatrix direct_matrix(std::size_t n) {
  return FieldMatrix::generate(sqrt_ring(), n, n, [](std::size_t i, std::size_t j) {
    if (i == j) return RatFunc::one(sqrt_ring());
    const std::size_t lo = std::min(i, j);
    if (std::max(i, j) - lo != 1) return RatFunc(sqrt_ring());
    return sqrt_mono(static_cast<unsigned>(lo), 1);
  });
}

}  // namespace

TEST_CASE("matrix entries") {
  const RatFunc one = RatFunc::one(sqrt_ring());
  CHECK(lehmer_matrix(LehmerConfig(1))(0, 0) == one);
  const FieldMatrix m2 = lehmer_matrix(LehmerConfig(2));
  CHECK(m2(0, 1) == sqrt_mono(0, 1));
  CHECK(m2(1, 0) == sqrt_mono(0, 1));
  CHECK(lehmer_matrix(LehmerConfig(3))(1, 2) == sqrt_mono(1, 1));
  for (std::size_t n = 1; n <= 8; ++n) CHECK(lehmer_matrix(LehmerConfig(n)) == direct_matrix(n));
  CHECK_THROWS(LehmerConfig(0));
}

TEST_CASE("closed-form factor entries") {
  const auto cfg = LehmerConfig(3);
  const FieldMatrix l = lehmer_L(cfg);
  const FieldMatrix u = lehmer_U(cfg);
  CHECK(u(0, 0).is_one());
  CHECK(u(1, 1) == RatFunc::one(sqrt_ring()) - sqrt_mono(0, 2));
  CHECK(l(1, 0) == sqrt_mono(0, 1));
  CHECK(l.is_unit_lower_triangular());
  CHECK(u.is_upper_triangular());
}

TEST_CASE("conversion between the square-root ring and q, z") {
  const MultiPoly p = bipoly(qseries::qz_ring(), {{0, 0, 1}, {2, 1, -3}});
  const MultiPoly lifted = lift_to_sqrt(p);
  CHECK(lifted == bipoly(sqrt_ring(), {{0, 0, 1}, {4, 2, -3}}));
  CHECK(lower_to_qz(lifted) == p);
  CHECK_FALSE(lower_to_qz(bipoly(sqrt_ring(), {{1, 2, 1}})).has_value());
  CHECK(in_qz_subring(sqrt_mono(2, 2) / RatFunc(lifted)));
  CHECK_FALSE(in_qz_subring(sqrt_mono(0, 1)));
  CHECK(lambda_sqrt(5) == lift_to_sqrt(qseries::lambda_poly(5)));
}

TEST_CASE("determinants") {
  const auto& qz = qseries::qz_ring();
  CHECK(lehmer_det(LehmerConfig(1)).is_one());
  CHECK(lehmer_det(LehmerConfig(2)) == bipoly(qz, {{0, 0, 1}, {0, 1, -1}}));
  CHECK(lehmer_det(LehmerConfig(3)) == bipoly(qz, {{0, 0, 1}, {0, 1, -1}, {1, 1, -1}}));
  for (std::size_t n = 1; n <= 7; ++n) {
    CAPTURE(n);
    const RatFunc det = leibniz_det(direct_matrix(n));
    REQUIRE(det.is_polynomial());
    CHECK(lower_to_qz(det.num()) == lehmer_det(LehmerConfig(n)));
  }
}

TEST_CASE("factorization, symbolic sq and sz") {
  for (std::size_t n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const LehmerConfig cfg(n);
    const FieldMatrix m = lehmer_matrix(cfg);
    const FieldMatrix l = lehmer_L(cfg);
    const FieldMatrix u = lehmer_U(cfg);
    CHECK(mat_mul(l, u) == m);
    const LUPair oracle = reference::lu_decompose(m);
    CHECK(oracle.lower == l);
    CHECK(oracle.upper == u);
    CHECK(det_from_pivots(oracle) == RatFunc(lift_to_sqrt(lehmer_det(cfg))));
  }
}

TEST_CASE("entrywise product identities") {
  const RatFunc one = RatFunc::one(sqrt_ring());
  for (std::size_t j = 2; j <= 12; ++j) {
    CAPTURE(j);
    CHECK(lower_entry(j, j) * upper_entry(j, j) + lower_entry(j, j - 1) * upper_entry(j - 1, j) ==
          one);
    RatFunc above = lower_entry(j - 1, j - 1) * upper_entry(j - 1, j);
    if (j >= 3) above += lower_entry(j - 1, j - 2) * upper_entry(j - 2, j);
    CHECK(above == matrix_entry(j - 1, j));
    CHECK(lower_entry(j + 1, j + 1) * upper_entry(j + 1, j) + lower_entry(j + 1, j) * upper_entry(j, j) ==
          matrix_entry(j + 1, j));
    CHECK(in_qz_subring(upper_entry(j, j)));
    CHECK(in_qz_subring(lower_entry(j, j - 1) * upper_entry(j - 1, j)));
  }
}

TEST_CASE("limit coefficients stabilize") {
  const auto rows = lehmer_limit_check(4, 10);
  CHECK(rows.size() == 5 * 11);
  for (const auto& r : rows) {
    CAPTURE(r.k);
    CAPTURE(r.m);
    CHECK(r.n == 2 * r.k + r.m + 2);
    CHECK(r.pass());
  }
  // Spot values: k = 1, m = 2 gives -1; k = 2, m = 0 gives 0.
  for (const auto& r : rows) {
    if (r.k == 1 && r.m == 2) CHECK(r.limit == BigRational(-1));
    if (r.k == 2 && r.m == 0) CHECK(r.limit.is_zero());
    if (r.k == 0) CHECK(r.limit == BigRational(r.m == 0 ? 1 : 0));
  }
}

TEST_CASE("stabilization happens before the bound used in the check") {
  // The z^k q^m coefficient of lambda(n) already matches the limit once
  // n >= m + 2k - k(k-1); the check uses the larger 2k + m + 2.
  for (unsigned k = 0; k <= 4; ++k) {
    const auto limit = qseries::lehmer_limit_term(k, 10);
    for (unsigned m = 0; m <= 10; ++m) {
      const long tight = std::max<long>(static_cast<long>(m + 2 * k) - static_cast<long>(k * (k - 1)), 0);
      for (unsigned n = static_cast<unsigned>(tight); n <= 2 * k + m + 2; ++n) {
        CAPTURE(k);
        CAPTURE(m);
        CAPTURE(n);
        CHECK(qseries::lambda_poly(n).coefficient(Monomial{m, k}) == limit.coeffs[m]);
      }
    }
  }
}
