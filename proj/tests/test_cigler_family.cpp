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

#include "combilu/cigler_family.hpp"
#include "combilu/kernels.hpp"
#include "test_support.hpp"

using namespace combilu;
using namespace combilu::cigler;
using combilu::testing::leibniz_det;
using combilu::testing::upoly;

namespace {

const VariableSet& ring() { return x_ring(); }

RatFunc p(std::initializer_list<BigRational> coeffs) { return RatFunc(upoly(ring(), coeffs)); }

// n(n-1)...(n-k+1)/k! by direct falling product, any integer n.
long falling_binomial(long n, long k) {
  if (k < 0) return 0;
  long num = 1;
  long den = 1;
  for (long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

FieldMatrix direct_matrix(Family which, std::size_t n) {
  return FieldMatrix::generate(ring(), n, n, [which](std::size_t r, std::size_t c) {
    const long i = static_cast<long>(r);
    const long j = static_cast<long>(c);
    return which == Family::kFirst
               ? p({falling_binomial(i + 1, j + 1), falling_binomial(i - 1, j)})
               : p({falling_binomial(i + 2, j + 1), falling_binomial(i, j)});
  });
}

void check_factorization(const CiglerFactorization& f, const FieldMatrix& expected) {
  CHECK(f.matrix == expected);
  CHECK(f.lower.is_unit_lower_triangular());
  CHECK(f.upper.is_upper_triangular());
  CHECK(mat_mul(f.lower, f.upper) == expected);
  const LUPair oracle = reference::lu_decompose(expected);
  CHECK(oracle.lower == f.lower);
  CHECK(oracle.upper == f.upper);
}

}  // namespace

TEST_CASE("generalized binomials") {
  CHECK(gen_binom(3, 2) == 3);
  CHECK(gen_binom(-1, 1) == -1);
  CHECK(gen_binom(2, 5) == 0);
  CHECK(gen_binom(4, -1) == 0);
  for (long k = 0; k <= 10; ++k) CHECK(gen_binom(-1, k) == (k % 2 == 0 ? 1 : -1));
  for (long n = -6; n <= 8; ++n) {
    for (long k = 0; k <= 6; ++k) CHECK(gen_binom(n, k) == falling_binomial(n, k));
  }
}

TEST_CASE("Fibonacci-type polynomials") {
  CHECK(fib_f(0).is_one());
  CHECK(fib_g(0).is_one());
  CHECK(fib_f(3) == upoly(ring(), {1, 6, 5, 1}));
  CHECK(fib_e(1) == upoly(ring(), {0, 2, 1}));
  CHECK(fib_g(2) == upoly(ring(), {3, 4, 1}));
  const MultiPoly x = MultiPoly::variable(ring(), 0);
  const MultiPoly x_plus_2 = upoly(ring(), {2, 1});
  for (unsigned n = 1; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(fib_f(n) == fib_f(n - 1) + fib_e(n - 1));
    CHECK(fib_e(n) == x * fib_g(n));
    CHECK(fib_g(n) == fib_g(n - 1) + fib_f(n));
    CHECK(fib_e(n).degree_in(0) == n + 1);
    if (n >= 2) CHECK(fib_f(n) == x_plus_2 * fib_f(n - 1) - fib_f(n - 2));
  }
}

TEST_CASE("first family, small sizes") {
  const auto f1 = cigler1(1);
  CHECK(f1.matrix(0, 0) == p({1, 1}));
  const auto f2 = cigler1(2);
  CHECK(f2.matrix == direct_matrix(Family::kFirst, 2));
  CHECK(f2.matrix(0, 1) == p({0, -1}));
  CHECK(f2.matrix(1, 0) == p({2, 1}));
  CHECK(f2.upper(0, 1) == p({0, -1}));
  CHECK(f2.lower(1, 0) == RatFunc(upoly(ring(), {2, 1}), upoly(ring(), {1, 1})));
  for (std::size_t j = 0; j < 2; ++j) CHECK(f2.lower(j, j).is_one());
  CHECK(cigler_det(Family::kFirst, 1) == upoly(ring(), {1, 1}));
  CHECK(cigler_det(Family::kFirst, 2) == upoly(ring(), {1, 3, 1}));
  CHECK(cigler_det(Family::kFirst, 3) == upoly(ring(), {1, 6, 5, 1}));
}

TEST_CASE("first family transposed, small sizes") {
  const auto f = cigler1_transposed(2);
  CHECK(f.matrix(0, 1) == p({2, 1}));
  CHECK(f.matrix(1, 0) == p({0, -1}));
  // -e_0 / f_1
  CHECK(f.lower(1, 0) == RatFunc(upoly(ring(), {0, -1}), upoly(ring(), {1, 1})));
  check_factorization(cigler1_transposed(4), direct_matrix(Family::kFirst, 4).transpose());
}

TEST_CASE("second family, small sizes") {
  const auto f1 = cigler2(1);
  CHECK(f1.matrix(0, 0) == p({2, 1}));
  CHECK(f1.upper(0, 0) == p({2, 1}));
  CHECK(cigler_det(Family::kSecond, 1) == upoly(ring(), {2, 1}));
  CHECK(cigler_det(Family::kSecond, 2) == upoly(ring(), {3, 4, 1}));
  const auto f4 = cigler2(4);
  for (std::size_t j = 0; j + 1 < 4; ++j) {
    CHECK(f4.upper(j, j + 1).is_one());
    if (j + 2 < 4) CHECK(f4.upper(j, j + 2).is_zero());
  }
}

TEST_CASE("second family transposed, small sizes") {
  const auto f = cigler2_transposed(4);
  CHECK(f.lower(1, 0) == RatFunc(MultiPoly::constant(ring(), 1), upoly(ring(), {2, 1})));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j + 1 < i; ++j) CHECK(f.lower(i, j).is_zero());
  }
  check_factorization(f, direct_matrix(Family::kSecond, 4).transpose());
}

TEST_CASE("all four factorizations, symbolic X") {
  for (std::size_t n = 1; n <= 10; ++n) {
    CAPTURE(n);
    const FieldMatrix m1 = direct_matrix(Family::kFirst, n);
    const FieldMatrix m2 = direct_matrix(Family::kSecond, n);
    check_factorization(cigler1(n), m1);
    check_factorization(cigler1_transposed(n), m1.transpose());
    check_factorization(cigler2(n), m2);
    check_factorization(cigler2_transposed(n), m2.transpose());
    CHECK(det_from_pivots(lu_decompose(m1)) == RatFunc(cigler_det(Family::kFirst, n)));
    CHECK(det_from_pivots(lu_decompose(m2)) == RatFunc(cigler_det(Family::kSecond, n)));
  }
}

TEST_CASE("determinants against permutation expansion") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(leibniz_det(direct_matrix(Family::kFirst, n)) == RatFunc(fib_f(static_cast<unsigned>(n))));
    CHECK(leibniz_det(direct_matrix(Family::kSecond, n)) == RatFunc(fib_g(static_cast<unsigned>(n))));
  }
  CHECK_THROWS(cigler1(0));
}
