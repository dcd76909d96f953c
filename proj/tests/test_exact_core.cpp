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

#include "combilu/errors.hpp"
#include "combilu/kernels.hpp"
#include "test_support.hpp"

using namespace combilu;
using combilu::testing::leibniz_det;
using combilu::testing::matrix;
using combilu::testing::rf;
using combilu::testing::upoly;

namespace {

const VariableSet kX({"X"});
const VariableSet kT({"T"});
const VariableSet kQ({"q"});
const VariableSet kXY({"x", "y"});

RatFunc c(const VariableSet& vars, long num, long den = 1) {
  return RatFunc::constant(vars, BigRational(num, den));
}

}  // namespace

TEST_CASE("big rationals normalize and parse") {
  CHECK(BigRational(6, 4) == BigRational(3, 2));
  CHECK(BigRational(3, -6).str() == "-1/2");
  CHECK(BigRational::parse("-10/4") == BigRational(-5, 2));
  CHECK(BigRational::parse("7") == BigRational(7));
  CHECK(BigRational(3, 4).latex() == "\\frac{3}{4}");
  CHECK_THROWS_AS(BigRational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(BigRational(0).inverse(), DivisionByZero);
  CHECK_THROWS(BigRational::parse("1/x"));
}

TEST_CASE("integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(reciprocal_factorial(-1).is_zero());
  CHECK(reciprocal_factorial(4) == BigRational(1, 24));
  CHECK(odd_double_factorial(1) == 1);
  CHECK(odd_double_factorial(4) == 105);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
  CHECK(gcd(BigRational(2, 3), BigRational(4, 9)) == BigRational(2, 9));
}

TEST_CASE("monomials use graded lex order") {
  CHECK(Monomial{2, 0} > Monomial{1, 1});
  CHECK(Monomial{0, 3} > Monomial{2, 0});
  CHECK(Monomial{1, 1}.divides(Monomial{2, 1}));
  CHECK_FALSE(Monomial{0, 2}.divides(Monomial{2, 1}));
}

TEST_CASE("polynomial arithmetic and printing") {
  const MultiPoly x = MultiPoly::variable(kX, 0);
  const MultiPoly one = MultiPoly::constant(kX, 1);
  const MultiPoly p = (x + one) * (MultiPoly::constant(kX, 3) * x + one);
  CHECK(p.str() == "3*X^2 + 4*X + 1");
  CHECK(p.latex() == "3 X^{2} + 4 X + 1");
  CHECK((p - p).is_zero());
  CHECK((x - one).pow(2) == upoly(kX, {1, -2, 1}));

  const MultiPoly a = MultiPoly::variable(kXY, 0);
  const MultiPoly b = MultiPoly::variable(kXY, 1);
  CHECK((a * b * b - b).str() == "x*y^2 - y");
  CHECK_THROWS_AS(a + x, VariableMismatch);
}

TEST_CASE("exact division") {
  const MultiPoly p = upoly(kX, {-1, 0, 1});
  const auto q = p.divide_exact(upoly(kX, {-1, 1}));
  REQUIRE(q.has_value());
  CHECK(*q == upoly(kX, {1, 1}));
  CHECK_FALSE(p.divide_exact(upoly(kX, {2, 1})).has_value());

  const MultiPoly a = MultiPoly::variable(kXY, 0);
  const MultiPoly b = MultiPoly::variable(kXY, 1);
  const auto r = (a * a - b * b).divide_exact(a + b);
  REQUIRE(r.has_value());
  CHECK(*r == a - b);
  CHECK_FALSE((a * a + b).divide_exact(a + b).has_value());
}

TEST_CASE("univariate gcd is monic") {
  const MultiPoly f1 = upoly(kX, {-1, 1});
  const MultiPoly f2 = upoly(kX, {1, 0, 1});
  const MultiPoly a = f1 * f2 * upoly(kX, {2, 1});
  const MultiPoly b = f1 * f2 * upoly(kX, {5, 1}) * MultiPoly::constant(kX, BigRational(3, 7));
  CHECK(univariate_gcd(a, b) == f1 * f2);
  CHECK(univariate_gcd(upoly(kX, {0, 0, 0, 1}), upoly(kX, {0, 1, 1})) == upoly(kX, {0, 1}));
  CHECK(univariate_gcd(upoly(kX, {1, 1}), upoly(kX, {2, 1})).is_one());
  CHECK(univariate_gcd(upoly(kX, {0, 4}), MultiPoly(kX)) == upoly(kX, {0, 1}));
}

TEST_CASE("field arithmetic examples") {
  const MultiPoly t = MultiPoly::variable(kT, 0);
  const MultiPoly four = MultiPoly::constant(kT, 4);
  const MultiPoly nine = MultiPoly::constant(kT, 9);
  const RatFunc a = rf(t - four, nine * t - four);
  const RatFunc b = rf(nine * t - four, t - four);
  CHECK((a * b).is_one());

  const RatFunc g = rf(MultiPoly::constant(kQ, 1), upoly(kQ, {1, -1}));
  CHECK((g + (-g)).is_zero());

  const RatFunc lhs = rf(upoly(kX, {-1, 0, 1}), upoly(kX, {-1, 1}));
  CHECK(lhs == rf(upoly(kX, {1, 1})));
  CHECK(lhs.is_polynomial());
}

TEST_CASE("rational functions are kept in canonical form") {
  const RatFunc zero = rf(MultiPoly(kX), upoly(kX, {3, 1}));
  CHECK(zero.is_zero());
  CHECK(zero.den().is_one());

  const RatFunc f = rf(upoly(kX, {2, 2}), upoly(kX, {-6, 0, -6}));
  CHECK(f.den().leading_coefficient() > BigRational(0));
  CHECK(f.den().content() == BigRational(1));
  CHECK(f.str() == "(-1/3*X - 1/3)/(X^2 + 1)");
  CHECK(f == rf(upoly(kX, {-1, -1}), upoly(kX, {3, 0, 3})));

  const RatFunc g = rf(upoly(kX, {0, 0, 1}), upoly(kX, {0, 1, 1}));
  CHECK(g.str() == "X/(X + 1)");
  CHECK(g.latex() == "\\frac{X}{X + 1}");

  CHECK_THROWS_AS(rf(upoly(kX, {1}), MultiPoly(kX)), DivisionByZero);
  CHECK_THROWS_AS(g / RatFunc(kX), DivisionByZero);
  CHECK_THROWS_AS(g + c(kT, 1), VariableMismatch);
}

TEST_CASE("lu of the identity") {
  const FieldMatrix id = FieldMatrix::identity(kX, 3);
  const LUPair lu = lu_decompose(id);
  CHECK(lu.lower == id);
  CHECK(lu.upper == id);
  CHECK(det_from_pivots(lu_decompose(FieldMatrix::identity(kX, 5))).is_one());
}

TEST_CASE("lu of a 2x2 polynomial matrix") {
  const RatFunc x = rf(upoly(kX, {0, 1}));
  const FieldMatrix m = matrix(kX, {{x + c(kX, 1), -x}, {x + c(kX, 2), c(kX, 1)}});
  for (const LUPair& lu : {lu_decompose(m), reference::lu_decompose(m)}) {
    CHECK(lu.lower(1, 0) == rf(upoly(kX, {2, 1}), upoly(kX, {1, 1})));
    CHECK(lu.upper(0, 0) == x + c(kX, 1));
    CHECK(lu.upper(0, 1) == -x);
    CHECK(lu.upper(1, 0).is_zero());
    CHECK(lu.upper(1, 1) == rf(upoly(kX, {1, 3, 1}), upoly(kX, {1, 1})));
    CHECK(det_from_pivots(lu) == leibniz_det(m));
  }
}

TEST_CASE("determinant of a rational 2x2 matrix") {
  const FieldMatrix m =
      matrix(kT, {{c(kT, 1, 3), c(kT, 1, 15)}, {c(kT, -1, 5), c(kT, 1, 7)}});
  CHECK(det_from_pivots(lu_decompose(m)) == c(kT, 32, 525));
  CHECK(leibniz_det(m) == c(kT, 32, 525));
}

TEST_CASE("zero pivots and singular matrices") {
  const FieldMatrix swap = matrix(kX, {{c(kX, 0), c(kX, 1)}, {c(kX, 1), c(kX, 0)}});
  try {
    lu_decompose(swap);
    FAIL("expected ZeroPivot");
  } catch (const ZeroPivot& e) {
    CHECK(e.step() == 0);
  }
  CHECK_THROWS_AS(reference::lu_decompose(swap), ZeroPivot);
  // Row exchange is allowed when inverting.
  CHECK(mat_inverse(swap) == swap);
  CHECK(reference::mat_inverse(swap) == swap);

  const RatFunc x = rf(upoly(kX, {0, 1}));
  const FieldMatrix singular = matrix(kX, {{x, x * x}, {c(kX, 1), x}});
  CHECK_THROWS_AS(mat_inverse(singular), SingularMatrix);
  CHECK_THROWS_AS(reference::mat_inverse(singular), SingularMatrix);
  CHECK_THROWS_AS(lu_decompose(singular), ZeroPivot);

  CHECK_THROWS_AS(lu_decompose(FieldMatrix(kX, 2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(mat_mul(FieldMatrix(kX, 2, 3), FieldMatrix(kX, 2, 3)), DimensionMismatch);
}

TEST_CASE("matrix products") {
  const RatFunc x = rf(upoly(kX, {0, 1}));
  const FieldMatrix m = matrix(kX, {{x, c(kX, 2)}, {c(kX, 1, 2), x * x}});
  CHECK(mat_mul(FieldMatrix::identity(kX, 2), m) == m);

  const VariableSet sqrt_ring({"sq", "sz"});
  const RatFunc sz = rf(MultiPoly::variable(sqrt_ring, 1));
  const RatFunc one = RatFunc::one(sqrt_ring);
  const RatFunc zero(sqrt_ring);
  const FieldMatrix l = matrix(sqrt_ring, {{one, zero}, {sz, one}});
  const FieldMatrix u = matrix(sqrt_ring, {{one, sz}, {zero, one - sz * sz}});
  const FieldMatrix expected = matrix(sqrt_ring, {{one, sz}, {sz, one}});
  CHECK(mat_mul(l, u) == expected);
  CHECK(reference::mat_mul(l, u) == expected);
}

TEST_CASE("matrix inverses") {
  CHECK(mat_inverse(FieldMatrix::identity(kX, 4)) == FieldMatrix::identity(kX, 4));

  const MultiPoly t = MultiPoly::variable(kT, 0);
  const RatFunc entry = rf(t - MultiPoly::constant(kT, 4),
                           MultiPoly::constant(kT, 9) * t - MultiPoly::constant(kT, 4));
  const FieldMatrix l = matrix(kT, {{c(kT, 1), c(kT, 0)}, {entry, c(kT, 1)}});
  const FieldMatrix expected = matrix(kT, {{c(kT, 1), c(kT, 0)}, {-entry, c(kT, 1)}});
  CHECK(mat_inverse(l) == expected);
  CHECK(reference::mat_inverse(l) == expected);
}

TEST_CASE("parallel kernels agree with the serial reference") {
  // A dense 5x5 matrix with rational function entries.
  const FieldMatrix m = FieldMatrix::generate(kX, 5, 5, [](std::size_t i, std::size_t j) {
    const long a = static_cast<long>(i + 1);
    const long b = static_cast<long>(j + 1);
    return rf(upoly(kX, {a * b + 1, a - b, 1}), upoly(kX, {a + b, 1}));
  });
  const LUPair par = lu_decompose(m);
  const LUPair ser = reference::lu_decompose(m);
  CHECK(par.lower == ser.lower);
  CHECK(par.upper == ser.upper);
  CHECK(mat_mul(par.lower, par.upper) == m);
  CHECK(mat_mul(m, m) == reference::mat_mul(m, m));
  CHECK(mat_mul(m, m) == combilu::testing::naive_product(m, m));
  const FieldMatrix inv = mat_inverse(m);
  CHECK(inv == reference::mat_inverse(m));
  CHECK(mat_mul(m, inv) == FieldMatrix::identity(kX, 5));
  CHECK(det_from_pivots(par) == leibniz_det(m));
}
