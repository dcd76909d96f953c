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

#include "combilu/cigler_family.hpp"

#include <stdexcept>
#include <vector>

namespace combilu::cigler {

namespace {

// sum_{h=lo}^{hi} C(a + h, 2h + b) X^h
MultiPoly binomial_sum(long a, long b, long lo, long hi) {
  std::vector<MultiPoly::Term> terms;
  for (long h = lo; h <= hi; ++h) {
    terms.emplace_back(Monomial{static_cast<std::uint32_t>(h)},
                       BigRational(gen_binom(a + h, 2 * h + b)));
  }
  return MultiPoly::from_terms(x_ring(), std::move(terms));
}

RatFunc poly(const MultiPoly& p) { return RatFunc(p); }

RatFunc binom_x(long n, long k) {
  return RatFunc::constant(x_ring(), BigRational(gen_binom(n, k)));
}

RatFunc x_var() { return RatFunc(MultiPoly::variable(x_ring(), 0)); }

void require_size(std::size_t n) {
  if (n == 0) throw std::invalid_argument("matrix size must be at least 1");
}

template <typename F>
FieldMatrix build(std::size_t n, F entry) {
  return FieldMatrix::generate(x_ring(), n, n, [&](std::size_t r, std::size_t c) {
    return entry(static_cast<long>(r), static_cast<long>(c));
  });
}

FieldMatrix first_matrix(std::size_t n) {
  return build(n, [](long i, long j) {
    return binom_x(i - 1, j) * x_var() + binom_x(i + 1, j + 1);
  });
}

FieldMatrix second_matrix(std::size_t n) {
  return build(n, [](long i, long j) {
    return binom_x(i, j) * x_var() + binom_x(i + 2, j + 1);
  });
}

RatFunc sign(long e) { return RatFunc::constant(x_ring(), e % 2 == 0 ? 1 : -1); }

unsigned u(long v) { return static_cast<unsigned>(v); }

}  // namespace

const VariableSet& x_ring() {
  static const VariableSet kRing({"X"});
  return kRing;
}

BigInt gen_binom(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0) return binomial(n, k);
  BigInt num = 1;
  for (long i = 0; i < k; ++i) num *= n - i;
  return num / factorial(k);
}

MultiPoly fib_f(unsigned n) { return binomial_sum(n, 0, 0, n); }

MultiPoly fib_e(unsigned n) { return binomial_sum(n, -1, 1, static_cast<long>(n) + 1); }

MultiPoly fib_g(unsigned n) { return binomial_sum(static_cast<long>(n) + 1, 1, 0, n); }

CiglerFactorization cigler1(std::size_t n) {
  require_size(n);
  return {
      first_matrix(n),
      build(n,
            [](long i, long j) {
              return (binom_x(i + 1, j + 1) * poly(fib_f(u(j))) +
                      binom_x(i, j) * poly(fib_e(u(j)))) /
                     poly(fib_f(u(j + 1)));
            }),
      build(n,
            [](long j, long l) {
              if (l < j) return RatFunc(x_ring());
              if (l == j) return RatFunc(fib_f(u(j + 1)), fib_f(u(j)));
              return sign(j + l) * RatFunc(fib_e(u(j)), fib_f(u(j)));
            }),
  };
}

CiglerFactorization cigler1_transposed(std::size_t n) {
  require_size(n);
  return {
      first_matrix(n).transpose(),
      build(n,
            [](long i, long j) {
              if (j > i) return RatFunc(x_ring());
              if (j == i) return RatFunc::one(x_ring());
              return sign(i + j) * RatFunc(fib_e(u(j)), fib_f(u(j + 1)));
            }),
      build(n,
            [](long j, long l) {
              return (binom_x(l, j) * poly(fib_e(u(j))) +
                      binom_x(l + 1, j + 1) * poly(fib_f(u(j)))) /
                     poly(fib_f(u(j)));
            }),
  };
}

CiglerFactorization cigler2(std::size_t n) {
  require_size(n);
  return {
      second_matrix(n),
      build(n,
            [](long i, long j) {
              return (binom_x(i + 1, j + 1) * poly(fib_g(u(j))) +
                      binom_x(i, j) * poly(fib_f(u(j + 1)))) /
                     poly(fib_g(u(j + 1)));
            }),
      build(n,
            [](long j, long l) {
              if (l == j) return RatFunc(fib_g(u(j + 1)), fib_g(u(j)));
              if (l == j + 1) return RatFunc::one(x_ring());
              return RatFunc(x_ring());
            }),
  };
}

CiglerFactorization cigler2_transposed(std::size_t n) {
  require_size(n);
  return {
      second_matrix(n).transpose(),
      build(n,
            [](long i, long j) {
              if (j == i) return RatFunc::one(x_ring());
              if (j == i - 1) return RatFunc(fib_g(u(i - 1)), fib_g(u(i)));
              return RatFunc(x_ring());
            }),
      build(n,
            [](long j, long l) {
              return (binom_x(l + 1, j + 1) * poly(fib_g(u(j))) +
                      binom_x(l, j) * poly(fib_f(u(j + 1)))) /
                     poly(fib_g(u(j)));
            }),
  };
}

MultiPoly cigler_det(Family which, std::size_t n) {
  require_size(n);
  return which == Family::kFirst ? fib_f(u(static_cast<long>(n)))
                                 : fib_g(u(static_cast<long>(n)));
}

}  // namespace combilu::cigler
