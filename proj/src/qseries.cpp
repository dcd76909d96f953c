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

#include "combilu/qseries.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "combilu/errors.hpp"

namespace combilu::qseries {

namespace {

MultiPoly q_power(unsigned e) { return MultiPoly::variable(q_ring(), 0, e); }

}  // namespace

const VariableSet& q_ring() {
  static const VariableSet kRing({"q"});
  return kRing;
}

const VariableSet& qz_ring() {
  static const VariableSet kRing({"q", "z"});
  return kRing;
}

QPoly q_pochhammer(unsigned k) {
  // Products are shared across calls (and threads); each extends the last.
  static std::mutex mu;
  static std::vector<MultiPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  const MultiPoly one = MultiPoly::constant(q_ring(), 1);
  if (cache.empty()) cache.push_back(one);
  while (cache.size() <= k) {
    const auto i = static_cast<unsigned>(cache.size());
    cache.push_back(cache.back() * (one - q_power(i)));
  }
  return cache[k];
}

QPoly gauss_binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return MultiPoly(q_ring());
  const auto nu = static_cast<unsigned>(n);
  const auto ku = static_cast<unsigned>(k);
  const MultiPoly den = q_pochhammer(ku) * q_pochhammer(nu - ku);
  auto quotient = q_pochhammer(nu).divide_exact(den);
  if (!quotient) throw std::logic_error("q-binomial division was not exact");
  return *quotient;
}

QZPoly lambda_poly(unsigned j) {
  const VariableSet& ring = qz_ring();
  MultiPoly sum(ring);
  for (unsigned k = 0; 2 * k <= j; ++k) {
    // Lift the q-polynomial into the (q, z) ring, then attach q^{k(k-1)} z^k.
    const MultiPoly g = gauss_binomial(j - k, k).map_monomials(
        ring, [k](const Monomial& m) {
          return Monomial{m[0] + k * (k - 1), k};
        });
    sum += (k % 2 == 0) ? g : -g;
  }
  return sum;
}

RatFunc schur_coeff(unsigned n, unsigned m) {
  return RatFunc(q_power(n * n + m * n), q_pochhammer(n));
}

TruncatedQSeries series_expand(const RatFunc& f, std::size_t order) {
  if (f.variables().size() != 1) {
    throw std::invalid_argument("series_expand needs a single-variable ring");
  }
  const BigRational d0 = f.den().constant_term();
  if (d0.is_zero()) throw DenominatorVanishesAtZero();

  auto dense = [order](const MultiPoly& p) {
    std::vector<BigRational> c(order + 1);
    for (const auto& [mono, coeff] : p.terms()) {
      if (mono[0] <= order) c[mono[0]] = coeff;
    }
    return c;
  };
  const std::vector<BigRational> num = dense(f.num());
  const std::vector<BigRational> den = dense(f.den());
  const BigRational d0_inv = d0.inverse();

  // Solve den * out = num coefficient by coefficient.
  TruncatedQSeries out{order, std::vector<BigRational>(order + 1)};
  for (std::size_t i = 0; i <= order; ++i) {
    BigRational acc = num[i];
    for (std::size_t j = 1; j <= i; ++j) acc -= den[j] * out.coeffs[i - j];
    out.coeffs[i] = acc * d0_inv;
  }
  return out;
}

TruncatedQSeries lehmer_limit_term(unsigned k, std::size_t order) {
  const MultiPoly num = MultiPoly::term(q_ring(), Monomial{k * (k - 1)},
                                        BigRational(k % 2 == 0 ? 1 : -1));
  return series_expand(RatFunc(num, q_pochhammer(k)), order);
}

}  // namespace combilu::qseries
