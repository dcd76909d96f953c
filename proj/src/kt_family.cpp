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

#include "combilu/kt_family.hpp"

#include <stdexcept>

namespace combilu::kt {

namespace {

BigRational sign(long e) { return BigRational(e % 2 == 0 ? 1 : -1); }

BigRational fact(long n) { return BigRational(factorial(n)); }

BigRational pow16(long e) { return BigRational(pow(BigInt(16), static_cast<unsigned long>(e))); }

// a^2 T - b^2
MultiPoly quad(const KTConfig& cfg, long a, long b) {
  return BigRational(a * a) * cfg.t_squared() -
         MultiPoly::constant(t_ring(), BigRational(b * b));
}

// prod_{k=1}^{upper} term(k); empty products are 1.
template <typename F>
MultiPoly product(long upper, F term) {
  MultiPoly p = MultiPoly::constant(t_ring(), 1);
  for (long k = 1; k <= upper; ++k) p *= term(k);
  return p;
}

MultiPoly t_power(const KTConfig& cfg, long e) {
  return cfg.t_squared().pow(static_cast<unsigned>(e));
}

// `entry` receives 1-based indices.
template <typename F>
FieldMatrix build(const KTConfig& cfg, F entry) {
  const std::size_t s = cfg.size();
  return FieldMatrix::generate(t_ring(), s, s, [&](std::size_t r, std::size_t c) {
    return entry(static_cast<long>(r) + 1, static_cast<long>(c) + 1);
  });
}

RatFunc zero() { return RatFunc(t_ring()); }

RatFunc ratio(const BigRational& coeff, const MultiPoly& num, const MultiPoly& den) {
  if (coeff.is_zero()) return zero();
  return RatFunc(coeff * num, den);
}

// Transposed-family closed forms.

RatFunc lower_t(const KTConfig& cfg, long i, long j) {
  const BigRational coeff =
      fact(i + j - 1) * BigRational(j) / (fact(2 * j - 1) * BigRational(i)) *
      reciprocal_factorial(i - j);
  return ratio(coeff, product(j, [&](long k) { return quad(cfg, 2 * k - 1, 2 * j); }),
               product(j, [&](long k) { return quad(cfg, 2 * k - 1, 2 * i); }));
}

RatFunc upper_t(const KTConfig& cfg, long j, long l) {
  if (l < j) return zero();
  const BigRational coeff = sign(j) * pow16(j - 1) * fact(2 * j - 1) *
                            fact(j + l - 2) / BigRational(j) *
                            reciprocal_factorial(l - j);
  return ratio(coeff, t_power(cfg, j - 1),
               product(j, [&](long k) { return quad(cfg, 2 * l - 1, 2 * k); }) *
                   product(j - 1, [&](long k) { return quad(cfg, 2 * k - 1, 2 * j); }));
}

RatFunc lower_inverse_t(const KTConfig& cfg, long i, long j) {
  const BigRational coeff = sign(i + j) * fact(2 * i) * BigRational(j * j) /
                            (fact(i + j) * BigRational(i * i)) *
                            reciprocal_factorial(i - j);
  return ratio(coeff, product(i - 1, [&](long k) { return quad(cfg, 2 * k - 1, 2 * j); }),
               product(i - 1, [&](long k) { return quad(cfg, 2 * k - 1, 2 * i); }));
}

RatFunc upper_inverse_t(const KTConfig& cfg, long j, long l) {
  if (l < j) return zero();
  const BigRational coeff =
      BigRational(2 * j - 1) * fact(l) * sign(j) /
      (pow16(l - 1) * fact(2 * l - 1) * fact(l + j - 1) * fact(l - 1)) *
      reciprocal_factorial(l - j);
  return ratio(coeff,
               product(l, [&](long k) { return quad(cfg, 2 * k - 1, 2 * l); }) *
                   product(l - 1, [&](long k) { return quad(cfg, 2 * j - 1, 2 * k); }),
               t_power(cfg, l - 1));
}

}  // namespace

const VariableSet& t_ring() {
  static const VariableSet kRing({"T"});
  return kRing;
}

KTConfig::KTConfig(std::size_t s, std::optional<BigRational> t)
    : s_(s), t_(std::move(t)),
      t_squared_(t_ ? MultiPoly::constant(t_ring(), *t_ * *t_)
                    : MultiPoly::variable(t_ring(), 0)) {}

KTConfig KTConfig::symbolic(std::size_t s) {
  if (s == 0) throw std::invalid_argument("matrix size must be at least 1");
  return KTConfig(s, std::nullopt);
}

KTConfig KTConfig::specialized(std::size_t s, const BigRational& t) {
  if (s == 0) throw std::invalid_argument("matrix size must be at least 1");
  if (t.is_zero()) throw std::invalid_argument("t = 0 makes the matrix singular");
  const BigRational tt = t * t;
  for (long i = 1; i <= static_cast<long>(s); ++i) {
    for (long l = 1; l <= static_cast<long>(s); ++l) {
      if (tt * BigRational((2 * i - 1) * (2 * i - 1)) == BigRational(4 * l * l)) {
        throw std::invalid_argument("t = " + t.str() + " is a pole (i = " +
                                    std::to_string(i) + ", l = " +
                                    std::to_string(l) + ")");
      }
    }
  }
  return KTConfig(s, t);
}

FieldMatrix kt_matrix(const KTConfig& cfg) {
  return build(cfg, [&](long i, long l) {
    return RatFunc(MultiPoly::constant(t_ring(), 1), -quad(cfg, 2 * i - 1, 2 * l));
  });
}

FieldMatrix kt_L(const KTConfig& cfg) {
  return build(cfg, [&](long i, long j) {
    const BigRational coeff = fact(i + j - 2) * reciprocal_factorial(i - j) *
                              reciprocal_factorial(2 * j - 2);
    return ratio(coeff, product(j, [&](long k) { return quad(cfg, 2 * j - 1, 2 * k); }),
                 product(j, [&](long k) { return quad(cfg, 2 * i - 1, 2 * k); }));
  });
}

FieldMatrix kt_U(const KTConfig& cfg) {
  return build(cfg, [&](long j, long l) {
    if (l < j) return zero();
    const BigRational coeff = sign(j) * pow16(j - 1) * fact(2 * j - 2) *
                              fact(j + l - 1) / BigRational(l) *
                              reciprocal_factorial(l - j);
    return ratio(coeff, t_power(cfg, j - 1),
                 product(j, [&](long k) { return quad(cfg, 2 * k - 1, 2 * l); }) *
                     product(j - 1, [&](long k) { return quad(cfg, 2 * j - 1, 2 * k); }));
  });
}

FieldMatrix kt_Linv(const KTConfig& cfg) {
  return build(cfg, [&](long i, long j) {
    const BigRational coeff = sign(i + j) * fact(2 * i - 2) * BigRational(2 * j - 1) /
                              fact(i + j - 1) * reciprocal_factorial(i - j);
    return ratio(coeff,
                 product(i - 1, [&](long k) { return quad(cfg, 2 * j - 1, 2 * k); }),
                 product(i - 1, [&](long k) { return quad(cfg, 2 * i - 1, 2 * k); }));
  });
}

FieldMatrix kt_Uinv(const KTConfig& cfg) {
  return build(cfg, [&](long j, long l) {
    if (l < j) return zero();
    const BigRational coeff =
        sign(j) * BigRational(2 * j * j) /
        (fact(2 * l - 2) * fact(j + l) * pow16(l - 1)) * reciprocal_factorial(l - j);
    return ratio(coeff,
                 product(l - 1, [&](long k) { return quad(cfg, 2 * k - 1, 2 * j); }) *
                     product(l, [&](long k) { return quad(cfg, 2 * l - 1, 2 * k); }),
                 t_power(cfg, l - 1));
  });
}

KTFactorization kt_factorization(const KTConfig& cfg) {
  return {kt_matrix(cfg), kt_L(cfg), kt_U(cfg), kt_Linv(cfg), kt_Uinv(cfg)};
}

KTFactorization kt_transposed(const KTConfig& cfg) {
  return {
      kt_matrix(cfg).transpose(),
      build(cfg, [&](long i, long j) { return lower_t(cfg, i, j); }),
      build(cfg, [&](long j, long l) { return upper_t(cfg, j, l); }),
      build(cfg, [&](long i, long j) { return lower_inverse_t(cfg, i, j); }),
      build(cfg, [&](long j, long l) { return upper_inverse_t(cfg, j, l); }),
  };
}

RatFunc kt_det(const KTConfig& cfg) {
  const FieldMatrix u = kt_U(cfg);
  RatFunc det = RatFunc::one(t_ring());
  for (std::size_t j = 0; j < cfg.size(); ++j) det *= u(j, j);
  return det;
}

const std::array<std::string, DetChain::kLength>& DetChain::labels() {
  static const std::array<std::string, kLength> kLabels = {
      "pivot product with explicit sign factors",
      "double factorial form",
      "factorial form",
      "central binomials C(4j,2j) C(4j-2,2j-1)",
      "central binomials C(2j,j), j <= 2s",
      "binomials C(2j+1,j), j < 2s",
  };
  return kLabels;
}

bool DetChain::all_equal() const {
  for (const auto& e : expressions) {
    if (!(e == expressions.front())) return false;
  }
  return true;
}

DetChain kt_det_chain(std::size_t s_in) {
  if (s_in == 0) throw std::invalid_argument("matrix size must be at least 1");
  const long s = static_cast<long>(s_in);
  const BigRational s_fact = fact(s);
  const BigRational s_fact_sq = s_fact * s_fact;
  const BigRational pow4s(pow(BigInt(4), static_cast<unsigned long>(s)));
  const BigRational pow16ss = pow16(s * (s - 1));
  DetChain chain;
  chain.s = s_in;

  BigRational p1 = 1;
  BigRational p2 = 1;
  BigRational p3 = 1;
  BigRational p4 = 1;
  for (long j = 1; j <= s; ++j) {
    BigRational den = 1;
    for (long k = 1; k <= j; ++k) den *= BigRational((2 * k - 2 * j - 1) * (2 * k + 2 * j - 1));
    for (long k = 1; k <= j - 1; ++k) den *= BigRational((2 * j - 2 * k - 1) * (2 * j + 2 * k - 1));
    p1 *= sign(j) * pow16(j - 1) * fact(2 * j - 2) * fact(2 * j - 1) / den;

    p2 *= pow16(j - 1) * fact(2 * j - 1) * fact(2 * j - 1) /
          (BigRational(odd_double_factorial(2 * j)) * BigRational(odd_double_factorial(2 * j - 1)));

    const BigRational f = fact(2 * j - 1);
    p3 *= BigRational(pow(BigInt(256), static_cast<unsigned long>(j - 1))) * f * f * f * f /
          (fact(4 * j - 1) * fact(4 * j - 2));

    p4 *= BigRational(binomial(4 * j, 2 * j) * binomial(4 * j - 2, 2 * j - 1));
  }
  BigRational p5 = 1;
  for (long j = 1; j <= 2 * s; ++j) p5 *= BigRational(binomial(2 * j, j));
  BigRational p6 = 1;
  for (long j = 0; j <= 2 * s - 1; ++j) p6 *= BigRational(binomial(2 * j + 1, j));

  chain.expressions[0] = p1 / s_fact;
  chain.expressions[1] = p2 / s_fact;
  chain.expressions[2] = pow4s * p3 / s_fact;
  chain.expressions[3] = pow4s * pow16ss / s_fact_sq / p4;
  chain.expressions[4] = pow4s * pow16ss / s_fact_sq / p5;
  chain.expressions[5] = pow16ss / s_fact_sq / p6;
  return chain;
}

}  // namespace combilu::kt
