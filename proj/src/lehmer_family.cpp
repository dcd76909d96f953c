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

#include "combilu/lehmer_family.hpp"

#include <stdexcept>

namespace combilu::lehmer {

namespace {

// sz * sq^e
RatFunc off_diagonal(std::size_t e) {
  return RatFunc(MultiPoly::term(sqrt_ring(), Monomial{static_cast<std::uint32_t>(e), 1},
                                 BigRational(1)));
}

RatFunc zero() { return RatFunc(sqrt_ring()); }

template <typename F>
FieldMatrix build(const LehmerConfig& cfg, F entry) {
  const std::size_t n = cfg.size();
  return FieldMatrix::generate(sqrt_ring(), n, n, [&](std::size_t r, std::size_t c) {
    return entry(r + 1, c + 1);
  });
}

bool even_exponents(const MultiPoly& p) {
  for (const auto& [mono, coeff] : p.terms()) {
    if (mono[0] % 2 != 0 || mono[1] % 2 != 0) return false;
  }
  return true;
}

}  // namespace

const VariableSet& sqrt_ring() {
  static const VariableSet kRing({"sq", "sz"});
  return kRing;
}

LehmerConfig::LehmerConfig(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("matrix size must be at least 1");
}

MultiPoly lift_to_sqrt(const qseries::QZPoly& p) {
  return p.map_monomials(sqrt_ring(), [](const Monomial& m) {
    return Monomial{2 * m[0], 2 * m[1]};
  });
}

std::optional<qseries::QZPoly> lower_to_qz(const MultiPoly& p) {
  if (!(p.variables() == sqrt_ring()) || !even_exponents(p)) return std::nullopt;
  return p.map_monomials(qseries::qz_ring(), [](const Monomial& m) {
    return Monomial{m[0] / 2, m[1] / 2};
  });
}

bool in_qz_subring(const RatFunc& f) {
  return even_exponents(f.num()) && even_exponents(f.den());
}

MultiPoly lambda_sqrt(unsigned j) { return lift_to_sqrt(qseries::lambda_poly(j)); }

RatFunc matrix_entry(std::size_t i, std::size_t j) {
  if (i == j) return RatFunc::one(sqrt_ring());
  if (j == i + 1) return off_diagonal(i - 1);
  if (i == j + 1) return off_diagonal(i - 2);
  return zero();
}

RatFunc lower_entry(std::size_t i, std::size_t j) {
  if (i == j) return RatFunc::one(sqrt_ring());
  if (i != j + 1) return zero();
  const auto jj = static_cast<unsigned>(j);
  return off_diagonal(j - 1) * RatFunc(lambda_sqrt(jj - 1), lambda_sqrt(jj));
}

RatFunc upper_entry(std::size_t j, std::size_t l) {
  if (l == j) {
    const auto jj = static_cast<unsigned>(j);
    return RatFunc(lambda_sqrt(jj), lambda_sqrt(jj - 1));
  }
  if (l == j + 1) return off_diagonal(j - 1);
  return zero();
}

FieldMatrix lehmer_matrix(const LehmerConfig& cfg) { return build(cfg, matrix_entry); }

FieldMatrix lehmer_L(const LehmerConfig& cfg) { return build(cfg, lower_entry); }

FieldMatrix lehmer_U(const LehmerConfig& cfg) { return build(cfg, upper_entry); }

qseries::QZPoly lehmer_det(const LehmerConfig& cfg) {
  return qseries::lambda_poly(static_cast<unsigned>(cfg.size()));
}

std::vector<LimitCoefficient> lehmer_limit_check(unsigned k_max, unsigned m_max) {
  std::vector<LimitCoefficient> out;
  for (unsigned k = 0; k <= k_max; ++k) {
    const qseries::TruncatedQSeries limit = qseries::lehmer_limit_term(k, m_max);
    for (unsigned m = 0; m <= m_max; ++m) {
      const unsigned n = 2 * k + m + 2;
      const qseries::QZPoly lambda = qseries::lambda_poly(n);
      out.push_back({k, m, n, lambda.coefficient(Monomial{m, k}), limit.coeffs[m]});
    }
  }
  return out;
}

}  // namespace combilu::lehmer
