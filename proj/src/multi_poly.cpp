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

#include "combilu/multi_poly.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "combilu/errors.hpp"

namespace combilu {

namespace {

const std::shared_ptr<const std::vector<std::string>>& empty_names() {
  static const auto kEmpty = std::make_shared<const std::vector<std::string>>();
  return kEmpty;
}

using TermMap = std::map<Monomial, BigRational, std::greater<>>;

std::vector<MultiPoly::Term> flatten(TermMap&& acc) {
  std::vector<MultiPoly::Term> out;
  out.reserve(acc.size());
  for (auto& [mono, coeff] : acc) {
    if (!coeff.is_zero()) out.emplace_back(mono, std::move(coeff));
  }
  return out;
}

// Index of the only variable used by a and b together, if there is at most
// one (0 for two constants).
std::optional<std::size_t> sole_variable(const MultiPoly& a, const MultiPoly& b) {
  const std::uint32_t mask = a.variable_mask() | b.variable_mask();
  if (std::popcount(mask) > 1) return std::nullopt;
  return mask == 0 ? 0 : static_cast<std::size_t>(std::countr_zero(mask));
}

std::vector<BigRational> to_dense(const MultiPoly& p, std::size_t v) {
  std::vector<BigRational> dense(p.degree_in(v) + 1);
  for (const auto& [mono, coeff] : p.terms()) dense[mono[v]] = coeff;
  return dense;
}

std::vector<MultiPoly::Term> from_dense(std::vector<BigRational>& dense, std::size_t v) {
  std::vector<MultiPoly::Term> terms;
  for (std::size_t d = dense.size(); d-- > 0;) {
    if (dense[d].is_zero()) continue;
    Monomial m;
    m[v] = static_cast<std::uint32_t>(d);
    terms.emplace_back(m, std::move(dense[d]));
  }
  return terms;
}

// Integer coefficient vector (index = degree) of c * p in variable v, where
// c clears all denominators.
std::vector<BigInt> to_integer_dense(const MultiPoly& p, std::size_t v) {
  BigInt den_lcm = 1;
  for (const auto& t : p.terms()) {
    const BigInt den = t.second.denominator();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<BigInt> dense(p.degree_in(v) + 1);
  for (const auto& [mono, coeff] : p.terms()) {
    dense[mono[v]] = coeff.numerator() * (den_lcm / coeff.denominator());
  }
  return dense;
}

void trim(std::vector<BigInt>& dense) {
  while (!dense.empty() && dense.back() == 0) dense.pop_back();
}

void make_primitive(std::vector<BigInt>& dense) {
  BigInt g = 0;
  for (const auto& c : dense) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0) return;
  for (auto& c : dense) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b (b trimmed, nonzero), made primitive.
std::vector<BigInt> primitive_remainder(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const BigInt& lead = b.back();
  trim(a);
  while (a.size() >= b.size()) {
    const BigInt top = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= top * b[i];
    a.pop_back();
    trim(a);
    make_primitive(a);
  }
  return a;
}

void append_monomial(std::ostringstream& os, const VariableSet& vars,
                     const Monomial& mono, bool latex) {
  bool first = true;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    if (mono[v] == 0) continue;
    if (!first) os << (latex ? " " : "*");
    first = false;
    os << vars.name(v);
    if (mono[v] > 1) {
      if (latex) {
        os << "^{" << mono[v] << "}";
      } else {
        os << "^" << mono[v];
      }
    }
  }
}

std::string render(const VariableSet& vars,
                   std::span<const MultiPoly::Term> terms, bool latex) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, coeff] : terms) {
    const bool negative = coeff.sign() < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const BigRational magnitude = coeff.abs();
    const bool is_const = mono.total_degree() == 0;
    if (is_const) {
      os << (latex ? magnitude.latex() : magnitude.str());
      continue;
    }
    if (!magnitude.is_one()) {
      os << (latex ? magnitude.latex() : magnitude.str()) << (latex ? " " : "*");
    }
    append_monomial(os, vars, mono, latex);
  }
  return os.str();
}

}  // namespace

VariableSet::VariableSet() : names_(empty_names()) {}

VariableSet::VariableSet(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  if (names_->size() > kMaxVariables) {
    throw std::invalid_argument("too many variables (max " +
                                std::to_string(kMaxVariables) + ")");
  }
}

std::size_t VariableSet::index_of(std::string_view name) const {
  const auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) {
    throw std::out_of_range("unknown variable '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - names_->begin());
}

Monomial::Monomial(std::initializer_list<std::uint32_t> exponents) {
  if (exponents.size() > kMaxVariables) {
    throw std::invalid_argument("exponent vector longer than kMaxVariables");
  }
  std::copy(exponents.begin(), exponents.end(), exps_.begin());
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
  return r;
}

Monomial min(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  }
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

MultiPoly MultiPoly::constant(VariableSet vars, const BigRational& value) {
  MultiPoly p(std::move(vars));
  if (!value.is_zero()) p.terms_.emplace_back(Monomial{}, value);
  return p;
}

MultiPoly MultiPoly::variable(VariableSet vars, std::size_t index,
                              std::uint32_t power) {
  if (index >= vars.size()) throw std::out_of_range("variable index");
  Monomial m;
  m[index] = power;
  return term(std::move(vars), m, BigRational(1));
}

MultiPoly MultiPoly::variable(const VariableSet& vars, std::string_view name,
                              std::uint32_t power) {
  return variable(vars, vars.index_of(name), power);
}

MultiPoly MultiPoly::term(VariableSet vars, const Monomial& mono,
                          const BigRational& coeff) {
  MultiPoly p(std::move(vars));
  if (!coeff.is_zero()) p.terms_.emplace_back(mono, coeff);
  return p;
}

MultiPoly MultiPoly::from_terms(VariableSet vars, std::vector<Term> terms) {
  TermMap acc;
  for (auto& [mono, coeff] : terms) acc[mono] += coeff;
  MultiPoly p(std::move(vars));
  p.terms_ = flatten(std::move(acc));
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.front().first.total_degree() == 0);
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_.front().first.total_degree() == 0 &&
         terms_.front().second.is_one();
}

BigRational MultiPoly::constant_term() const {
  if (terms_.empty() || terms_.back().first.total_degree() != 0) return {};
  return terms_.back().second;
}

BigRational MultiPoly::coefficient(const Monomial& mono) const {
  const auto it = std::lower_bound(
      terms_.begin(), terms_.end(), mono,
      [](const Term& t, const Monomial& m) { return t.first > m; });
  if (it != terms_.end() && it->first == mono) return it->second;
  return {};
}

std::uint64_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().first.total_degree();
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first[var]);
  return d;
}

std::uint32_t MultiPoly::variable_mask() const {
  std::uint32_t mask = 0;
  for (const auto& t : terms_) {
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (t.first[v] > 0) mask |= 1u << v;
    }
  }
  return mask;
}

void MultiPoly::require_same_ring(const MultiPoly& other) const {
  if (!(vars_ == other.vars_)) {
    throw VariableMismatch("polynomials live in different variable sets");
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  require_same_ring(rhs);
  if (rhs.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first > b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first > a->first) {
      merged.push_back(*b++);
    } else {
      BigRational sum = a->second + b->second;
      if (!sum.is_zero()) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) { return *this += -rhs; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_ring(b);
  MultiPoly r(a.vars_);
  if (a.is_zero() || b.is_zero()) return r;
  if (b.terms_.size() == 1) {
    const auto& [bm, bc] = b.terms_.front();
    r.terms_.reserve(a.terms_.size());
    // Multiplying by a single term preserves the order.
    for (const auto& [am, ac] : a.terms_) r.terms_.emplace_back(am * bm, ac * bc);
    return r;
  }
  if (a.terms_.size() == 1) return b * a;
  if (const auto v = sole_variable(a, b)) {
    const auto x = to_dense(a, *v);
    const auto y = to_dense(b, *v);
    std::vector<BigRational> out(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (!y[j].is_zero()) out[i + j] += x[i] * y[j];
      }
    }
    r.terms_ = from_dense(out, *v);
    return r;
  }
  TermMap acc;
  for (const auto& [am, ac] : a.terms_) {
    for (const auto& [bm, bc] : b.terms_) acc[am * bm] += ac * bc;
  }
  r.terms_ = flatten(std::move(acc));
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigRational& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= rhs;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(vars_, BigRational(1));
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  require_same_ring(divisor);
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  MultiPoly quotient(vars_);
  if (is_zero()) return quotient;
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    if (divisor.degree_in(v) > degree_in(v)) return std::nullopt;
  }
  const auto& [lead_mono, lead_coeff] = divisor.leading_term();
  const BigRational lead_inv = lead_coeff.inverse();
  if (const auto v = sole_variable(*this, divisor)) {
    auto rem = to_dense(*this, *v);
    const auto d = to_dense(divisor, *v);
    const std::size_t shift_max = rem.size() - d.size();
    std::vector<BigRational> q(shift_max + 1);
    for (std::size_t s = shift_max + 1; s-- > 0;) {
      const BigRational& top = rem[s + d.size() - 1];
      if (top.is_zero()) continue;
      q[s] = top * lead_inv;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (!d[i].is_zero()) rem[s + i] -= q[s] * d[i];
      }
    }
    for (const auto& c : rem) {
      if (!c.is_zero()) return std::nullopt;
    }
    quotient.terms_ = from_dense(q, *v);
    return quotient;
  }
  // {divisor} is a Groebner basis of its ideal, so a leading term of the
  // remainder that lead_mono does not divide proves non-divisibility.
  MultiPoly rem = *this;
  std::vector<Term> quotient_terms;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    if (!lead_mono.divides(rm)) return std::nullopt;
    Term t{rm / lead_mono, rc * lead_inv};
    rem -= divisor * term(vars_, t.first, t.second);
    quotient_terms.push_back(std::move(t));
  }
  // Quotient terms come out in strictly descending order.
  quotient.terms_ = std::move(quotient_terms);
  return quotient;
}

BigRational MultiPoly::content() const {
  BigRational g;
  for (const auto& t : terms_) g = gcd(g, t.second);
  return g;
}

Monomial MultiPoly::monomial_gcd() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.front().first;
  for (const auto& t : terms_) g = min(g, t.first);
  return g;
}

MultiPoly MultiPoly::divide_by_monomial(const Monomial& mono) const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) {
    if (!mono.divides(t.first)) {
      throw std::invalid_argument("monomial does not divide every term");
    }
    t.first = t.first / mono;
  }
  return r;
}

MultiPoly MultiPoly::substitute(std::size_t var, const BigRational& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [mono, coeff] : terms_) {
    Monomial m = mono;
    BigRational c = coeff;
    BigRational factor = 1;
    for (std::uint32_t e = 0; e < m[var]; ++e) factor *= value;
    m[var] = 0;
    out.emplace_back(m, c * factor);
  }
  return from_terms(vars_, std::move(out));
}

BigRational MultiPoly::evaluate(std::span<const BigRational> point) const {
  if (point.size() != vars_.size()) {
    throw std::invalid_argument("evaluation point has wrong dimension");
  }
  BigRational sum;
  for (const auto& [mono, coeff] : terms_) {
    BigRational v = coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (std::uint32_t e = 0; e < mono[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

MultiPoly MultiPoly::map_monomials(
    VariableSet target, const std::function<Monomial(const Monomial&)>& map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [mono, coeff] : terms_) out.emplace_back(map(mono), coeff);
  return from_terms(std::move(target), std::move(out));
}

std::string MultiPoly::str() const { return render(vars_, terms_, false); }

std::string MultiPoly::latex() const { return render(vars_, terms_, true); }

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
  return os << p.str();
}

MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.variables() == b.variables())) {
    throw VariableMismatch("gcd of polynomials in different variable sets");
  }
  const std::uint32_t mask = a.variable_mask() | b.variable_mask();
  if (std::popcount(mask) > 1) {
    throw std::invalid_argument("univariate_gcd called on a multivariate pair");
  }
  const VariableSet& vars = a.variables();
  if (a.is_zero() && b.is_zero()) return MultiPoly(vars);
  const std::size_t v = mask == 0 ? 0 : static_cast<std::size_t>(std::countr_zero(mask));
  if (mask == 0) return MultiPoly::constant(vars, BigRational(1));

  if (a.is_zero() || b.is_zero()) {
    const MultiPoly& p = a.is_zero() ? b : a;
    return p * p.leading_coefficient().inverse();
  }
  // A single term shares only a monomial factor with anything.
  if (a.term_count() == 1 || b.term_count() == 1) {
    Monomial g = min(a.monomial_gcd(), b.monomial_gcd());
    return MultiPoly::term(vars, g, BigRational(1));
  }

  // Primitive polynomial remainder sequence over Z.
  std::vector<BigInt> x = to_integer_dense(a, v);
  std::vector<BigInt> y = to_integer_dense(b, v);
  trim(x);
  trim(y);
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    auto r = primitive_remainder(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
  }
  const BigRational lead_inv = BigRational(x.back()).inverse();
  std::vector<MultiPoly::Term> terms;
  for (std::size_t d = 0; d < x.size(); ++d) {
    if (x[d] == 0) continue;
    Monomial m;
    m[v] = static_cast<std::uint32_t>(d);
    terms.emplace_back(m, BigRational(x[d]) * lead_inv);
  }
  return MultiPoly::from_terms(vars, std::move(terms));
}

}  // namespace combilu
