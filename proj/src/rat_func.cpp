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

#include "combilu/rat_func.hpp"

#include <bit>

#include "combilu/errors.hpp"

namespace combilu {

namespace {

bool is_univariate_pair(const MultiPoly& a, const MultiPoly& b) {
  return std::popcount(a.variable_mask() | b.variable_mask()) <= 1;
}

// Removes from `a` and `b` a common factor found by exact division of one
// by the other; only whole-polynomial factors are detected.
void cancel_exact(MultiPoly& a, MultiPoly& b) {
  if (a.is_constant() || b.is_constant()) return;
  if (auto q = a.divide_exact(b)) {
    a = std::move(*q);
    b = MultiPoly::constant(b.variables(), 1);
  } else if (auto r = b.divide_exact(a)) {
    b = std::move(*r);
    a = MultiPoly::constant(a.variables(), 1);
  }
}

std::string wrap(const std::string& s, bool multi_term) {
  return multi_term ? "(" + s + ")" : s;
}

}  // namespace

RatFunc::RatFunc(VariableSet vars)
    : num_(vars), den_(MultiPoly::constant(vars, 1)) {}

RatFunc::RatFunc(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(num_.variables(), 1)) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!(num_.variables() == den_.variables())) {
    throw VariableMismatch("numerator and denominator in different rings");
  }
  normalize();
}

RatFunc RatFunc::constant(VariableSet vars, const BigRational& value) {
  return RatFunc(MultiPoly::constant(std::move(vars), value));
}

bool RatFunc::is_one() const { return num_.is_one() && den_.is_one(); }

void RatFunc::normalize() {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.variables(), 1);
    return;
  }
  if (!den_.is_constant()) {
    const Monomial g = min(num_.monomial_gcd(), den_.monomial_gcd());
    if (g.total_degree() > 0) {
      num_ = num_.divide_by_monomial(g);
      den_ = den_.divide_by_monomial(g);
    }
  }
  if (!den_.is_constant()) {
    if (is_univariate_pair(num_, den_)) {
      const MultiPoly g = univariate_gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
      }
    } else {
      cancel_exact(num_, den_);
    }
  }
  BigRational scale = den_.content();
  if (den_.leading_coefficient().sign() < 0) scale = -scale;
  if (!scale.is_one()) {
    const BigRational inv = scale.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else if (den_.is_constant() || rhs.den_.is_constant() ||
             is_univariate_pair(den_, rhs.den_)) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  } else if (auto k = rhs.den_.divide_exact(den_)) {
    num_ = num_ * *k + rhs.num_;
    den_ = rhs.den_;
  } else if (auto k2 = den_.divide_exact(rhs.den_)) {
    num_ += rhs.num_ * *k2;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  if (is_zero()) {
    if (!(variables() == rhs.variables())) {
      throw VariableMismatch("rational functions in different rings");
    }
    return *this;
  }
  if (rhs.is_zero()) return *this = RatFunc(rhs.variables());
  MultiPoly a = num_;
  MultiPoly b = den_;
  MultiPoly c = rhs.num_;
  MultiPoly d = rhs.den_;
  if (!is_univariate_pair(a, d) || !is_univariate_pair(c, b)) {
    cancel_exact(a, d);
    cancel_exact(c, b);
  }
  num_ = a * c;
  den_ = b * d;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("division by the zero rational function");
  return *this *= rhs.inverse();
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (!(a.variables() == b.variables())) return false;
  if (a.num_ == b.num_ && a.den_ == b.den_) return true;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFunc RatFunc::substitute(std::size_t var, const BigRational& value) const {
  MultiPoly den = den_.substitute(var, value);
  if (den.is_zero()) throw DivisionByZero("denominator vanishes at substitution");
  return RatFunc(num_.substitute(var, value), std::move(den));
}

std::optional<MultiPoly> RatFunc::as_polynomial() const {
  if (den_.is_constant()) return num_ * den_.constant_term().inverse();
  return num_.divide_exact(den_);
}

std::optional<BigRational> RatFunc::as_constant() const {
  auto p = as_polynomial();
  if (!p || !p->is_constant()) return std::nullopt;
  return p->constant_term();
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return wrap(num_.str(), num_.term_count() > 1) + "/" +
         wrap(den_.str(), den_.term_count() > 1);
}

std::string RatFunc::latex() const {
  if (den_.is_one()) return num_.latex();
  return "\\frac{" + num_.latex() + "}{" + den_.latex() + "}";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
  return os << f.str();
}

}  // namespace combilu
