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

#include "combilu/verify.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <exception>
#include <set>
#include <stdexcept>

#include "combilu/cigler_family.hpp"
#include "combilu/errors.hpp"
#include "combilu/kernels.hpp"
#include "combilu/kt_family.hpp"
#include "combilu/lehmer_family.hpp"
#include "combilu/qseries.hpp"

namespace combilu::verify {

namespace {

constexpr std::array<std::pair<FamilyId, std::string_view>, 8> kNames = {{
    {FamilyId::kKt, "kt"},
    {FamilyId::kKtT, "kt_t"},
    {FamilyId::kLehmer, "lehmer"},
    {FamilyId::kCigler1, "cigler1"},
    {FamilyId::kCigler1T, "cigler1_t"},
    {FamilyId::kCigler2, "cigler2"},
    {FamilyId::kCigler2T, "cigler2_t"},
    {FamilyId::kQseries, "qseries"},
}};

class CheckList {
 public:
  explicit CheckList(std::size_t n) : n_(n) {}

  void expect(std::string name, bool pass, std::string detail = {}) {
    checks_.push_back({std::move(name), n_, pass, pass ? std::string{} : std::move(detail)});
  }

  // Like expect, but the detail is reported even when the check passes.
  void record(std::string name, bool pass, std::string detail) {
    checks_.push_back({std::move(name), n_, pass, std::move(detail)});
  }

  void expect_equal(std::string name, const FieldMatrix& got, const FieldMatrix& want) {
    const auto mismatch = got.first_mismatch(want);
    std::string detail;
    if (mismatch) {
      if (got.rows() != want.rows() || got.cols() != want.cols()) {
        detail = "shape mismatch";
      } else {
        const auto [i, j] = *mismatch;
        detail = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                 "): " + got(i, j).str() + " != " + want(i, j).str();
      }
    }
    expect(std::move(name), !mismatch.has_value(), std::move(detail));
  }

  template <typename T>
  void expect_same(std::string name, const T& got, const T& want) {
    const bool pass = got == want;
    expect(std::move(name), pass, pass ? std::string{} : got.str() + " != " + want.str());
  }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::size_t n_;
  std::vector<Check> checks_;
};

void corrupt(FieldMatrix& m) {
  RatFunc& e = m.rows() > 1 ? m(m.rows() - 1, 0) : m(0, 0);
  e += RatFunc::one(m.variables());
}

RatFunc diagonal_product(const FieldMatrix& m) {
  RatFunc p = RatFunc::one(m.variables());
  for (std::size_t j = 0; j < m.rows(); ++j) p *= m(j, j);
  return p;
}

// Oracle comparison shared by all matrix families.
std::optional<LUPair> check_oracle(CheckList& out, const FieldMatrix& matrix,
                                   const FieldMatrix& lower, const FieldMatrix& upper) {
  try {
    LUPair lu = lu_decompose(matrix);
    out.expect_equal("oracle L = closed-form L", lu.lower, lower);
    out.expect_equal("oracle U = closed-form U", lu.upper, upper);
    return lu;
  } catch (const ZeroPivot& e) {
    out.expect("oracle L = closed-form L", false, e.what());
    out.expect("oracle U = closed-form U", false, e.what());
    return std::nullopt;
  }
}

void kt_checks(CheckList& out, std::size_t n, const VerifyOptions& opt, bool transposed) {
  const kt::KTConfig cfg = opt.t ? kt::KTConfig::specialized(n, *opt.t)
                                 : kt::KTConfig::symbolic(n);
  kt::KTFactorization f = transposed ? kt::kt_transposed(cfg) : kt::kt_factorization(cfg);
  if (opt.corrupt_closed_form) corrupt(f.lower);
  const FieldMatrix id = FieldMatrix::identity(kt::t_ring(), n);

  out.expect_equal(transposed ? "L*U = M^t" : "L*U = M", mat_mul(f.lower, f.upper), f.matrix);
  out.expect_equal("L*Linv = I", mat_mul(f.lower, f.lower_inverse), id);
  out.expect_equal("U*Uinv = I", mat_mul(f.upper, f.upper_inverse), id);
  out.expect("L unit lower triangular", f.lower.is_unit_lower_triangular());
  out.expect("U upper triangular", f.upper.is_upper_triangular());

  const RatFunc det = transposed ? diagonal_product(f.upper) : kt::kt_det(cfg);
  if (auto lu = check_oracle(out, f.matrix, f.lower, f.upper)) {
    out.expect_same("det = oracle pivot product", det, det_from_pivots(*lu));
  }

  if (transposed) return;
  const bool at_one = !opt.t || *opt.t == BigRational(1) || *opt.t == BigRational(-1);
  if (at_one) {
    const kt::DetChain chain = kt::kt_det_chain(n);
    std::string values;
    for (const auto& e : chain.expressions) values += (values.empty() ? "" : ", ") + e.str();
    const bool agree = chain.all_equal();
    out.record("det chain expressions agree", agree,
               agree ? "D = " + chain.expressions[0].str() : values);
    const RatFunc det_one = cfg.is_symbolic() ? det.substitute(0, 1) : det;
    const auto value = det_one.as_constant();
    out.expect("det at t=1 = det chain", value && *value == chain.expressions[0],
               det_one.str() + " vs " + chain.expressions[0].str());
  }
  if (cfg.is_symbolic()) {
    const kt::KTConfig one = kt::KTConfig::specialized(n, 1);
    const bool commutes = kt::kt_L(cfg).substitute(0, 1) == kt::kt_L(one) &&
                          kt::kt_U(cfg).substitute(0, 1) == kt::kt_U(one) &&
                          kt::kt_matrix(cfg).substitute(0, 1) == kt::kt_matrix(one);
    out.expect("T=1 specialization commutes", commutes);
  }
}

void lehmer_checks(CheckList& out, std::size_t n, const VerifyOptions& opt) {
  using lehmer::lower_entry;
  using lehmer::matrix_entry;
  using lehmer::upper_entry;
  const lehmer::LehmerConfig cfg(n);
  const FieldMatrix m = lehmer::lehmer_matrix(cfg);
  FieldMatrix lower = lehmer::lehmer_L(cfg);
  const FieldMatrix upper = lehmer::lehmer_U(cfg);
  if (opt.corrupt_closed_form) corrupt(lower);

  out.expect_equal("L*U = M", mat_mul(lower, upper), m);
  if (auto lu = check_oracle(out, m, lower, upper)) {
    const auto poly = det_from_pivots(*lu).as_polynomial();
    const auto lowered = poly ? lehmer::lower_to_qz(*poly) : std::nullopt;
    const auto lambda = lehmer::lehmer_det(cfg);
    out.expect("oracle det = lambda(n)", lowered && *lowered == lambda,
               poly ? poly->str() : "oracle determinant is not a polynomial");
  }

  bool even = true;
  for (std::size_t j = 1; j <= n; ++j) {
    even = even && lehmer::in_qz_subring(upper_entry(j, j));
    if (j < n) even = even && lehmer::in_qz_subring(lower_entry(j + 1, j) * upper_entry(j, j + 1));
  }
  out.expect("q,z-subring values have even sq,sz exponents", even);

  if (n < 2) return;
  const auto j = static_cast<unsigned>(n);
  const MultiPoly z_q = MultiPoly::term(qseries::qz_ring(), Monomial{j - 2, 1}, 1);
  out.expect_same("lambda recursion", qseries::lambda_poly(j),
                  qseries::lambda_poly(j - 1) - z_q * qseries::lambda_poly(j - 2));

  const RatFunc diag = lower_entry(n, n) * upper_entry(n, n) +
                       lower_entry(n, n - 1) * upper_entry(n - 1, n);
  out.expect_same("product case i=j", diag, RatFunc::one(lehmer::sqrt_ring()));
  RatFunc above = lower_entry(n - 1, n - 1) * upper_entry(n - 1, n);
  if (n >= 3) above += lower_entry(n - 1, n - 2) * upper_entry(n - 2, n);
  out.expect_same("product case i=j-1", above, matrix_entry(n - 1, n));
  const RatFunc below = lower_entry(n + 1, n + 1) * upper_entry(n + 1, n) +
                        lower_entry(n + 1, n) * upper_entry(n, n);
  out.expect_same("product case i=j+1", below, matrix_entry(n + 1, n));
}

void cigler_checks(CheckList& out, std::size_t n, const VerifyOptions& opt, FamilyId family) {
  using namespace cigler;
  CiglerFactorization f;
  Family which = Family::kFirst;
  bool transposed = false;
  switch (family) {
    case FamilyId::kCigler1: f = cigler1(n); break;
    case FamilyId::kCigler1T: f = cigler1_transposed(n); transposed = true; break;
    case FamilyId::kCigler2: f = cigler2(n); which = Family::kSecond; break;
    default: f = cigler2_transposed(n); which = Family::kSecond; transposed = true; break;
  }
  if (opt.corrupt_closed_form) corrupt(f.lower);

  out.expect_equal(transposed ? "L*U = M^t" : "L*U = M", mat_mul(f.lower, f.upper), f.matrix);
  out.expect("L unit lower triangular", f.lower.is_unit_lower_triangular());
  out.expect("U upper triangular", f.upper.is_upper_triangular());
  const RatFunc target(cigler_det(which, n));
  out.expect_same("closed-form det = telescoped polynomial", diagonal_product(f.upper), target);
  if (auto lu = check_oracle(out, f.matrix, f.lower, f.upper)) {
    out.expect_same("oracle det = telescoped polynomial", det_from_pivots(*lu), target);
  }

  const auto k = static_cast<unsigned>(n);
  const MultiPoly x = MultiPoly::variable(x_ring(), 0);
  out.expect_same("f_n = f_{n-1} + e_{n-1}", fib_f(k), fib_f(k - 1) + fib_e(k - 1));
  out.expect_same("e_n = X g_n", fib_e(k), x * fib_g(k));
  out.expect_same("g_n = g_{n-1} + f_n", fib_g(k), fib_g(k - 1) + fib_f(k));
  if (n >= 2) {
    const MultiPoly two = MultiPoly::constant(x_ring(), 2);
    out.expect_same("f recursion", fib_f(k), (x + two) * fib_f(k - 1) - fib_f(k - 2));
  }
}

void qseries_checks(CheckList& out, std::size_t n, const VerifyOptions& opt) {
  using namespace qseries;
  const long nl = static_cast<long>(n);
  const auto nu = static_cast<unsigned>(n);
  bool pascal = true;
  bool symmetric = true;
  for (long k = 0; k <= nl; ++k) {
    symmetric = symmetric && gauss_binomial(nl, k) == gauss_binomial(nl, nl - k);
    if (k == 0) continue;
    const MultiPoly qk = MultiPoly::variable(q_ring(), 0, static_cast<std::uint32_t>(k));
    pascal = pascal && gauss_binomial(nl, k) ==
                           gauss_binomial(nl - 1, k - 1) + qk * gauss_binomial(nl - 1, k);
  }
  out.expect("gauss Pascal recursion", pascal);
  out.expect("gauss symmetry", symmetric);

  const MultiPoly poch = q_pochhammer(nu);
  out.expect("(q;q)_n degree n(n+1)/2, constant term 1",
             poch.total_degree() == n * (n + 1) / 2 && poch.constant_term().is_one());

  const TruncatedQSeries inv = series_expand(RatFunc(MultiPoly::constant(q_ring(), 1), poch),
                                             opt.truncation_order);
  // (q;q)_n * expansion of 1/(q;q)_n must be 1 up to the truncation order.
  bool inverse_ok = true;
  for (std::size_t d = 0; d <= opt.truncation_order; ++d) {
    BigRational acc;
    for (std::size_t i = 0; i <= d; ++i) acc += poch.coefficient(Monomial{static_cast<std::uint32_t>(i)}) * inv.coeffs[d - i];
    inverse_ok = inverse_ok && acc == BigRational(d == 0 ? 1 : 0);
  }
  out.expect("series of 1/(q;q)_n inverts (q;q)_n", inverse_ok);

  if (n >= 2) {
    const MultiPoly z_q = MultiPoly::term(qz_ring(), Monomial{nu - 2, 1}, 1);
    out.expect_same("lambda recursion", lambda_poly(nu),
                    lambda_poly(nu - 1) - z_q * lambda_poly(nu - 2));
  }

  bool schur = true;
  for (unsigned m = 0; m <= 3; ++m) {
    RatFunc a_n = schur_coeff(nu, m);
    if (opt.corrupt_closed_form) a_n += RatFunc::one(q_ring());
    const RatFunc lhs = a_n *
                        RatFunc(MultiPoly::constant(q_ring(), 1) - MultiPoly::variable(q_ring(), 0, nu));
    const RatFunc rhs = RatFunc(MultiPoly::variable(q_ring(), 0, m + 2 * nu - 1)) *
                        schur_coeff(nu - 1, m);
    schur = schur && lhs == rhs;
  }
  out.expect("Schur recursion, m = 0..3", schur);
}

}  // namespace

std::string_view family_name(FamilyId family) {
  for (const auto& [id, name] : kNames) {
    if (id == family) return name;
  }
  return "unknown";
}

std::optional<FamilyId> parse_family(std::string_view name) {
  for (const auto& [id, n] : kNames) {
    if (n == name) return id;
  }
  return std::nullopt;
}

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> kAll = [] {
    std::vector<FamilyId> v;
    for (const auto& [id, name] : kNames) v.push_back(id);
    return v;
  }();
  return kAll;
}

std::pair<std::size_t, std::size_t> default_sizes(FamilyId family) {
  switch (family) {
    case FamilyId::kKt:
    case FamilyId::kKtT: return {1, 6};
    case FamilyId::kLehmer: return {1, 12};
    case FamilyId::kQseries: return {1, 15};
    default: return {1, 10};
  }
}

bool VerifyReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<Check> run_checks(FamilyId family, std::size_t n, const VerifyOptions& options) {
  CheckList out(n);
  try {
    switch (family) {
      case FamilyId::kKt: kt_checks(out, n, options, false); break;
      case FamilyId::kKtT: kt_checks(out, n, options, true); break;
      case FamilyId::kLehmer: lehmer_checks(out, n, options); break;
      case FamilyId::kQseries: qseries_checks(out, n, options); break;
      default: cigler_checks(out, n, options, family); break;
    }
  } catch (const std::exception& e) {
    out.expect("exception", false, e.what());
  }
  return out.take();
}

VerifyReport verify_family(FamilyId family, std::size_t n_min, std::size_t n_max,
                           const VerifyOptions& options) {
  if (n_min < 1 || n_min > n_max) {
    throw std::invalid_argument("size range must satisfy 1 <= n-min <= n-max");
  }
  VerifyReport report;
  report.family = std::string(family_name(family));
  for (std::size_t n = n_min; n <= n_max; ++n) report.sizes.push_back(n);

  std::vector<std::vector<Check>> per_size(report.sizes.size());
  const auto count = static_cast<std::int64_t>(report.sizes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t idx = 0; idx < count; ++idx) {
    per_size[idx] = run_checks(family, report.sizes[idx], options);
  }
  for (auto& checks : per_size) {
    for (auto& c : checks) report.checks.push_back(std::move(c));
  }
  std::stable_sort(report.checks.begin(), report.checks.end(), [](const Check& a, const Check& b) {
    return std::tie(a.n, a.name) < std::tie(b.n, b.name);
  });
  return report;
}

VerifyReport limit_report(unsigned k_max, unsigned m_max) {
  VerifyReport report;
  report.family = "lehmer";
  std::set<std::size_t> sizes;
  for (const auto& c : lehmer::lehmer_limit_check(k_max, m_max)) {
    sizes.insert(c.n);
    report.checks.push_back({"limit z^" + std::to_string(c.k) + " q^" + std::to_string(c.m),
                             c.n, c.pass(),
                             c.pass() ? std::string{} : c.finite.str() + " != " + c.limit.str()});
  }
  report.sizes.assign(sizes.begin(), sizes.end());
  std::stable_sort(report.checks.begin(), report.checks.end(), [](const Check& a, const Check& b) {
    return std::tie(a.n, a.name) < std::tie(b.n, b.name);
  });
  return report;
}

nlohmann::ordered_json to_json(const VerifyReport& report) {
  nlohmann::ordered_json j;
  j["family"] = report.family;
  j["sizes"] = report.sizes;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["n"] = c.n;
    entry["status"] = c.pass ? "pass" : "fail";
    if (!c.detail.empty()) entry["detail"] = c.detail;
    j["checks"].push_back(std::move(entry));
  }
  j["overall"] = report.overall() ? "pass" : "fail";
  return j;
}

}  // namespace combilu::verify
