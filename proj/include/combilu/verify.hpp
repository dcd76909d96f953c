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

// Per-family verification suites: each closed form is checked against the
// generic LU oracle and the identities it is supposed to satisfy.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "combilu/big_rational.hpp"
#include "json.hpp"

namespace combilu::verify {

enum class FamilyId { kKt, kKtT, kLehmer, kCigler1, kCigler1T, kCigler2, kCigler2T, kQseries };

std::string_view family_name(FamilyId family);
std::optional<FamilyId> parse_family(std::string_view name);
const std::vector<FamilyId>& all_families();

/// Size range used when none is requested.
std::pair<std::size_t, std::size_t> default_sizes(FamilyId family);

struct Check {
  std::string name;
  std::size_t n = 0;
  bool pass = false;
  std::string detail;  // empty unless there is something to say
};

struct VerifyReport {
  std::string family;
  std::vector<std::size_t> sizes;
  std::vector<Check> checks;  // sorted by (n, name)

  bool overall() const;
};

struct VerifyOptions {
  /// Rational t for the kt families; symbolic T when empty.
  std::optional<BigRational> t;
  std::size_t truncation_order = 10;
  /// Test hook: perturbs one closed-form value (a factor entry, or the Schur
  /// coefficient for qseries) so its checks fail.
  bool corrupt_closed_form = false;
};

/// All checks of one family at one size. Never throws: an exception is
/// reported as a failing check named "exception".
std::vector<Check> run_checks(FamilyId family, std::size_t n, const VerifyOptions& options);

/// Runs sizes n_min..n_max concurrently; the result is independent of
/// scheduling.
VerifyReport verify_family(FamilyId family, std::size_t n_min, std::size_t n_max,
                           const VerifyOptions& options = {});

/// Lehmer limit comparison for k <= k_max, m <= m_max as a report.
VerifyReport limit_report(unsigned k_max, unsigned m_max);

nlohmann::ordered_json to_json(const VerifyReport& report);

}  // namespace combilu::verify
