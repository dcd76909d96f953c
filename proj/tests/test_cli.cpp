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

#include "cli_runner.hpp"
#include "combilu/serialize.hpp"
#include "combilu/verify.hpp"
#include "json.hpp"
#include "report_schema.hpp"

using namespace combilu;
using combilu::testing::report_problem;
using combilu::testing::run_cli;
using verify::FamilyId;

namespace {

bool has_check(const nlohmann::json& report, const std::string& name) {
  for (const auto& c : report["checks"]) {
    if (c["name"] == name) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (auto id : verify::all_families()) CHECK(verify::parse_family(verify::family_name(id)) == id);
  CHECK_FALSE(verify::parse_family("nope").has_value());
  CHECK(verify::all_families().size() == 8);
}

TEST_CASE("emit in process") {
  CHECK(emit(FamilyId::kLehmer, EmitObject::kMatrix, 2, EmitFormat::kJson) ==
        R"({"rows":2,"cols":2,"entries":["1","sz","sz","1"]})");
  CHECK(emit(FamilyId::kCigler2, EmitObject::kDet, 1, EmitFormat::kLatex) == "X + 2");
  CHECK(emit(FamilyId::kKt, EmitObject::kLowerInverse, 1, EmitFormat::kJson) ==
        R"({"rows":1,"cols":1,"entries":["1"]})");
  CHECK(emit(FamilyId::kKt, EmitObject::kDet, 2, EmitFormat::kJson, BigRational(1)) ==
        "\"32/525\"");
  CHECK(emit(FamilyId::kCigler1, EmitObject::kDet, 2, EmitFormat::kJson) == "\"X^2 + 3*X + 1\"");
  CHECK(emit(FamilyId::kKt, EmitObject::kMatrix, 1, EmitFormat::kLatex) ==
        "\\begin{pmatrix}\n\\frac{-1}{T - 4}\n\\end{pmatrix}");
  CHECK_THROWS_AS(emit(FamilyId::kLehmer, EmitObject::kUpperInverse, 2, EmitFormat::kJson),
                  UnsupportedObject);
  CHECK_THROWS_AS(emit(FamilyId::kQseries, EmitObject::kMatrix, 2, EmitFormat::kJson),
                  UnsupportedObject);
  CHECK_THROWS_AS(emit(FamilyId::kCigler1, EmitObject::kMatrix, 2, EmitFormat::kJson, BigRational(1)),
                  UnsupportedObject);
}

TEST_CASE("cli emit") {
  const auto lehmer = run_cli("emit --family lehmer --object matrix --n 2 --format json");
  CHECK(lehmer.exit_code == 0);
  CHECK(lehmer.out == "{\"rows\":2,\"cols\":2,\"entries\":[\"1\",\"sz\",\"sz\",\"1\"]}\n");
  const auto det = run_cli("emit --family cigler2 --object det --n 1 --format latex");
  CHECK(det.exit_code == 0);
  CHECK(det.out == "X + 2\n");
  CHECK(run_cli("emit --family lehmer --object Linv --n 2").exit_code == 2);
  CHECK(run_cli("emit --family kt --object L --n 2 --t 2").exit_code == 2);
  CHECK(run_cli("emit --family kt --object L --n 17").exit_code == 2);
  CHECK(run_cli("emit --family kt --object L --n 2 --format yaml").exit_code == 2);
}

TEST_CASE("cli verify") {
  const auto lehmer = run_cli("verify --family lehmer --n-min 1 --n-max 5");
  REQUIRE(lehmer.exit_code == 0);
  const auto report = nlohmann::json::parse(lehmer.out);
  CHECK(report_problem(report) == "");
  CHECK(report["sizes"] == nlohmann::json({1, 2, 3, 4, 5}));
  CHECK(has_check(report, "L*U = M"));
  CHECK(has_check(report, "oracle det = lambda(n)"));

  const auto kt = nlohmann::json::parse(run_cli("verify --family kt --n-min 1 --n-max 1").out);
  CHECK(report_problem(kt) == "");
  bool saw_chain = false;
  for (const auto& c : kt["checks"]) {
    if (c["name"] == "det chain expressions agree") {
      saw_chain = true;
      CHECK(c["detail"] == "D = 1/3");
    }
  }
  CHECK(saw_chain);

  const auto at_t = run_cli("verify --family kt_t --n-min 1 --n-max 3 --t 1/3");
  CHECK(at_t.exit_code == 0);
  CHECK(report_problem(nlohmann::json::parse(at_t.out)) == "");
}

TEST_CASE("cli usage errors exit with 2") {
  CHECK(run_cli("verify --family cigler1 --n-min 0 --n-max 0").exit_code == 2);
  CHECK(run_cli("verify --family cigler1 --n-min 4 --n-max 2").exit_code == 2);
  CHECK(run_cli("verify --family nope").exit_code == 2);
  CHECK(run_cli("verify --family lehmer --n-max 40").exit_code == 2);
  CHECK(run_cli("verify --family kt --t 0").exit_code == 2);
  CHECK(run_cli("verify --family kt --t 2").exit_code == 2);
  CHECK(run_cli("verify --family lehmer --t 1").exit_code == 2);
  CHECK(run_cli("limit --k-max 100").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("cli limit") {
  const auto small = run_cli("limit --k-max 0 --m-max 3");
  CHECK(small.exit_code == 0);
  CHECK(report_problem(nlohmann::json::parse(small.out)) == "");
  const auto larger = run_cli("limit --k-max 2 --m-max 5");
  CHECK(larger.exit_code == 0);
  CHECK(report_problem(nlohmann::json::parse(larger.out)) == "");
}

TEST_CASE("a corrupted closed form is reported") {
  const auto bad = run_cli("verify --family cigler2 --n-min 1 --n-max 3 --inject-fault");
  CHECK(bad.exit_code == 1);
  const auto report = nlohmann::json::parse(bad.out);
  CHECK(report_problem(report) == "");
  CHECK(report["overall"] == "fail");
}

TEST_CASE("output is byte-deterministic") {
  const auto a = run_cli("verify --family cigler1_t --n-min 1 --n-max 6");
  const auto b = run_cli("verify --family cigler1_t --n-min 1 --n-max 6");
  CHECK(a.out == b.out);
  CHECK(run_cli("emit --family kt --object Uinv --n 3 --format latex").out ==
        run_cli("emit --family kt --object Uinv --n 3 --format latex").out);
}
