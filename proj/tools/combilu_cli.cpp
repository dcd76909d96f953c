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

// combilu: build the matrix families, emit them, and run verification
// campaigns. Reports go to stdout, diagnostics to stderr.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "combilu/kt_family.hpp"
#include "combilu/serialize.hpp"
#include "combilu/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

combilu::verify::FamilyId require_family(const std::string& name) {
  auto family = combilu::verify::parse_family(name);
  if (!family) throw UsageError("unknown family '" + name + "'");
  return *family;
}

std::optional<combilu::BigRational> parse_t(const std::string& text) {
  if (text.empty()) return std::nullopt;
  try {
    return combilu::BigRational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--t: ") + e.what());
  }
}

bool is_kt(combilu::verify::FamilyId id) {
  return id == combilu::verify::FamilyId::kKt || id == combilu::verify::FamilyId::kKtT;
}

// Rejects t = 0 and poles up to size n before any work starts.
void check_t(const std::optional<combilu::BigRational>& t, std::size_t n) {
  if (t) combilu::kt::KTConfig::specialized(n, *t);
}

void check_size(std::size_t n, std::size_t cap) {
  if (n < 1) throw UsageError("sizes must be at least 1");
  if (n > cap) {
    throw UsageError("size " + std::to_string(n) + " exceeds the cap " + std::to_string(cap) +
                     " (raise it with --max-n; large symbolic sizes are slow)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact LU factorizations of combinatorial matrix families"};
  app.require_subcommand(1);

  std::string family;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::size_t max_n = 16;
  std::size_t truncation_order = 10;
  std::string t_text;
  bool inject_fault = false;

  auto* verify = app.add_subcommand("verify", "Run a family's verification suite");
  verify->add_option("--family", family, "Family name, or 'all'")->required();
  verify->add_option("--n-min", n_min, "Smallest size (default: family default)");
  verify->add_option("--n-max", n_max, "Largest size (default: family default)");
  verify->add_option("--max-n", max_n, "Size cap")->capture_default_str();
  verify->add_option("--t", t_text, "Rational t for the kt families (symbolic when omitted)");
  verify->add_option("--truncation-order", truncation_order, "q-series truncation order")
      ->capture_default_str();
  // Test hook; deliberately undocumented.
  verify->add_flag("--inject-fault", inject_fault)->group("");

  std::string object;
  std::string format = "json";
  std::size_t n = 0;
  auto* emit = app.add_subcommand("emit", "Print one object of a family");
  emit->add_option("--family", family, "Family name")->required();
  emit->add_option("--object", object, "matrix | L | U | Linv | Uinv | det")->required();
  emit->add_option("--n", n, "Size")->required();
  emit->add_option("--format", format, "json | latex")->capture_default_str();
  emit->add_option("--t", t_text, "Rational t for the kt families");
  emit->add_option("--max-n", max_n, "Size cap")->capture_default_str();

  unsigned k_max = 4;
  std::optional<unsigned> m_max;
  unsigned max_k = 10;
  unsigned max_m = 40;
  auto* limit = app.add_subcommand("limit", "Compare lambda(n) with the infinite-size determinant");
  limit->add_option("--k-max", k_max, "Largest z-degree")->capture_default_str();
  limit->add_option("--m-max", m_max, "Largest q-degree (default: --truncation-order)");
  limit->add_option("--truncation-order", truncation_order, "q-series truncation order")
      ->capture_default_str();
  limit->add_option("--max-k", max_k, "Cap on --k-max")->capture_default_str();
  limit->add_option("--max-m", max_m, "Cap on --m-max")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      combilu::verify::VerifyOptions options;
      options.t = parse_t(t_text);
      options.truncation_order = truncation_order;
      options.corrupt_closed_form = inject_fault;

      std::vector<combilu::verify::FamilyId> families;
      if (family == "all") {
        families = combilu::verify::all_families();
      } else {
        families.push_back(require_family(family));
        if (options.t && !is_kt(families.front())) {
          throw UsageError("--t applies to the kt families only");
        }
      }
      nlohmann::ordered_json reports = nlohmann::ordered_json::array();
      bool pass = true;
      for (auto id : families) {
        auto [lo, hi] = combilu::verify::default_sizes(id);
        if (!verify->get_option("--n-min")->empty()) lo = n_min;
        if (!verify->get_option("--n-max")->empty()) hi = n_max;
        check_size(lo, max_n);
        check_size(hi, max_n);
        if (lo > hi) throw UsageError("--n-min exceeds --n-max");
        if (is_kt(id)) check_t(options.t, hi);
        const auto report = combilu::verify::verify_family(id, lo, hi, options);
        pass = pass && report.overall();
        reports.push_back(combilu::verify::to_json(report));
      }
      if (families.size() == 1) {
        std::cout << reports.front().dump(2) << "\n";
      } else {
        nlohmann::ordered_json all;
        all["reports"] = std::move(reports);
        all["overall"] = pass ? "pass" : "fail";
        std::cout << all.dump(2) << "\n";
      }
      return pass ? kExitPass : kExitFail;
    }

    if (*emit) {
      const auto id = require_family(family);
      const auto obj = combilu::parse_emit_object(object);
      if (!obj) throw UsageError("unknown object '" + object + "'");
      const auto fmt = combilu::parse_emit_format(format);
      if (!fmt) throw UsageError("unknown format '" + format + "'");
      check_size(n, max_n);
      std::cout << combilu::emit(id, *obj, n, *fmt, parse_t(t_text)) << "\n";
      return kExitPass;
    }

    const unsigned m = m_max.value_or(static_cast<unsigned>(truncation_order));
    if (k_max > max_k || m > max_m) {
      throw UsageError("limit caps exceeded: k-max <= " + std::to_string(max_k) +
                       ", m-max <= " + std::to_string(max_m));
    }
    const auto report = combilu::verify::limit_report(k_max, m);
    std::cout << combilu::verify::to_json(report).dump(2) << "\n";
    return report.overall() ? kExitPass : kExitFail;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
