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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace combilu {

class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& what = "division by zero")
      : std::domain_error(what) {}
};

class VariableMismatch : public std::invalid_argument {
 public:
  explicit VariableMismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Raised by Doolittle elimination when the pivot at `step` (0-based)
/// vanishes. No row exchange is attempted.
class ZeroPivot : public std::domain_error {
 public:
  explicit ZeroPivot(std::size_t step)
      : std::domain_error("zero pivot at elimination step " +
                          std::to_string(step)),
        step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

class SingularMatrix : public std::domain_error {
 public:
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

class DenominatorVanishesAtZero : public std::domain_error {
 public:
  DenominatorVanishesAtZero()
      : std::domain_error(
            "denominator has zero constant term; no power series expansion") {}
};

}  // namespace combilu
