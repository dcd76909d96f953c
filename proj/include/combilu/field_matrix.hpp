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
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "combilu/rat_func.hpp"

namespace combilu {

/// Dense row-major matrix of rational functions. Storage is 0-based.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(VariableSet vars, std::size_t rows, std::size_t cols);

  static FieldMatrix identity(VariableSet vars, std::size_t n);
  /// Fills entry (i, j) from `entry(i, j)`, 0-based.
  static FieldMatrix generate(
      VariableSet vars, std::size_t rows, std::size_t cols,
      const std::function<RatFunc(std::size_t, std::size_t)>& entry);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const VariableSet& variables() const { return vars_; }

  RatFunc& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const RatFunc& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const std::vector<RatFunc>& entries() const { return entries_; }

  FieldMatrix transpose() const;
  FieldMatrix substitute(std::size_t var, const BigRational& value) const;

  bool is_unit_lower_triangular() const;
  bool is_upper_triangular() const;

  /// First (row, col) where the matrices differ; nullopt when equal.
  /// Matrices of different shape differ at (0, 0).
  std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(
      const FieldMatrix& other) const;

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return !a.first_mismatch(b).has_value();
  }

 private:
  VariableSet vars_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RatFunc> entries_;
};

}  // namespace combilu
