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

#include "combilu/field_matrix.hpp"

namespace combilu {

FieldMatrix::FieldMatrix(VariableSet vars, std::size_t rows, std::size_t cols)
    : vars_(std::move(vars)), rows_(rows), cols_(cols),
      entries_(rows * cols, RatFunc(vars_)) {}

FieldMatrix FieldMatrix::identity(VariableSet vars, std::size_t n) {
  FieldMatrix m(std::move(vars), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFunc::one(m.vars_);
  return m;
}

FieldMatrix FieldMatrix::generate(
    VariableSet vars, std::size_t rows, std::size_t cols,
    const std::function<RatFunc(std::size_t, std::size_t)>& entry) {
  FieldMatrix m(std::move(vars), rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(i, j);
  }
  return m;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(vars_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

FieldMatrix FieldMatrix::substitute(std::size_t var, const BigRational& value) const {
  FieldMatrix r(vars_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    r.entries_[k] = entries_[k].substitute(var, value);
  }
  return r;
}

bool FieldMatrix::is_unit_lower_triangular() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, i).is_one()) return false;
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (!(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool FieldMatrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < i && j < cols_; ++j) {
      if (!(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> FieldMatrix::first_mismatch(
    const FieldMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || !(vars_ == other.vars_)) {
    return std::pair<std::size_t, std::size_t>{0, 0};
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!((*this)(i, j) == other(i, j))) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

}  // namespace combilu
