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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "combilu/field_matrix.hpp"
#include "combilu/verify.hpp"

namespace combilu {

enum class EmitObject { kMatrix, kLower, kUpper, kLowerInverse, kUpperInverse, kDet };
enum class EmitFormat { kJson, kLatex };

std::optional<EmitObject> parse_emit_object(std::string_view name);
std::optional<EmitFormat> parse_emit_format(std::string_view name);

class UnsupportedObject : public std::invalid_argument {
 public:
  explicit UnsupportedObject(const std::string& what) : std::invalid_argument(what) {}
};

/// {"rows":r,"cols":c,"entries":[...]} with entries row-major as strings.
std::string matrix_json(const FieldMatrix& m);
std::string matrix_latex(const FieldMatrix& m);

/// Serializes one object of a family at size n. Output is deterministic.
/// `t` applies to the kt families only. Throws UnsupportedObject for
/// pairs the family does not provide (inverses exist only for kt, kt_t).
std::string emit(verify::FamilyId family, EmitObject object, std::size_t n,
                 EmitFormat format, const std::optional<BigRational>& t = std::nullopt);

}  // namespace combilu
