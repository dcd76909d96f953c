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

#include "combilu/serialize.hpp"

#include <sstream>
#include <variant>

#include "combilu/cigler_family.hpp"
#include "combilu/kt_family.hpp"
#include "combilu/lehmer_family.hpp"
#include "json.hpp"

namespace combilu {

namespace {

using verify::FamilyId;
using Emitted = std::variant<FieldMatrix, RatFunc, MultiPoly>;

FieldMatrix pick(const kt::KTFactorization& f, EmitObject object) {
  switch (object) {
    case EmitObject::kMatrix: return f.matrix;
    case EmitObject::kLower: return f.lower;
    case EmitObject::kUpper: return f.upper;
    case EmitObject::kLowerInverse: return f.lower_inverse;
    default: return f.upper_inverse;
  }
}

FieldMatrix pick(const cigler::CiglerFactorization& f, EmitObject object) {
  switch (object) {
    case EmitObject::kMatrix: return f.matrix;
    case EmitObject::kLower: return f.lower;
    default: return f.upper;
  }
}

Emitted build(FamilyId family, EmitObject object, std::size_t n,
              const std::optional<BigRational>& t) {
  const bool inverse = object == EmitObject::kLowerInverse || object == EmitObject::kUpperInverse;
  const bool kt_family = family == FamilyId::kKt || family == FamilyId::kKtT;
  if (family == FamilyId::kQseries) {
    throw UnsupportedObject("the qseries family has no matrices to emit");
  }
  if (inverse && !kt_family) {
    throw UnsupportedObject("factor inverses are only available for kt and kt_t");
  }
  if (t && !kt_family) throw UnsupportedObject("--t applies to kt families only");

  if (kt_family) {
    const kt::KTConfig cfg = t ? kt::KTConfig::specialized(n, *t) : kt::KTConfig::symbolic(n);
    const auto f = family == FamilyId::kKt ? kt::kt_factorization(cfg) : kt::kt_transposed(cfg);
    if (object != EmitObject::kDet) return pick(f, object);
    RatFunc det = RatFunc::one(kt::t_ring());
    for (std::size_t j = 0; j < n; ++j) det *= f.upper(j, j);
    return det;
  }
  if (family == FamilyId::kLehmer) {
    const lehmer::LehmerConfig cfg(n);
    switch (object) {
      case EmitObject::kMatrix: return lehmer::lehmer_matrix(cfg);
      case EmitObject::kLower: return lehmer::lehmer_L(cfg);
      case EmitObject::kUpper: return lehmer::lehmer_U(cfg);
      default: return lehmer::lehmer_det(cfg);
    }
  }
  cigler::CiglerFactorization f;
  switch (family) {
    case FamilyId::kCigler1: f = cigler::cigler1(n); break;
    case FamilyId::kCigler1T: f = cigler::cigler1_transposed(n); break;
    case FamilyId::kCigler2: f = cigler::cigler2(n); break;
    default: f = cigler::cigler2_transposed(n); break;
  }
  if (object != EmitObject::kDet) return pick(f, object);
  const bool first = family == FamilyId::kCigler1 || family == FamilyId::kCigler1T;
  return cigler::cigler_det(first ? cigler::Family::kFirst : cigler::Family::kSecond, n);
}

}  // namespace

std::optional<EmitObject> parse_emit_object(std::string_view name) {
  if (name == "matrix") return EmitObject::kMatrix;
  if (name == "L") return EmitObject::kLower;
  if (name == "U") return EmitObject::kUpper;
  if (name == "Linv") return EmitObject::kLowerInverse;
  if (name == "Uinv") return EmitObject::kUpperInverse;
  if (name == "det") return EmitObject::kDet;
  return std::nullopt;
}

std::optional<EmitFormat> parse_emit_format(std::string_view name) {
  if (name == "json") return EmitFormat::kJson;
  if (name == "latex") return EmitFormat::kLatex;
  return std::nullopt;
}

std::string matrix_json(const FieldMatrix& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : m.entries()) j["entries"].push_back(e.str());
  return j.dump();
}

std::string matrix_latex(const FieldMatrix& m) {
  std::ostringstream os;
  os << "\\begin{pmatrix}\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) os << " & ";
      os << m(i, j).latex();
    }
    if (i + 1 < m.rows()) os << " \\\\";
    os << "\n";
  }
  os << "\\end{pmatrix}";
  return os.str();
}

std::string emit(verify::FamilyId family, EmitObject object, std::size_t n,
                 EmitFormat format, const std::optional<BigRational>& t) {
  const Emitted value = build(family, object, n, t);
  const bool json = format == EmitFormat::kJson;
  if (const auto* m = std::get_if<FieldMatrix>(&value)) {
    return json ? matrix_json(*m) : matrix_latex(*m);
  }
  const std::string text = std::visit(
      [json](const auto& v) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, FieldMatrix>) {
          return {};
        } else {
          return json ? v.str() : v.latex();
        }
      },
      value);
  return json ? nlohmann::json(text).dump() : text;
}

}  // namespace combilu
