// Copyright 2026 The g2pair Authors
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

// JSON views of the library types. Needs nlohmann/json on the include path.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "g2/invariants.hpp"
#include "g2/mestre.hpp"
#include "g2/quad_ext.hpp"
#include "g2/rational.hpp"
#include "g2/siegel.hpp"
#include "g2/universal.hpp"

namespace g2::json {

using nlohmann::json;

inline json to_json(const Rational& r) { return r.str(); }

/// {"a": "p/q", "b": "p/q", "s": integer}; s is 0 for a rational value.
inline json to_json(const QuadExt& x) {
  json out;
  out["a"] = x.rational_part().str();
  out["b"] = x.radical_part().str();
  mpz_class s = x.is_rational() ? mpz_class(0) : x.radicand();
  if (s.fits_slong_p()) {
    out["s"] = s.get_si();
  } else {
    out["s"] = s.get_str();
  }
  return out;
}

template <Field F>
json coefficients(const BinaryForm<F>& f) {
  json arr = json::array();
  for (const auto& c : f.coefficients()) arr.push_back(to_json(c));
  return arr;
}

/// {"degree": n, "coefficients": [...]} with the leading x-power first.
template <Field F>
json to_json(const BinaryForm<F>& f) {
  return {{"degree", f.degree()}, {"coefficients", coefficients(f)}};
}

inline json to_json(const IgusaInvariants<Rational>& i) {
  return {{"I2", i.I2.str()}, {"I4", i.I4.str()}, {"I6", i.I6.str()}, {"I10", i.I10.str()}};
}

inline json to_json(const ClebschInvariants<Rational>& c) {
  return {{"A", c.A.str()}, {"B", c.B.str()}, {"C", c.C.str()}, {"D", c.D.str()}};
}

/// Flat report: I2..I10, A..D, I30 and j1..j3, the latter replaced by a
/// "degenerate" note when I10 = 0 or I2 = 0.
inline json to_json(const ModuliPoint& p) {
  json out = to_json(p.igusa());
  out.update(to_json(p.clebsch()));
  out["I30"] = p.i30().str();
  if (auto why = p.degenerate_reason()) {
    out["degenerate"] = *why;
  } else {
    out["j1"] = p.absolute()->j1.str();
    out["j2"] = p.absolute()->j2.str();
    out["j3"] = p.absolute()->j3.str();
  }
  return out;
}

inline json to_json(const SymMatrix3<Rational>& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.str());
    rows.push_back(r);
  }
  return rows;
}

inline json to_json(const ConicModel& m) {
  return {{"matrix", to_json(m.matrix)}, {"d2", m.d_squared.str()}, {"d", to_json(m.d)}};
}

inline json to_json(const CubicModel& c) {
  json out;
  static const char* names[] = {"111", "112", "113", "122", "123", "133", "222", "223", "233", "333"};
  for (const char* n : names) out[std::string("a") + n] = c.at(n[0] - '0', n[1] - '0', n[2] - '0').str();
  return out;
}

inline json to_json(const FieldReport& f) { return f.extension; }

inline json to_json(const CurvePair& p) {
  json out;
  out["d2"] = p.d_squared.str();
  out["s"] = p.radicand.fits_slong_p() ? json(p.radicand.get_si()) : json(p.radicand.get_str());
  out["plus"] = coefficients(p.plus);
  out["minus"] = coefficients(p.minus);
  out["field"] = p.field.extension;
  out["flags"] = {{"moduli_field_is_definition_field", p.field.moduli_field_is_definition_field},
                  {"degree_drop", p.degree_drop},
                  {"d_zero", p.d.is_zero()}};
  return out;
}

inline json to_json(const ClassificationReport& r) {
  json out;
  out["i10_zero"] = r.i10_zero;
  out["i2_zero"] = r.i2_zero;
  out["i30_zero"] = r.i30_zero;
  out["d_clebsch_zero"] = r.d_clebsch_zero;
  out["d2"] = r.d_squared.str();
  out["d_squared_is_square"] = r.d_squared_is_square;
  out["minimal_field"] = r.minimal_field;
  if (r.radicand) {
    out["s"] = r.radicand->fits_slong_p() ? json(r.radicand->get_si()) : json(r.radicand->get_str());
  } else {
    out["s"] = nullptr;
  }
  return out;
}

inline json to_json(const SiegelFormValues& v) {
  json out = {{"psi4", v.psi4.str()}, {"psi6", v.psi6.str()}, {"chi10", v.chi10.str()}, {"chi12", v.chi12.str()}};
  if (v.chi35_squared) out["chi35_squared"] = v.chi35_squared->str();
  return out;
}

inline json to_json(const SiegelRatios& r) {
  return {{"x1", r.x1.str()}, {"x2", r.x2.str()}, {"x3", r.x3.str()},
          {"y1", r.y1.str()}, {"y2", r.y2.str()}, {"y3", r.y3.str()}};
}

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
  if (!j.is_string()) throw InputError("expected a rational string, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

inline QuadExt quad_ext_from_json(const json& j) {
  if (!j.is_object()) return QuadExt(rational_from_json(j));
  mpz_class s = j.at("s").is_string() ? mpz_class(j.at("s").get<std::string>())
                                      : mpz_class(std::to_string(j.at("s").get<long long>()));
  return QuadExt(rational_from_json(j.at("a")), rational_from_json(j.at("b")), s);
}

}  // namespace g2::json
