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

#include <optional>
#include <string>

#include "g2/error.hpp"
#include "g2/invariants.hpp"
#include "g2/rational.hpp"

namespace g2 {

/// Formal values of the generators psi4, psi6, chi10, chi12. Nothing here is
/// evaluated analytically; these are plugged into polynomial identities.
struct SiegelFormValues {
  Rational psi4, psi6, chi10, chi12;
  std::optional<Rational> chi35_squared;
};

namespace detail {

inline Rational pp(unsigned base, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return Rational(r);
}

}  // namespace detail

/// I2 = -24 chi12/chi10, I4 = 4 psi4, I6 = -(8/3) psi6 - 32 psi4 chi12/chi10,
/// I10 = -2^14 chi10.
inline IgusaInvariants<Rational> igusa_from_siegel(const SiegelFormValues& v) {
  if (v.chi10.is_zero()) throw DegenerateError(Locus::h1_locus, "H1 locus: product of elliptic curves (chi10 = 0)");
  Rational ratio = v.chi12 / v.chi10;
  return {Rational(-24) * ratio, Rational(4) * v.psi4, Rational(-8, 3) * v.psi6 - Rational(32) * v.psi4 * ratio,
          -detail::pp(2, 14) * v.chi10};
}

/// The degree-50 bracket whose vanishing cuts out H4; it equals
/// Q = 2^12 3^9 chi35^2 / chi10.
inline Rational q_polynomial(const SiegelFormValues& v) {
  using detail::pp;
  const Rational& p4 = v.psi4;
  const Rational& p6 = v.psi6;
  const Rational& c10 = v.chi10;
  const Rational& c12 = v.chi12;
  auto P = [](const Rational& x, unsigned e) { return pow(x, e); };
  Rational r = pp(2, 24) * pp(3, 15) * P(c12, 5);
  r -= pp(2, 13) * pp(3, 9) * P(p4, 3) * P(c12, 4);
  r -= pp(2, 13) * pp(3, 9) * P(p6, 2) * P(c12, 4);
  r += pp(3, 3) * P(p4, 6) * P(c12, 3);
  r -= 2 * pp(3, 3) * P(p4, 3) * P(p6, 2) * P(c12, 3);
  r -= pp(2, 14) * pp(3, 8) * P(p4, 2) * p6 * c10 * P(c12, 3);
  r -= pp(2, 23) * pp(3, 12) * pp(5, 2) * p4 * P(c10, 2) * P(c12, 3);
  r += pp(3, 3) * P(p6, 4) * P(c12, 3);
  r += pp(2, 11) * pp(3, 6) * 37 * P(p4, 4) * P(c10, 2) * P(c12, 2);
  r += pp(2, 11) * pp(3, 6) * 5 * 7 * p4 * P(p6, 2) * P(c10, 2) * P(c12, 2);
  r -= pp(2, 23) * pp(3, 9) * pp(5, 3) * p6 * P(c10, 3) * P(c12, 2);
  r -= pp(3, 2) * P(p4, 7) * P(c10, 2) * c12;
  r += 2 * pp(3, 2) * P(p4, 4) * P(p6, 2) * P(c10, 2) * c12;
  r += pp(2, 11) * pp(3, 5) * 5 * 19 * P(p4, 3) * p6 * P(c10, 3) * c12;
  r += pp(2, 20) * pp(3, 8) * pp(5, 3) * 11 * P(p4, 2) * P(c10, 4) * c12;
  r -= pp(3, 2) * p4 * P(p6, 4) * P(c10, 2) * c12;
  r += pp(2, 11) * pp(3, 5) * pp(5, 2) * P(p6, 3) * P(c10, 3) * c12;
  r -= 2 * P(p4, 6) * p6 * P(c10, 3);
  r -= pp(2, 12) * pp(3, 4) * P(p4, 5) * P(c10, 4);
  r += pp(2, 2) * P(p4, 3) * P(p6, 3) * P(c10, 3);
  r += pp(2, 12) * pp(3, 4) * pp(5, 2) * P(p4, 2) * P(p6, 2) * P(c10, 4);
  r += pp(2, 21) * pp(3, 7) * pp(5, 4) * p4 * p6 * P(c10, 5);
  r -= 2 * P(p6, 5) * P(c10, 3);
  r += pp(2, 32) * pp(3, 9) * pp(5, 5) * P(c10, 6);
  return r;
}

/// chi35^2 = chi10 * Q / (2^12 3^9).
inline Rational chi35_squared_from_generators(const SiegelFormValues& v) {
  return v.chi10 * q_polynomial(v) / (detail::pp(2, 12) * detail::pp(3, 9));
}

struct SiegelRatios {
  Rational x1, x2, x3, y1, y2, y3;
};

/// x1 = psi4 chi10^2/chi12^2, x2 = psi6 chi10^3/chi12^3, x3 = chi10^6/chi12^5,
/// y1 = x1^3/x3, y2 = x2^2/x3, y3 = x1^2 x2/x3.
inline SiegelRatios siegel_ratios(const SiegelFormValues& v) {
  if (v.chi12.is_zero()) throw DegenerateError(Locus::zero_divisor, "chi12 vanishes: ratios x1, x2, x3 undefined");
  SiegelRatios r;
  r.x1 = v.psi4 * pow(v.chi10, 2) / pow(v.chi12, 2);
  r.x2 = v.psi6 * pow(v.chi10, 3) / pow(v.chi12, 3);
  r.x3 = pow(v.chi10, 6) / pow(v.chi12, 5);
  if (r.x3.is_zero()) throw DegenerateError(Locus::zero_divisor, "x3 vanishes (chi10 = 0): ratios y1, y2, y3 undefined");
  r.y1 = pow(r.x1, 3) / r.x3;
  r.y2 = pow(r.x2, 2) / r.x3;
  r.y3 = pow(r.x1, 2) * r.x2 / r.x3;
  return r;
}

/// The representative [1 : x1/144 : x2/5184 + x1/432 : x3/486] of the moduli
/// point, valid where I2 != 0.
inline IgusaInvariants<Rational> weighted_coordinates(const SiegelFormValues& v) {
  if (v.chi10.is_zero()) throw DegenerateError(Locus::h1_locus, "H1 locus: product of elliptic curves (chi10 = 0)");
  SiegelRatios r = siegel_ratios(v);
  return {Rational(1), r.x1 / Rational(144), r.x2 / Rational(5184) + r.x1 / Rational(432), r.x3 / Rational(486)};
}

/// The weighted point [24(3 r chi12) : 36 psi4 (r chi10)^2 :
/// 72(4 psi4 (3 r chi12) + psi6 r chi10)(r chi10)^2 : 4 (r chi10)^6].
/// It represents igusa_from_siegel(v) only for r = 2^12 3^5.
inline IgusaInvariants<Rational> igusa_projective_display(const SiegelFormValues& v, const Rational& r) {
  Rational rc10 = r * v.chi10;
  Rational rc12 = Rational(3) * r * v.chi12;
  return {Rational(24) * rc12, Rational(36) * v.psi4 * rc10 * rc10,
          Rational(72) * (Rational(4) * v.psi4 * rc12 + v.psi6 * rc10) * rc10 * rc10, Rational(4) * pow(rc10, 6)};
}

/// 250 chi10^5 psi4 psi6 + 675 chi10^4 chi12 psi4^2 + 86400000 chi10^6
///   - 2700 chi10^3 chi12^2 psi6 - 13500 chi10^2 chi12^3 psi4 + 34992 chi12^5.
/// For chi10 != 0 it relates to the Clebsch D of igusa_from_siegel(v) by
///   D = 2^3 / (3^9 5^10) * quintic / chi10^5.
inline Rational d_locus_quintic(const SiegelFormValues& v) {
  const Rational& p4 = v.psi4;
  const Rational& p6 = v.psi6;
  const Rational& c10 = v.chi10;
  const Rational& c12 = v.chi12;
  return 250 * pow(c10, 5) * p4 * p6 + 675 * pow(c10, 4) * c12 * p4 * p4 + 86400000 * pow(c10, 6) -
         2700 * pow(c10, 3) * c12 * c12 * p6 - 13500 * c10 * c10 * pow(c12, 3) * p4 + 34992 * pow(c12, 5);
}

}  // namespace g2
