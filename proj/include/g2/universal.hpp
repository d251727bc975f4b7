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

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2/appendix_tables.hpp"
#include "g2/binary_form.hpp"
#include "g2/error.hpp"
#include "g2/invariants.hpp"
#include "g2/mestre.hpp"
#include "g2/quad_ext.hpp"
#include "g2/squarefree.hpp"

namespace g2 {

/// d^2 = I30 / (2^7 3^9 5^10) * (9 I2^5 + 700 I2^3 I4 - 3600 I2^2 I6
///        - 12400 I2 I4^2 + 48000 I4 I6 + 10800000 I10).
/// The second factor is -2^8 3^9 5^10 D, so this equals -2 D I30.
inline Rational d_squared_from_igusa(const IgusaInvariants<Rational>& i) {
  Rational i30 = i30_from_clebsch(clebsch_from_igusa(i));
  const Rational& I2 = i.I2;
  const Rational& I4 = i.I4;
  const Rational& I6 = i.I6;
  Rational I2_2 = I2 * I2;
  Rational I2_3 = I2_2 * I2;
  Rational second = 9 * I2_3 * I2_2 + 700 * I2_3 * I4 - 3600 * I2_2 * I6 - 12400 * I2 * I4 * I4 + 48000 * I4 * I6 +
                    10800000 * i.I10;
  Rational scale(mpz_class(1), mpz_class(128) * mpz_class(19683) * mpz_class(9765625));
  return i30 * scale * second;
}

/// The factor of d^2 that vanishes on the D = 0 locus, in absolute invariants.
inline Rational d_locus_quadric(const Rational& j1, const Rational& j2, const Rational& j3) {
  return 9 * j1 * j1 + 700 * j2 * j1 - 3600 * j3 * j1 - 12400 * j2 * j2 + 48000 * j2 * j3 + 10800000 * j1;
}

/// d^2 in absolute invariants. Equals d_squared_from_igusa at the
/// representative with I2 = 1, i.e. d_squared_from_igusa(I) / I2^20.
inline Rational d_squared_from_absolute(const AbsoluteInvariants<Rational>& j) {
  const Rational& j1 = j.j1;
  const Rational& j2 = j.j2;
  const Rational& j3 = j.j3;
  if (j1.is_zero()) throw DegenerateError(Locus::formula_pole, "formula pole at j1 = 0");
  auto p = [](const Rational& x, unsigned e) { return pow(x, e); };
  Rational big =
      p(j2, 4) * p(j1, 3) - 12 * p(j2, 3) * j3 * p(j1, 3) + 54 * p(j2, 2) * p(j3, 2) * p(j1, 3) -
      108 * j2 * p(j3, 3) * p(j1, 3) + 81 * p(j3, 4) * p(j1, 3) + 78 * p(j2, 5) * p(j1, 2) -
      1332 * p(j2, 4) * j3 * p(j1, 2) + 8910 * p(j2, 3) * p(j3, 2) * p(j1, 2) - 29376 * p(j2, 2) * p(j3, 3) * p(j1, 2) +
      47952 * j2 * p(j3, 4) * p(j1, 2) - 31104 * p(j3, 5) * p(j1, 2) - 159 * p(j2, 6) * j1 +
      1728 * p(j2, 5) * j3 * j1 - 6048 * p(j2, 4) * p(j3, 2) * j1 + 6912 * p(j2, 3) * p(j3, 3) * j1 + 80 * p(j2, 7) -
      384 * p(j2, 6) * j3 - 972 * p(j2, 2) * p(j1, 4) + 5832 * j2 * j3 * p(j1, 4) - 8748 * p(j3, 2) * p(j1, 4) -
      77436 * p(j2, 3) * p(j1, 3) + 870912 * p(j2, 2) * j3 * p(j1, 3) - 3090960 * j2 * p(j3, 2) * p(j1, 3) +
      3499200 * p(j3, 3) * p(j1, 3) + 592272 * p(j2, 4) * p(j1, 2) - 4743360 * p(j2, 3) * j3 * p(j1, 2) +
      9331200 * p(j2, 2) * p(j3, 2) * p(j1, 2) - 41472 * p(j2, 5) * j1 + 236196 * p(j1, 5) +
      19245600 * j2 * p(j1, 4) - 104976000 * j3 * p(j1, 4) - 507384000 * p(j2, 2) * p(j1, 3) +
      Rational(mpz_class("2099520000")) * j2 * j3 * p(j1, 3) + Rational(mpz_class("125971200000")) * p(j1, 4);
  mpz_class den = 1;
  mpz_class f;
  mpz_ui_pow_ui(f.get_mpz_t(), 2, 22);
  den *= f;
  mpz_ui_pow_ui(f.get_mpz_t(), 3, 36);
  den *= f;
  mpz_ui_pow_ui(f.get_mpz_t(), 5, 30);
  den *= f;
  return big * d_locus_quadric(j1, j2, j3) / (Rational(den) * p(j1, 9));
}

/// h(j1, j2) = 3000 + j1/400 + 41 j2/180 - (j2/9)(11 j2 - 1080000)/(3 j1 - 40 j2).
/// (j1, j2, h) lies on the D = 0 locus.
inline Rational h_locus(const Rational& j1, const Rational& j2) {
  Rational pole = 3 * j1 - 40 * j2;
  if (pole.is_zero()) throw DegenerateError(Locus::formula_pole, "formula pole at 3*j1 = 40*j2");
  return Rational(3000) + j1 / Rational(400) + Rational(41) * j2 / Rational(180) -
         (j2 / Rational(9)) * (Rational(11) * j2 - Rational(1080000)) / pole;
}

/// Raw coefficients of the universal sextic for a chosen root d, highest
/// x-power first: entry 6-i is
///   18^-floor((i+1)/2) kappa_i (delta_i (54D)^floor((i+1)/2)
///                               + 54 * 3^e_i * epsilon_i (54D)^floor(i/2) * d).
/// Polynomial in (A, B, C, D, d), so this never fails.
inline BinaryForm<QuadExt> appendix_sextic(const ClebschInvariants<Rational>& c, const QuadExt& d) {
  std::vector<QuadExt> coeffs(7);
  Rational d54 = 54 * c.D;
  for (int i = 0; i <= 6; ++i) {
    int hi = (i + 1) / 2;
    int lo = i / 2;
    Rational scale = appendix::kappa(i, c) / pow(Rational(18), static_cast<unsigned>(hi));
    Rational dpart = appendix::delta(i, c) * pow(d54, static_cast<unsigned>(hi));
    Rational epart = 54 * pow(Rational(3), static_cast<unsigned>(appendix::exponent_e(i))) * appendix::epsilon(i, c) *
                     pow(d54, static_cast<unsigned>(lo));
    coeffs[static_cast<std::size_t>(6 - i)] = QuadExt(scale * dpart) + QuadExt(scale * epart) * d;
  }
  return BinaryForm<QuadExt>(std::move(coeffs));
}

struct FieldReport {
  bool moduli_field_is_definition_field = true;
  std::string extension = "Q";
};

/// C+ and C- over Q(d), d^2 = -2 D I30.
struct CurvePair {
  Rational d_squared;
  mpz_class radicand;  // 0 when d is rational
  QuadExt d;
  BinaryForm<QuadExt> plus;
  BinaryForm<QuadExt> minus;
  FieldReport field;
  bool degree_drop = false;  // effective degree below 6 (branch point at infinity)
};

inline std::string extension_name(const mpz_class& s) { return s == 0 ? "Q" : "Q(sqrt(" + s.get_str() + "))"; }

inline FieldReport field_report_for(const Rational& d_squared, const QuadExt& d) {
  FieldReport r;
  r.moduli_field_is_definition_field = is_rational_square(d_squared);
  r.extension = r.moduli_field_is_definition_field ? "Q" : extension_name(d.radicand());
  return r;
}

/// Formal root of d^2 = -2 D I30, decomposed factor by factor.
inline QuadExt d_root(const ClebschInvariants<Rational>& c, const Rational& i30) {
  Rational d2 = Rational(-2) * c.D * i30;
  if (d2.is_zero()) return QuadExt(0);
  return formal_sqrt(d2, {Rational(-2), c.D, i30});
}

/// The closed-form universal pair. Fails only when both sextics vanish
/// identically.
inline CurvePair appendix_curve_pair(const ClebschInvariants<Rational>& c) {
  CurvePair pair;
  Rational i30 = i30_from_clebsch(c);
  pair.d_squared = Rational(-2) * c.D * i30;
  pair.d = d_root(c, i30);
  pair.radicand = pair.d.is_rational() ? mpz_class(0) : pair.d.radicand();
  pair.plus = appendix_sextic(c, pair.d);
  pair.minus = appendix_sextic(c, -pair.d);
  if (pair.plus.is_zero() && pair.minus.is_zero()) {
    throw DegenerateError(Locus::appendix_degenerate, "degenerate moduli point for appendix formula");
  }
  pair.field = field_report_for(pair.d_squared, pair.d);
  pair.degree_drop = pair.plus.effective_degree() < 6 || pair.minus.effective_degree() < 6;
  return pair;
}

/// The same pair built by intersecting the conic and the cubic.
inline CurvePair mestre_curve_pair(const ClebschInvariants<Rational>& c) {
  ConicModel model(c);
  CubicModel cubic = cubic_coefficients(c);
  CurvePair pair;
  pair.d_squared = model.d_squared;
  pair.d = model.d;
  pair.radicand = pair.d.is_rational() ? mpz_class(0) : pair.d.radicand();
  pair.plus = pullback_sextic(model, cubic, Branch::plus);
  pair.minus = pullback_sextic(model, cubic, Branch::minus);
  pair.field = field_report_for(pair.d_squared, pair.d);
  pair.degree_drop = pair.plus.effective_degree() < 6 || pair.minus.effective_degree() < 6;
  return pair;
}

/// If g = lambda f for one nonzero lambda, returns lambda. Decided by exact
/// cross-multiplication against a pivot coefficient.
template <Field F>
std::optional<F> proportionality_scalar(const BinaryForm<F>& f, const BinaryForm<F>& g) {
  if (f.degree() != g.degree()) return std::nullopt;
  std::optional<std::size_t> pivot;
  for (std::size_t k = 0; k <= f.degree(); ++k) {
    if (f[k].is_zero() != g[k].is_zero()) return std::nullopt;
    if (!pivot && !f[k].is_zero()) pivot = k;
  }
  if (!pivot) return std::nullopt;
  const F& fp = f[*pivot];
  const F& gp = g[*pivot];
  for (std::size_t k = 0; k <= f.degree(); ++k) {
    if (!(f[k] * gp == g[k] * fp)) return std::nullopt;
  }
  return gp / fp;
}

struct ClassificationReport {
  bool i10_zero = false;
  bool i2_zero = false;
  bool i30_zero = false;
  bool d_clebsch_zero = false;
  Rational d_squared;
  bool d_squared_is_square = false;
  std::optional<mpz_class> radicand;  // empty if the radicand could not be certified
  std::string minimal_field;
};

/// Total: never throws for a valid moduli point.
inline ClassificationReport classify(const ModuliPoint& p) {
  ClassificationReport r;
  const auto& c = p.clebsch();
  r.i10_zero = p.igusa().I10.is_zero();
  r.i2_zero = p.igusa().I2.is_zero();
  r.i30_zero = p.i30().is_zero();
  r.d_clebsch_zero = c.D.is_zero();
  r.d_squared = Rational(-2) * c.D * p.i30();
  r.d_squared_is_square = is_rational_square(r.d_squared);
  if (r.d_squared_is_square) {
    r.radicand = mpz_class(0);
    r.minimal_field = "Q";
    return r;
  }
  try {
    QuadExt d = d_root(c, p.i30());
    r.radicand = d.radicand();
    r.minimal_field = extension_name(d.radicand());
  } catch (const UnfactoredRadicand&) {
    r.minimal_field = "Q(sqrt(" + r.d_squared.str() + "))";
  }
  return r;
}

}  // namespace g2
