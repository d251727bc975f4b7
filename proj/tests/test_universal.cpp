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

#include <gtest/gtest.h>

#include "g2/appendix_tables.hpp"
#include "g2/universal.hpp"
#include "support.hpp"

namespace g2 {
namespace {

Rational q(const char* s) { return Rational::parse(s); }

const ClebschInvariants<Rational> kPureD{0, 0, 0, 1};

TEST(AppendixTables, ExponentsAndMultipliers) {
  const int e[] = {1, 2, 0, 0, 0, 2, 1};
  for (int i = 0; i <= 6; ++i) EXPECT_EQ(appendix::exponent_e(i), e[i]);
  ClebschInvariants<Rational> c{1, 7, 1, 1};
  const int k[] = {1, 12, 105, 360, 15, 12, 1};
  for (int i = 0; i <= 6; ++i) EXPECT_EQ(appendix::kappa(i, c), Rational(k[i]));
}

TEST(AppendixTables, TermCounts) {
  const std::size_t delta[] = {144, 107, 89, 64, 66, 50, 47};
  const std::size_t eps[] = {64, 66, 38, 43, 26, 23, 16};
  for (std::size_t i = 0; i <= 6; ++i) {
    EXPECT_EQ(appendix::kDelta[i].size(), delta[i]) << "delta " << i;
    EXPECT_EQ(appendix::kEpsilon[i].size(), eps[i]) << "epsilon " << i;
  }
}

// Weight of A^a B^b C^c D^d with A, B, C, D of weights 2, 4, 6, 10.
int weight(const appendix::Term& t) { return 2 * t.a + 4 * t.b + 6 * t.c + 10 * t.d; }

TEST(AppendixTables, EveryPolynomialIsWeightedHomogeneous) {
  const int delta[] = {70, 62, 60, 56, 58, 50, 52};
  const int eps[] = {50, 52, 40, 46, 38, 40, 32};
  for (std::size_t i = 0; i <= 6; ++i) {
    for (const auto& t : appendix::kDelta[i]) EXPECT_EQ(weight(t), delta[i]) << "delta " << i;
    for (const auto& t : appendix::kEpsilon[i]) EXPECT_EQ(weight(t), eps[i]) << "epsilon " << i;
  }
}

TEST(AppendixTables, PureDTerms) {
  EXPECT_EQ(appendix::delta(5, kPureD), Rational(-78732));
  EXPECT_EQ(appendix::epsilon(5, kPureD), Rational(8748));
  EXPECT_EQ(appendix::delta(2, kPureD), Rational(-1889568));
  EXPECT_EQ(appendix::epsilon(2, kPureD), Rational(34992));
  EXPECT_EQ(appendix::delta(0, kPureD), Rational(-136048896));
  EXPECT_EQ(appendix::epsilon(0, kPureD), Rational(839808));
}

TEST(DSquared, DocumentedExamples) {
  // I30 = 0 for x^6 - 1, D = 0 for (1,0,0,0).
  EXPECT_EQ(d_squared_from_igusa(igusa_from_sextic(RationalForm({1, 0, 0, 0, 0, 0, -1}))), Rational(0));
  EXPECT_EQ(d_squared_from_igusa(igusa_from_clebsch<Rational>({1, 2, 3, 0})), Rational(0));
  EXPECT_EQ(d_squared_from_igusa(igusa_from_clebsch(kPureD)), Rational(1));
}

TEST(DSquared, AbsoluteFormulaMatchesAtUnitI2) {
  testing::Rng rng(61);
  int checked = 0;
  while (checked < 20) {
    auto i = testing::random_igusa(rng);
    if (i.I2.is_zero()) continue;
    Rational scale = pow(i.I2, 20);
    EXPECT_EQ(d_squared_from_absolute(absolute_from_igusa(i)) * scale, d_squared_from_igusa(i));
    ++checked;
  }
}

TEST(DSquared, AbsoluteFormulaPole) {
  try {
    d_squared_from_absolute({0, 1, 2});
    FAIL();
  } catch (const DegenerateError& e) {
    EXPECT_EQ(e.locus(), Locus::formula_pole);
  }
}

TEST(DSquared, AbsoluteFormulaVanishesOnSpecialLoci) {
  auto j = absolute_from_igusa(igusa_from_sextic(RationalForm({1, 0, 0, 0, 0, 0, -1})));
  EXPECT_EQ(d_squared_from_absolute(j), Rational(0));
  testing::Rng rng(62);
  for (int k = 0; k < 20; ++k) {
    Rational j1 = testing::nonzero_rational(rng, 1000, 7), j2 = testing::small_rational(rng, 1000, 7);
    if ((3 * j1 - 40 * j2).is_zero()) continue;
    EXPECT_EQ(d_squared_from_absolute({j1, j2, h_locus(j1, j2)}), Rational(0));
  }
}

TEST(HLocus, Examples) {
  EXPECT_EQ(h_locus(800, 0), Rational(3002));
  testing::Rng rng(63);
  for (int k = 0; k < 50; ++k) {
    Rational j1 = testing::small_rational(rng, 5000, 11), j2 = testing::small_rational(rng, 5000, 11);
    if ((3 * j1 - 40 * j2).is_zero()) continue;
    EXPECT_EQ(d_locus_quadric(j1, j2, h_locus(j1, j2)), Rational(0));
  }
  EXPECT_THROW(h_locus(40, 3), DegenerateError);
}

TEST(AppendixPair, ConjugateBranchesAndRoundtrip) {
  testing::Rng rng(64);
  for (int k = 0; k < 10; ++k) {
    auto g = testing::generic_integer_sextic(rng);
    CurvePair pair = appendix_curve_pair(g.point.clebsch());
    EXPECT_TRUE(testing::is_conjugate_pair(pair.plus, pair.minus));
    EXPECT_EQ(pair.d * pair.d, QuadExt(pair.d_squared));
    EXPECT_TRUE(moduli_points_equal(g.point.igusa(), igusa_from_sextic(pair.plus)));
    EXPECT_TRUE(moduli_points_equal(g.point.igusa(), igusa_from_sextic(pair.minus)));
    EXPECT_EQ(pair.field.moduli_field_is_definition_field, is_rational_square(pair.d_squared));
  }
}

TEST(AppendixPair, MatchesConicCubicUpToTheRecordedScalar) {
  // pullback = d^3 / (2^2 3^12) * closed form, branch for branch.
  testing::Rng rng(65);
  Rational k = Rational(4) * pow(Rational(3), 12);
  for (int n = 0; n < 10; ++n) {
    auto g = testing::generic_integer_sextic(rng);
    CurvePair app = appendix_curve_pair(g.point.clebsch());
    CurvePair mes = mestre_curve_pair(g.point.clebsch());
    auto sp = proportionality_scalar(mes.plus, app.plus);
    auto sm = proportionality_scalar(mes.minus, app.minus);
    ASSERT_TRUE(sp.has_value());
    ASSERT_TRUE(sm.has_value());
    QuadExt d3 = app.d * app.d * app.d;
    EXPECT_EQ(*sp, QuadExt(k) / d3);
    EXPECT_EQ(*sm, QuadExt(k) / (-d3));
  }
}

TEST(AppendixPair, RationalWhenDSquaredIsASquare) {
  ClebschInvariants<Rational> c{-3, 0, -2, -1};
  CurvePair pair = appendix_curve_pair(c);
  EXPECT_EQ(pair.d_squared, q("361/9"));
  EXPECT_EQ(pair.field.extension, "Q");
  for (const auto& x : pair.plus.coefficients()) EXPECT_TRUE(x.is_rational());
  for (const auto& x : pair.minus.coefficients()) EXPECT_TRUE(x.is_rational());
  EXPECT_TRUE(moduli_points_equal(igusa_from_clebsch(c), igusa_from_sextic(pair.plus)));
}

TEST(AppendixPair, ExtraInvolutionCollapsesThePair) {
  // Even sextic with D != 0: I30 = 0, so d = 0 and C+ = C- over Q.
  ModuliPoint p = ModuliPoint::from_sextic(RationalForm({1, 0, 0, 0, 1, 0, 1}));
  CurvePair pair = appendix_curve_pair(p.clebsch());
  EXPECT_TRUE(pair.d.is_zero());
  EXPECT_EQ(pair.plus, pair.minus);
  EXPECT_EQ(pair.field.extension, "Q");
  EXPECT_TRUE(moduli_points_equal(p.igusa(), igusa_from_sextic(pair.plus)));
}

TEST(AppendixPair, SixthRootsOfUnityAreDegenerate) {
  ModuliPoint p = ModuliPoint::from_sextic(RationalForm({1, 0, 0, 0, 0, 0, -1}));
  EXPECT_TRUE(appendix_sextic(p.clebsch(), QuadExt(0)).is_zero());
  try {
    appendix_curve_pair(p.clebsch());
    FAIL();
  } catch (const DegenerateError& e) {
    EXPECT_EQ(e.locus(), Locus::appendix_degenerate);
    EXPECT_STREQ(e.what(), "degenerate moduli point for appendix formula");
  }
}

TEST(Classify, Examples) {
  auto v4 = classify(ModuliPoint::from_sextic(RationalForm({1, 0, 0, 0, 0, 0, -1})));
  EXPECT_TRUE(v4.i30_zero);
  EXPECT_EQ(v4.d_squared, Rational(0));
  EXPECT_EQ(v4.minimal_field, "Q");

  auto unit = classify(ModuliPoint(igusa_from_clebsch(kPureD)));
  EXPECT_FALSE(unit.i30_zero);
  EXPECT_EQ(unit.d_squared, Rational(1));
  EXPECT_TRUE(unit.d_squared_is_square);
  EXPECT_EQ(unit.minimal_field, "Q");

  auto dzero = classify(ModuliPoint(igusa_from_clebsch<Rational>({1, 2, 3, 0})));
  EXPECT_TRUE(dzero.d_clebsch_zero);
  EXPECT_EQ(dzero.minimal_field, "Q");

  auto generic = classify(ModuliPoint::from_sextic(RationalForm({1, 2, 0, -1, 0, 3, 1})));
  EXPECT_EQ(generic.minimal_field, "Q(sqrt(18245460481))");
  EXPECT_FALSE(generic.d_squared_is_square);

  auto noncurve = classify(ModuliPoint::from_sextic(RationalForm({1, 0, 0, -1, 0, 0, 0})));
  EXPECT_TRUE(noncurve.i10_zero);
}

}  // namespace
}  // namespace g2
