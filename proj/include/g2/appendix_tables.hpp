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

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2/field.hpp"
#include "g2/invariants.hpp"

namespace g2 {

namespace appendix {

/// coefficient * A^a B^b C^c D^d.
struct Term {
  std::int64_t coefficient;
  int a, b, c, d;
};

#include "g2/data/appendix_coefficients.inc"

inline constexpr std::array<std::span<const Term>, 7> kDelta = {
    std::span<const Term>(kDelta0), std::span<const Term>(kDelta1), std::span<const Term>(kDelta2),
    std::span<const Term>(kDelta3), std::span<const Term>(kDelta4), std::span<const Term>(kDelta5),
    std::span<const Term>(kDelta6)};

inline constexpr std::array<std::span<const Term>, 7> kEpsilon = {
    std::span<const Term>(kEpsilon0), std::span<const Term>(kEpsilon1), std::span<const Term>(kEpsilon2),
    std::span<const Term>(kEpsilon3), std::span<const Term>(kEpsilon4), std::span<const Term>(kEpsilon5),
    std::span<const Term>(kEpsilon6)};

/// floor((i-3)^2/2) - 3 floor((i-3)^2/5).
constexpr int exponent_e(int i) {
  int sq = (i - 3) * (i - 3);
  return sq / 2 - 3 * (sq / 5);
}

/// kappa_i = 1, 12, 15B, 360, 15, 12, 1. Only kappa_2 depends on the point.
template <Field F>
F kappa(int i, const ClebschInvariants<F>& c) {
  static constexpr std::array<int, 7> k = {1, 12, 15, 360, 15, 12, 1};
  if (i < 0 || i > 6) throw std::out_of_range("kappa index");
  return i == 2 ? F(15) * c.B : F(k[static_cast<std::size_t>(i)]);
}

/// Evaluates a table polynomial at (A, B, C, D).
template <Field F>
F evaluate(std::span<const Term> poly, const ClebschInvariants<F>& c) {
  int max_exp = 0;
  for (const auto& t : poly) max_exp = std::max({max_exp, t.a, t.b, t.c, t.d});
  std::array<std::vector<F>, 4> pows;
  const std::array<const F*, 4> base = {&c.A, &c.B, &c.C, &c.D};
  for (std::size_t v = 0; v < 4; ++v) {
    pows[v].reserve(static_cast<std::size_t>(max_exp) + 1);
    pows[v].push_back(F(1));
    for (int e = 1; e <= max_exp; ++e) pows[v].push_back(pows[v].back() * *base[v]);
  }
  F acc(0);
  for (const auto& t : poly) {
    F term = F(Rational(mpz_class(std::to_string(t.coefficient))));
    term *= pows[0][static_cast<std::size_t>(t.a)];
    term *= pows[1][static_cast<std::size_t>(t.b)];
    term *= pows[2][static_cast<std::size_t>(t.c)];
    term *= pows[3][static_cast<std::size_t>(t.d)];
    acc += term;
  }
  return acc;
}

template <Field F>
F delta(int i, const ClebschInvariants<F>& c) {
  return evaluate(kDelta.at(static_cast<std::size_t>(i)), c);
}

template <Field F>
F epsilon(int i, const ClebschInvariants<F>& c) {
  return evaluate(kEpsilon.at(static_cast<std::size_t>(i)), c);
}

}  // namespace appendix

}  // namespace g2
