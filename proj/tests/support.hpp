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

// Seeded generators shared by the suites. Every test draws from its own
// fixed seed so failures reproduce exactly.

#include <cstdint>
#include <random>
#include <vector>

#include "g2/g2.hpp"

namespace g2::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// num/den with |num| <= n, 1 <= den <= d.
inline Rational small_rational(Rng& rng, long n = 20, long d = 9) {
  return Rational(mpz_class(uniform(rng, -n, n)), mpz_class(uniform(rng, 1, d)));
}

inline Rational nonzero_rational(Rng& rng, long n = 20, long d = 9) {
  for (;;) {
    Rational r = small_rational(rng, n, d);
    if (!r.is_zero()) return r;
  }
}

inline RationalForm integer_form(Rng& rng, std::size_t degree, long lo = -10, long hi = 10) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i <= degree; ++i) c.emplace_back(uniform(rng, lo, hi));
  return RationalForm(std::move(c));
}

inline RationalForm rational_form(Rng& rng, std::size_t degree) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i <= degree; ++i) c.push_back(small_rational(rng));
  return RationalForm(std::move(c));
}

inline ClebschInvariants<Rational> random_clebsch(Rng& rng) {
  return {small_rational(rng), small_rational(rng), small_rational(rng), small_rational(rng)};
}

inline IgusaInvariants<Rational> random_igusa(Rng& rng) {
  return {small_rational(rng, 60, 5), small_rational(rng, 60, 5), small_rational(rng, 60, 5),
          nonzero_rational(rng, 60, 5)};
}

/// A sextic whose moduli point avoids every special locus the pipeline
/// distinguishes: I10, I2, D and I30 all nonzero.
struct GenericSextic {
  RationalForm f;
  ModuliPoint point;
};

inline GenericSextic generic_integer_sextic(Rng& rng) {
  for (;;) {
    RationalForm f = integer_form(rng, 6);
    if (f.is_zero()) continue;
    ModuliPoint p = ModuliPoint::from_sextic(f);
    const auto& i = p.igusa();
    if (i.I10.is_zero() || i.I2.is_zero() || p.clebsch().D.is_zero() || p.i30().is_zero()) continue;
    return {f, p};
  }
}

/// Clebsch tuple where the conic parametrization is defined.
inline ClebschInvariants<Rational> parametrizable_clebsch(Rng& rng) {
  for (;;) {
    auto c = random_clebsch(rng);
    auto m = conic_matrix(c);
    if (c.D.is_zero()) continue;
    if ((m[1][1] * m[2][2] - m[1][2] * m[1][2]).is_zero()) continue;
    return c;
  }
}

inline bool is_conjugate_pair(const BinaryForm<QuadExt>& p, const BinaryForm<QuadExt>& m) {
  for (std::size_t k = 0; k <= p.degree(); ++k) {
    if (!(m[k] == p[k].conjugate())) return false;
  }
  return true;
}

}  // namespace g2::testing
