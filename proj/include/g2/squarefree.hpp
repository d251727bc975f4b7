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

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "g2/error.hpp"
#include "g2/rational.hpp"

namespace g2 {

/// q = square_scale^2 * squarefree_part, with the sign of q carried by the
/// squarefree part.
struct SquarefreeDecomposition {
  mpz_class squarefree_part;
  Rational square_scale;

  Rational recompose() const { return square_scale * square_scale * Rational(squarefree_part); }
  friend bool operator==(const SquarefreeDecomposition&, const SquarefreeDecomposition&) = default;
};

namespace detail {

inline constexpr unsigned kTrialBound = 10000;
inline constexpr std::uint64_t kDefaultFactorBudget = 2000000;

inline const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<bool> composite(kTrialBound, false);
    std::vector<unsigned> out;
    for (unsigned p = 2; p < kTrialBound; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (unsigned q = p * p; q < kTrialBound; q += p) composite[q] = true;
    }
    return out;
  }();
  return primes;
}

/// Iteration budget for Pollard rho; G2_FACTOR_BUDGET overrides the default.
inline std::uint64_t factor_budget() {
  if (const char* env = std::getenv("G2_FACTOR_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultFactorBudget;
}

// Integer form of a decomposition: n = t^2 * s, s squarefree and positive.
struct IntSqf {
  mpz_class s = 1;
  mpz_class t = 1;
};

inline IntSqf combine(const IntSqf& x, const IntSqf& y) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.s.get_mpz_t(), y.s.get_mpz_t());
  IntSqf r;
  r.s = (x.s / g) * (y.s / g);
  r.t = x.t * y.t * g;
  return r;
}

inline IntSqf power(const IntSqf& x, unsigned long k) {
  IntSqf r;
  mpz_class tk, sh;
  mpz_pow_ui(tk.get_mpz_t(), x.t.get_mpz_t(), k);
  mpz_pow_ui(sh.get_mpz_t(), x.s.get_mpz_t(), k / 2);
  r.t = tk * sh;
  r.s = (k % 2) ? x.s : mpz_class(1);
  return r;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
// composite n, charging iterations against `budget`.
inline mpz_class pollard_brent(const mpz_class& n, std::uint64_t& budget) {
  auto charge = [&](std::uint64_t steps) {
    if (budget < steps) {
      throw UnfactoredRadicand("unfactored radicand: factoring budget exhausted on " + n.get_str());
    }
    budget -= steps;
  };
  for (unsigned long c = 1;; ++c) {
    auto f = [&](const mpz_class& v) {
      mpz_class out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    const std::uint64_t m = 128;
    mpz_class y = 2, x, q = 1, g = 1, ys, diff;
    std::uint64_t r = 1;
    do {
      x = y;
      charge(r);
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        std::uint64_t steps = std::min(m, r - k);
        charge(steps);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = f(y);
          diff = x - y;
          q *= diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      // Backtrack one step at a time from the last saved position.
      do {
        charge(1);
        ys = f(ys);
        diff = x - ys;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

// m has no prime factors below kTrialBound.
inline IntSqf decompose_rough(const mpz_class& m, std::uint64_t& budget) {
  IntSqf out;
  if (m == 1) return out;
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    out.t = r;
    return out;
  }
  if (mpz_probab_prime_p(m.get_mpz_t(), 30) > 0) {
    out.s = m;
    return out;
  }
  // A non-square composite below bound^3 is a product of two distinct primes.
  mpz_class bound3 = mpz_class(kTrialBound) * kTrialBound * kTrialBound;
  if (m < bound3) {
    out.s = m;
    return out;
  }
  if (mpz_perfect_power_p(m.get_mpz_t())) {
    for (unsigned long k = mpz_sizeinbase(m.get_mpz_t(), 2); k >= 3; --k) {
      mpz_class r;
      if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), k) != 0) return power(decompose_rough(r, budget), k);
    }
  }
  mpz_class a = pollard_brent(m, budget);
  return combine(decompose_rough(a, budget), decompose_rough(m / a, budget));
}

inline IntSqf decompose_positive(mpz_class n, std::uint64_t& budget) {
  IntSqf out;
  for (unsigned p : small_primes()) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    mpz_class pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, e / 2);
    out.t *= pe;
    if (e % 2) out.s *= p;
    if (n == 1) return out;
  }
  return combine(out, decompose_rough(n, budget));
}

inline SquarefreeDecomposition decompose_with_budget(const Rational& q, std::uint64_t& budget) {
  if (q.is_zero()) throw DegenerateError(Locus::zero_radicand, "zero has no radicand");
  mpz_class num = abs(q.num());
  mpz_class den = q.den();
  IntSqf nd;
  // Cheap exits first: a rational square never reaches the factoring code.
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    mpz_class rd;
    mpz_sqrt(nd.t.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    nd.t *= rd;
  } else {
    nd = combine(decompose_positive(num, budget), decompose_positive(den, budget));
  }
  // q = num/den = num*den / den^2.
  SquarefreeDecomposition out;
  out.squarefree_part = q.sign() < 0 ? mpz_class(-nd.s) : nd.s;
  out.square_scale = Rational(nd.t, den);
  return out;
}

}  // namespace detail

/// Writes q = t^2 * s with s a squarefree integer. Throws DegenerateError for
/// q = 0 and UnfactoredRadicand when the factoring budget runs out.
inline SquarefreeDecomposition squarefree_decompose(const Rational& q) {
  std::uint64_t budget = detail::factor_budget();
  return detail::decompose_with_budget(q, budget);
}

/// Decomposes a product factor by factor, so that factors which are already
/// squares cost nothing. All factors must be nonzero.
inline SquarefreeDecomposition squarefree_decompose_product(const std::vector<Rational>& factors) {
  std::uint64_t budget = detail::factor_budget();
  detail::IntSqf acc;
  Rational scale(1);
  int sign = 1;
  for (const auto& f : factors) {
    SquarefreeDecomposition part = detail::decompose_with_budget(f, budget);
    if (part.squarefree_part < 0) sign = -sign;
    detail::IntSqf p;
    p.s = abs(part.squarefree_part);
    acc = detail::combine(acc, p);
    scale *= part.square_scale;
  }
  SquarefreeDecomposition out;
  out.squarefree_part = sign < 0 ? mpz_class(-acc.s) : acc.s;
  out.square_scale = scale * Rational(acc.t);
  return out;
}

/// True iff q = r^2 for a rational r. Zero counts as a square.
inline bool is_rational_square(const Rational& q) {
  if (q.is_zero()) return true;
  if (q.sign() < 0) return false;
  return mpz_perfect_square_p(q.get().get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(q.get().get_den_mpz_t()) != 0;
}

}  // namespace g2
