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
#include <cstddef>
#include <optional>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "g2/binary_form.hpp"
#include "g2/error.hpp"
#include "g2/invariants.hpp"
#include "g2/quad_ext.hpp"
#include "g2/squarefree.hpp"

namespace g2 {

/// Which square root of d^2 a construction uses.
enum class Branch { plus = 1, minus = -1 };

inline int sign_of(Branch b) { return b == Branch::plus ? 1 : -1; }
inline const char* branch_name(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

/// Formal square root of q in Q(sqrt s): rational when q is a square, zero
/// when q is zero. Multiplicative factors are decomposed one at a time.
inline QuadExt formal_sqrt(const Rational& q, const std::vector<Rational>& factors = {}) {
  if (q.is_zero()) return QuadExt(0);
  if (is_rational_square(q)) {
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get().get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get().get_den_mpz_t());
    return QuadExt(Rational(n, d));
  }
  SquarefreeDecomposition dec = factors.empty() ? squarefree_decompose(q) : squarefree_decompose_product(factors);
  if (!(dec.recompose() == q)) throw IdentityViolation("squarefree decomposition does not recompose");
  return QuadExt::sqrt_of(dec);
}

/// The conic sum A_ij X_i X_j = 0 with d^2 = -2 A22 I30.
struct ConicModel {
  ClebschInvariants<Rational> clebsch;
  SymMatrix3<Rational> matrix;
  Rational i30;
  Rational d_squared;
  QuadExt d;  // the root used by Branch::plus

  explicit ConicModel(const ClebschInvariants<Rational>& c)
      : clebsch(c), matrix(conic_matrix(c)), i30(determinant(matrix) / Rational(2)) {
    d_squared = Rational(-2) * matrix[1][1] * i30;
    if (d_squared.is_zero()) {
      d = QuadExt(0);
    } else {
      d = formal_sqrt(d_squared, {Rational(-2), matrix[1][1], i30});
    }
  }

  QuadExt root(Branch b) const { return b == Branch::plus ? d : -d; }
  const mpz_class& radicand() const noexcept { return d.radicand(); }
};

/// The ten coefficients a_ijk of the Clebsch cubic, stored as a symmetric
/// 3x3x3 array (indices 0..2).
struct CubicModel {
  std::array<std::array<std::array<Rational, 3>, 3>, 3> a{};

  const Rational& at(int i, int j, int k) const { return a[i - 1][j - 1][k - 1]; }

  /// sum over all ordered triples of a_ijk X_i X_j X_k.
  template <typename T>
  T evaluate(const std::array<T, 3>& x) const {
    std::optional<T> acc;
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) {
        for (int k = j; k < 3; ++k) {
          const Rational& c = a[i][j][k];
          if (c.is_zero()) continue;
          int mult = (i == j && j == k) ? 1 : ((i == j || j == k) ? 3 : 6);
          T term = x[i] * x[j] * x[k] * (c * Rational(mult));
          if (acc) {
            *acc += term;
          } else {
            acc = std::move(term);
          }
        }
      }
    }
    return acc ? *acc : x[0] * x[0] * x[0] * Rational(0);
  }
};

inline CubicModel cubic_coefficients(const ClebschInvariants<Rational>& c) {
  const Rational& A = c.A;
  const Rational& B = c.B;
  const Rational& C = c.C;
  const Rational& D = c.D;
  auto q = [](long n, long d) { return Rational(mpz_class(n), mpz_class(d)); };
  Rational A2 = A * A, B2 = B * B, B3 = B2 * B, B4 = B3 * B, B5 = B4 * B, C2 = C * C, C3 = C2 * C;

  Rational a111 = 8 * (A2 * C - 6 * B * C + 9 * D);
  Rational a112 = 4 * (2 * B3 + 4 * A * B * C + 12 * C2 + 3 * A * D);
  Rational a113 = 4 * (A * B3 + q(4, 3) * A2 * B * C + 4 * B2 * C + 6 * A * C2 + 3 * B * D);
  Rational a123 = 2 * (2 * B4 + 4 * A * B2 * C + q(4, 3) * A2 * C2 + 4 * B * C2 + 3 * A * B * D + 12 * C * D);
  Rational a133 = 2 * (A * B4 + q(4, 3) * A2 * B2 * C + q(16, 3) * B3 * C + q(26, 3) * A * B * C2 + 8 * C3 +
                       3 * B2 * D + 2 * A * C * D);
  Rational a222 = 4 * (3 * B4 + 6 * A * B2 * C + q(8, 3) * A2 * C2 + 2 * B * C2 - 3 * C * D);
  Rational a223 = 2 * (-q(2, 3) * B3 * C - q(4, 3) * A * B * C2 - 4 * C3 + 9 * B2 * D + 8 * A * C * D);
  Rational a233 = 2 * (B5 + 2 * A * B3 * C + q(8, 9) * A2 * B * C2 + q(2, 3) * B2 * C2 - B * C * D + 9 * D * D);
  Rational a333 = -2 * B4 * C - 4 * A * B2 * C2 - q(16, 9) * A2 * C3 - q(4, 3) * B * C3 + 9 * B3 * D +
                  12 * A * B * C * D + 20 * C2 * D;

  CubicModel m;
  auto set = [&](int i, int j, int k, const Rational& v36) {
    Rational v = v36 / Rational(36);
    std::array<int, 3> idx = {i - 1, j - 1, k - 1};
    // Fill every permutation so that at() works with any index order.
    std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& p : perms) m.a[idx[p[0]]][idx[p[1]]][idx[p[2]]] = v;
  };
  set(1, 1, 1, a111);
  set(1, 1, 2, a112);
  set(1, 1, 3, a113);
  set(1, 2, 2, a113);
  set(1, 2, 3, a123);
  set(1, 3, 3, a133);
  set(2, 2, 2, a222);
  set(2, 2, 3, a223);
  set(2, 3, 3, a233);
  set(3, 3, 3, a333);
  return m;
}

using ConicPoint = std::array<QuadExt, 3>;

namespace detail {

inline void require_parametrizable(const ConicModel& m) {
  const auto& M = m.matrix;
  if (M[1][1].is_zero()) throw DegenerateError(Locus::d_locus, "D-locus degeneracy: A22 = D = 0");
  if ((M[1][1] * M[2][2] - M[1][2] * M[1][2]).is_zero()) {
    throw DegenerateError(Locus::minor_vanishes, "parametrization minor vanishes: A22*A33 - A23^2 = 0");
  }
}

}  // namespace detail

/// Conic residual sum A_ij X_i X_j for field-valued or form-valued X.
template <typename T>
T conic_residual(const SymMatrix3<Rational>& M, const std::array<T, 3>& x) {
  T acc = x[0] * x[0] * M[0][0];
  acc += x[1] * x[1] * M[1][1];
  acc += x[2] * x[2] * M[2][2];
  acc += x[0] * x[1] * (Rational(2) * M[0][1]);
  acc += x[0] * x[2] * (Rational(2) * M[0][2]);
  acc += x[1] * x[2] * (Rational(2) * M[1][2]);
  return acc;
}

/// The explicit point of the conic over Q(d).
inline ConicPoint conic_point(const ConicModel& m, Branch b) {
  detail::require_parametrizable(m);
  const auto& M = m.matrix;
  const Rational& a12 = M[0][1];
  const Rational& a13 = M[0][2];
  const Rational& a22 = M[1][1];
  const Rational& a23 = M[1][2];
  const Rational& a33 = M[2][2];
  QuadExt d = m.root(b);
  QuadExt x1 = QuadExt(a22 * (a22 * a33 - a23 * a23));
  QuadExt x2 = -(d * QuadExt(a23)) - QuadExt(a22 * (a12 * a33 - a13 * a23));
  QuadExt x3 = QuadExt(a22) * (d + QuadExt(a12 * a23 - a13 * a22));
  return {x1, x2, x3};
}

using QForm = BinaryForm<QuadExt>;

/// Secant parametrization through the base point P0: with W = (u, t, 0),
///   P(t, u) = Q(W) P0 - 2 B(P0, W) W,
/// where Q is the conic form and B its polar. Each coordinate is a binary
/// quadric in (t, u), highest t-power first.
inline std::array<QForm, 3> conic_parametrization(const ConicModel& m, Branch b) {
  ConicPoint p0 = conic_point(m, b);
  const auto& M = m.matrix;
  // Q(W) = A22 t^2 + 2 A12 t u + A11 u^2.
  QForm qw({QuadExt(M[1][1]), QuadExt(Rational(2) * M[0][1]), QuadExt(M[0][0])});
  std::array<QuadExt, 2> mp;  // (M P0)_1, (M P0)_2
  for (int r = 0; r < 2; ++r) {
    mp[r] = p0[0] * QuadExt(M[r][0]) + p0[1] * QuadExt(M[r][1]) + p0[2] * QuadExt(M[r][2]);
  }
  // B(P0, W) = (M P0)_2 t + (M P0)_1 u.
  QForm bw({mp[1], mp[0]});
  QForm wx({QuadExt(0), QuadExt(1)});  // u
  QForm wy({QuadExt(1), QuadExt(0)});  // t
  QForm two_b = bw * QuadExt(2);
  return {qw * p0[0] - two_b * wx, qw * p0[1] - two_b * wy, qw * p0[2]};
}

/// Homogeneous parameter (t : u) at which the parametrization returns a
/// multiple of the base point.
inline std::pair<QuadExt, QuadExt> base_parameter(const ConicModel& m, Branch b) {
  ConicPoint p0 = conic_point(m, b);
  const auto& M = m.matrix;
  std::array<QuadExt, 2> mp;
  for (int r = 0; r < 2; ++r) {
    mp[r] = p0[0] * QuadExt(M[r][0]) + p0[1] * QuadExt(M[r][1]) + p0[2] * QuadExt(M[r][2]);
  }
  return {-mp[0], mp[1]};
}

/// The cubic restricted to the parametrized conic: a binary sextic in (t, u)
/// whose roots are the Weierstrass points. Its leading coefficients may
/// vanish when a Weierstrass point sits at t = infinity.
inline QForm pullback_sextic(const ConicModel& m, const CubicModel& cubic, Branch b) {
  std::array<QForm, 3> p = conic_parametrization(m, b);
  QForm f = cubic.evaluate(p);
  if (f.is_zero()) {
    throw DegenerateError(Locus::degenerate_intersection, "degenerate intersection: the pullback vanishes identically");
  }
  return f;
}

/// Projective normalization of a coefficient vector: clears all denominators
/// and divides out the integer content. Returns the normalized vector and
/// the rational factor it was multiplied by.
template <Field F>
std::pair<std::vector<F>, Rational> normalize_projective(const std::vector<F>& v) {
  mpz_class lcm = 1, content = 0;
  auto parts = [](const F& x) {
    if constexpr (std::is_same_v<F, QuadExt>) {
      return std::array<Rational, 2>{x.rational_part(), x.radical_part()};
    } else {
      return std::array<Rational, 1>{x};
    }
  };
  for (const auto& x : v) {
    for (const auto& r : parts(x)) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.get().get_den_mpz_t());
  }
  for (const auto& x : v) {
    for (const auto& r : parts(x)) {
      mpz_class n = r.num() * (lcm / r.den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    }
  }
  if (content == 0) return {v, Rational(1)};
  Rational factor(lcm, content);
  std::vector<F> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x * F(factor));
  return {out, factor};
}

}  // namespace g2
