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
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>

#include "g2/binary_form.hpp"
#include "g2/error.hpp"
#include "g2/quadrics.hpp"
#include "g2/transvectant.hpp"

namespace g2 {

/// [I2 : I4 : I6 : I10] with weights 2, 4, 6, 10.
template <Field F = Rational>
struct IgusaInvariants {
  F I2, I4, I6, I10;

  bool is_zero() const { return I2.is_zero() && I4.is_zero() && I6.is_zero() && I10.is_zero(); }
  std::array<F, 4> values() const { return {I2, I4, I6, I10}; }
  friend bool operator==(const IgusaInvariants&, const IgusaInvariants&) = default;
  friend std::ostream& operator<<(std::ostream& os, const IgusaInvariants& i) {
    return os << "[" << i.I2 << " : " << i.I4 << " : " << i.I6 << " : " << i.I10 << "]";
  }
};

template <Field F = Rational>
struct ClebschInvariants {
  F A, B, C, D;

  friend bool operator==(const ClebschInvariants&, const ClebschInvariants&) = default;
  friend std::ostream& operator<<(std::ostream& os, const ClebschInvariants& c) {
    return os << "(" << c.A << ", " << c.B << ", " << c.C << ", " << c.D << ")";
  }
};

template <Field F = Rational>
struct AbsoluteInvariants {
  F j1, j2, j3;

  friend bool operator==(const AbsoluteInvariants&, const AbsoluteInvariants&) = default;
  friend std::ostream& operator<<(std::ostream& os, const AbsoluteInvariants& j) {
    return os << "(" << j.j1 << ", " << j.j2 << ", " << j.j3 << ")";
  }
};

/// Symmetric 3x3 matrix stored densely.
template <Field F>
using SymMatrix3 = std::array<std::array<F, 3>, 3>;

template <Field F>
F determinant(const SymMatrix3<F>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Clebsch invariants from transvectants: A = (f,f)_6, B = (i,i)_4,
/// C = (i,Delta)_4 with Delta = (i,i)_2, and D = (y1,y3)_2.
template <Field F>
ClebschInvariants<F> clebsch_from_sextic(const BinaryForm<F>& f) {
  MestreQuadrics<F> q = mestre_quadrics(f);
  BinaryForm<F> delta = transvectant(q.i, q.i, 2);
  return {constant_value(transvectant(f, f, 6)), constant_value(transvectant(q.i, q.i, 4)),
          constant_value(transvectant(q.i, delta, 4)), constant_value(transvectant(q.y1, q.y3, 2))};
}

template <Field F>
IgusaInvariants<F> igusa_from_clebsch(const ClebschInvariants<F>& c) {
  const F& A = c.A;
  const F& B = c.B;
  const F& C = c.C;
  const F& D = c.D;
  F A2 = A * A;
  F A3 = A2 * A;
  return {F(-120) * A,
          F(-720) * A2 + F(6750) * B,
          F(8640) * A3 - F(108000) * A * B + F(202500) * C,
          F(-62208) * A3 * A2 + F(972000) * A3 * B + F(1620000) * A2 * C - F(3037500) * A * B * B -
              F(6075000) * B * C - F(4556250) * D};
}

/// Exact inverse of igusa_from_clebsch.
template <Field F>
ClebschInvariants<F> clebsch_from_igusa(const IgusaInvariants<F>& i) {
  const F& I2 = i.I2;
  const F& I4 = i.I4;
  const F& I6 = i.I6;
  const F& I10 = i.I10;
  F I2_2 = I2 * I2;
  F I2_3 = I2_2 * I2;
  auto q = [](long num, long den) { return F(Rational(mpz_class(num), mpz_class(den))); };
  F A = q(-1, 120) * I2;
  F B = (I2_2 + F(20) * I4) * q(1, 135000);
  F C = -(I2_3 + F(80) * I2 * I4 - F(600) * I6) * q(1, 121500000);
  F D = -(F(9) * I2_3 * I2_2 + F(700) * I2_3 * I4 - F(3600) * I2_2 * I6 - F(12400) * I2 * I4 * I4 +
          F(48000) * I4 * I6 + F(10800000) * I10) *
        F(Rational(mpz_class(1), mpz_class("49207500000000")));
  return {A, B, C, D};
}

template <Field F>
IgusaInvariants<F> igusa_from_sextic(const BinaryForm<F>& f) {
  return igusa_from_clebsch(clebsch_from_sextic(f));
}

/// The symmetric matrix of the Clebsch conic sum A_ij X_i X_j.
template <Field F>
SymMatrix3<F> conic_matrix(const ClebschInvariants<F>& c) {
  const F& A = c.A;
  const F& B = c.B;
  const F& C = c.C;
  const F& D = c.D;
  F third = F(Rational(1, 3));
  F b2ac = B * B + A * C;
  F a11 = F(2) * C + A * B * third;
  F a12 = F(Rational(2, 3)) * b2ac;
  F a22 = D;
  F a13 = D;
  F a33 = B * D / F(2) + F(Rational(2, 9)) * C * b2ac;
  F a23 = B * b2ac * third + C * a11 * third;
  return {{{a11, a12, a13}, {a12, a22, a23}, {a13, a23, a33}}};
}

/// I30 = R^2 = det(conic matrix) / 2.
template <Field F>
F i30_from_clebsch(const ClebschInvariants<F>& c) {
  return determinant(conic_matrix(c)) / F(2);
}

/// (I2^5, I4 I2^3, I6 I2^2) / I10.
template <Field F>
AbsoluteInvariants<F> absolute_from_igusa(const IgusaInvariants<F>& i) {
  if (i.I10.is_zero()) throw DegenerateError(Locus::not_genus_two, "not a genus-two moduli point (I10 = 0)");
  F I2_2 = i.I2 * i.I2;
  F I2_3 = I2_2 * i.I2;
  return {I2_3 * I2_2 / i.I10, i.I4 * I2_3 / i.I10, i.I6 * I2_2 / i.I10};
}

/// Weighted projective equality over the algebraic closure: q = (l^2 I2,
/// l^4 I4, l^6 I6, l^10 I10) for some nonzero l. Decided by matching the
/// zero pattern and comparing p_i^w_j q_j^w_i = q_i^w_j p_j^w_i pairwise, with
/// halved weights (1, 2, 3, 5).
template <Field F, Field G>
bool moduli_points_equal(const IgusaInvariants<F>& p, const IgusaInvariants<G>& q) {
  static constexpr std::array<unsigned, 4> w = {1, 2, 3, 5};
  auto pv = p.values();
  auto qv = q.values();
  for (std::size_t k = 0; k < 4; ++k) {
    if (pv[k].is_zero() != qv[k].is_zero()) return false;
  }
  // Mixed fields: lift both sides into the common extension by value.
  using H = std::conditional_t<std::is_same_v<F, G>, F, QuadExt>;
  auto lift = [](const auto& x) -> H {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, H>) {
      return x;
    } else {
      return H(x);
    }
  };
  for (std::size_t a = 0; a < 4; ++a) {
    if (pv[a].is_zero()) continue;
    for (std::size_t b = a + 1; b < 4; ++b) {
      if (pv[b].is_zero()) continue;
      H lhs = power(lift(pv[a]), w[b]) * power(lift(qv[b]), w[a]);
      H rhs = power(lift(qv[a]), w[b]) * power(lift(pv[b]), w[a]);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

/// A rational moduli point with its derived data. The zero tuple is rejected.
class ModuliPoint {
 public:
  explicit ModuliPoint(IgusaInvariants<Rational> igusa) : igusa_(std::move(igusa)) {
    if (igusa_.is_zero()) throw DegenerateError(Locus::zero_tuple, "the zero tuple is not a moduli point");
    clebsch_ = clebsch_from_igusa(igusa_);
    i30_ = i30_from_clebsch(clebsch_);
    if (!igusa_.I10.is_zero()) absolute_ = absolute_from_igusa(igusa_);
  }

  static ModuliPoint from_sextic(const RationalForm& f) { return ModuliPoint(igusa_from_sextic(f)); }

  const IgusaInvariants<Rational>& igusa() const noexcept { return igusa_; }
  const ClebschInvariants<Rational>& clebsch() const noexcept { return clebsch_; }
  const Rational& i30() const noexcept { return i30_; }
  /// Present only when I10 != 0.
  const std::optional<AbsoluteInvariants<Rational>>& absolute() const noexcept { return absolute_; }

  /// Why the absolute invariants are unavailable or uninformative, if they are.
  std::optional<std::string> degenerate_reason() const {
    if (igusa_.I10.is_zero()) return std::string("I10 = 0");
    if (igusa_.I2.is_zero()) return std::string("I2 = 0");
    return std::nullopt;
  }

 private:
  IgusaInvariants<Rational> igusa_;
  ClebschInvariants<Rational> clebsch_;
  Rational i30_;
  std::optional<AbsoluteInvariants<Rational>> absolute_;
};

}  // namespace g2
