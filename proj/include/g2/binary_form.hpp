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

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "g2/error.hpp"
#include "g2/field.hpp"

namespace g2 {

/// Homogeneous binary form of declared degree n. Index i holds the
/// coefficient of x^(n-i) y^i, so the leading x-power comes first. Leading
/// coefficients may vanish; the declared degree never changes.
template <Field F>
class BinaryForm {
 public:
  BinaryForm() : coeffs_(1, F(0)) {}
  explicit BinaryForm(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InputError("a binary form needs at least one coefficient");
  }
  BinaryForm(std::initializer_list<F> coeffs) : BinaryForm(std::vector<F>(coeffs)) {}

  static BinaryForm zero(std::size_t degree) { return BinaryForm(std::vector<F>(degree + 1, F(0))); }

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const std::vector<F>& coefficients() const noexcept { return coeffs_; }
  const F& operator[](std::size_t i) const { return coeffs_.at(i); }
  F& operator[](std::size_t i) { return coeffs_.at(i); }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  /// Degree in x of f(x, 1); -1 for the zero form.
  int effective_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!coeffs_[i].is_zero()) return static_cast<int>(degree() - i);
    }
    return -1;
  }

  /// d/dx, of degree n-1. The derivative of a constant is the zero constant.
  BinaryForm dx() const {
    const std::size_t n = degree();
    if (n == 0) return zero(0);
    std::vector<F> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = coeffs_[i] * F(static_cast<int>(n - i));
    return BinaryForm(std::move(out));
  }

  /// d/dy, of degree n-1.
  BinaryForm dy() const {
    const std::size_t n = degree();
    if (n == 0) return zero(0);
    std::vector<F> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = coeffs_[i + 1] * F(static_cast<int>(i + 1));
    return BinaryForm(std::move(out));
  }

  /// f(-x, y).
  BinaryForm reflect() const {
    BinaryForm r = *this;
    const std::size_t n = degree();
    for (std::size_t i = 0; i <= n; ++i) {
      if ((n - i) % 2 == 1) r.coeffs_[i] = -r.coeffs_[i];
    }
    return r;
  }

  /// f(a x + b y, c x + d y).
  BinaryForm linear_substitution(const F& a, const F& b, const F& c, const F& d) const {
    const std::size_t n = degree();
    BinaryForm u({a, b});
    BinaryForm v({c, d});
    std::vector<BinaryForm> upow(n + 1), vpow(n + 1);
    upow[0] = vpow[0] = BinaryForm({F(1)});
    for (std::size_t k = 1; k <= n; ++k) {
      upow[k] = upow[k - 1] * u;
      vpow[k] = vpow[k - 1] * v;
    }
    BinaryForm out = zero(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (coeffs_[i].is_zero()) continue;
      out += (upow[n - i] * vpow[i]) * coeffs_[i];
    }
    return out;
  }

  F evaluate(const F& x, const F& y) const {
    const std::size_t n = degree();
    F acc(0);
    F ypow(1);
    // Horner in x with the y powers accumulated alongside.
    std::vector<F> ys(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      ys[i] = ypow;
      ypow *= y;
    }
    for (std::size_t i = 0; i <= n; ++i) acc = acc * x + coeffs_[i] * ys[i];
    return acc;
  }

  template <typename Fn>
  auto map_coefficients(Fn&& fn) const {
    using G = decltype(fn(coeffs_[0]));
    std::vector<G> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(fn(c));
    return BinaryForm<G>(std::move(out));
  }

  BinaryForm operator-() const {
    BinaryForm r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  BinaryForm& operator+=(const BinaryForm& o) {
    require_same_degree(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  BinaryForm& operator-=(const BinaryForm& o) {
    require_same_degree(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  BinaryForm& operator*=(const F& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(BinaryForm a, const F& s) { return a *= s; }
  friend BinaryForm operator*(const F& s, BinaryForm a) { return a *= s; }

  friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
    std::vector<F> out(f.coeffs_.size() + g.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
      if (f.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < g.coeffs_.size(); ++j) out[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    return BinaryForm(std::move(out));
  }

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.coeffs_ == b.coeffs_; }

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) out += ", ";
      out += coeffs_[i].str();
    }
    return out + "]";
  }

 private:
  void require_same_degree(const BinaryForm& o) const {
    if (o.degree() != degree()) throw InputError("binary forms of different degrees cannot be added");
  }

  std::vector<F> coeffs_;
};

using RationalForm = BinaryForm<Rational>;

/// Lifts a rational form into Q(sqrt s).
inline BinaryForm<QuadExt> to_quad_ext(const RationalForm& f) {
  return f.map_coefficients([](const Rational& c) { return QuadExt(c); });
}

}  // namespace g2
