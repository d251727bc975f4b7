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

#include <ostream>
#include <string>

#include "g2/error.hpp"
#include "g2/rational.hpp"
#include "g2/squarefree.hpp"

namespace g2 {

/// a + b*sqrt(s) in Q(sqrt s). A radicand of 0 marks a purely rational value;
/// any element whose radical part is zero mixes freely with every radicand.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(int v) : a_(v) {}             // NOLINT(google-explicit-constructor)
  QuadExt(const Rational& v) : a_(v) {} // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b, mpz_class s) : a_(std::move(a)), b_(std::move(b)), s_(std::move(s)) {
    if (s_ == 1) {
      a_ += b_;
      b_ = Rational(0);
      s_ = 0;
    } else if (s_ == 0 && !b_.is_zero()) {
      throw ArithmeticError("radical part given without a radicand");
    }
  }

  /// t*sqrt(s) for the decomposition q = t^2 s; this is one square root of q.
  static QuadExt sqrt_of(const SquarefreeDecomposition& q) {
    return QuadExt(Rational(0), q.square_scale, q.squarefree_part);
  }

  /// Zero of the field Q(sqrt s), carrying the radicand as context.
  static QuadExt zero_in(const mpz_class& s) {
    QuadExt z;
    if (s != 1) z.s_ = s;
    return z;
  }

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& radical_part() const noexcept { return b_; }
  const mpz_class& radicand() const noexcept { return s_; }

  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const noexcept { return b_.is_zero(); }

  QuadExt conjugate() const {
    QuadExt r = *this;
    r.b_ = -r.b_;
    return r;
  }
  /// x * conjugate(x).
  Rational norm() const { return a_ * a_ - Rational(s_) * b_ * b_; }

  QuadExt operator-() const {
    QuadExt r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
  }
  QuadExt& operator+=(const QuadExt& o) {
    s_ = join(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadExt& operator-=(const QuadExt& o) {
    s_ = join(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadExt& operator*=(const QuadExt& o) {
    mpz_class s = join(*this, o);
    if (b_.is_zero()) {
      b_ = a_ * o.b_;
      a_ *= o.a_;
    } else if (o.b_.is_zero()) {
      a_ *= o.a_;
      b_ *= o.a_;
    } else {
      Rational na = a_ * o.a_ + Rational(s) * b_ * o.b_;
      b_ = a_ * o.b_ + b_ * o.a_;
      a_ = std::move(na);
    }
    s_ = std::move(s);
    return *this;
  }
  QuadExt& operator/=(const QuadExt& o) {
    if (o.b_.is_zero()) {
      if (o.a_.is_zero()) throw ArithmeticError("division by zero");
      s_ = join(*this, o);
      a_ /= o.a_;
      b_ /= o.a_;
      return *this;
    }
    return *this *= o.inverse();
  }

  QuadExt inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    Rational n = norm();
    QuadExt r = conjugate();
    r.a_ /= n;
    r.b_ /= n;
    return r;
  }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    return x.b_.is_zero() || x.s_ == y.s_;
  }

  /// "a", "a + b*sqrt(s)" or "b*sqrt(s)".
  std::string str() const {
    if (b_.is_zero()) return a_.str();
    std::string rad = "sqrt(" + s_.get_str() + ")";
    std::string bpart = b_ == Rational(1) ? rad : (b_ == Rational(-1) ? "-" + rad : b_.str() + "*" + rad);
    if (a_.is_zero()) return bpart;
    if (b_.sign() < 0) {
      Rational nb = -b_;
      return a_.str() + " - " + (nb == Rational(1) ? rad : nb.str() + "*" + rad);
    }
    return a_.str() + " + " + bpart;
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

 private:
  static mpz_class join(const QuadExt& x, const QuadExt& y) {
    if (x.s_ == y.s_) return x.s_;
    if (y.b_.is_zero() && (x.s_ != 0 || y.s_ == 0)) return x.s_;
    if (x.b_.is_zero() && (y.s_ != 0 || x.s_ == 0)) return y.s_;
    if (x.b_.is_zero() && y.b_.is_zero()) return x.s_ != 0 ? x.s_ : y.s_;
    throw ArithmeticError("incompatible extensions: Q(sqrt " + x.s_.get_str() + ") and Q(sqrt " +
                          y.s_.get_str() + ")");
  }

  Rational a_;
  Rational b_;
  mpz_class s_ = 0;
};

}  // namespace g2
