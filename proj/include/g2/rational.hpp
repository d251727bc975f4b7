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

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "g2/error.hpp"

namespace g2 {

/// Exact rational number. A thin value type over mpq_class that is always
/// canonical (positive denominator, reduced) so that templates never see GMP
/// expression objects.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}                   // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}                  // NOLINT(google-explicit-constructor)
  Rational(unsigned v) : q_(v) {}              // NOLINT(google-explicit-constructor)
  Rational(unsigned long v) : q_(v) {}         // NOLINT(google-explicit-constructor)
  Rational(long long v) : q_(mpz_class(std::to_string(v))) {}  // NOLINT
  Rational(const mpz_class& v) : q_(v) {}      // NOLINT(google-explicit-constructor)
  Rational(const mpq_class& v) : q_(v) { q_.canonicalize(); }  // NOLINT
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ArithmeticError("division by zero");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  /// Parses "p", "-p", "p/q" (optional surrounding spaces, optional '+').
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto first = s.find_first_not_of(" \t\r\n");
    auto last = s.find_last_not_of(" \t\r\n");
    if (first == std::string::npos) throw InputError("empty rational literal");
    s = s.substr(first, last - first + 1);
    std::string body = s;
    if (!body.empty() && body[0] == '+') body.erase(0, 1);
    auto slash = body.find('/');
    auto check_int = [&](const std::string& part) {
      std::size_t i = (!part.empty() && part[0] == '-') ? 1 : 0;
      if (i == part.size()) throw InputError("not a rational number: '" + s + "'");
      for (; i < part.size(); ++i) {
        if (part[i] < '0' || part[i] > '9') throw InputError("not a rational number: '" + s + "'");
      }
    };
    if (slash == std::string::npos) {
      check_int(body);
      return Rational(mpz_class(body));
    }
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    check_int(num);
    check_int(den);
    if (den[0] == '-') throw InputError("negative denominator in '" + s + "'");
    mpz_class d(den);
    if (d == 0) throw InputError("zero denominator in '" + s + "'");
    return Rational(mpz_class(num), d);
  }

  const mpq_class& get() const noexcept { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const noexcept { return sgn(q_) == 0; }
  bool is_integer() const noexcept { return q_.get_den() == 1; }
  int sign() const noexcept { return sgn(q_); }

  /// "p" when the denominator is one, "p/q" otherwise.
  std::string str() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

inline Rational inverse(const Rational& x) { return Rational(1) / x; }

inline Rational pow(const Rational& x, unsigned e) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), x.get().get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), x.get().get_den_mpz_t(), e);
  return Rational(n, d);
}

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace g2
