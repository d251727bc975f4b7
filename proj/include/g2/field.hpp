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

#include <concepts>
#include <string>

#include "g2/quad_ext.hpp"
#include "g2/rational.hpp"

namespace g2 {

/// The two scalar fields the library computes in: Q and Q(sqrt s).
template <typename F>
concept Field = std::regular<F> && std::constructible_from<F, int> && std::constructible_from<F, Rational> &&
                requires(F a, F b) {
                  { a + b } -> std::convertible_to<F>;
                  { a - b } -> std::convertible_to<F>;
                  { a * b } -> std::convertible_to<F>;
                  { a / b } -> std::convertible_to<F>;
                  { -a } -> std::convertible_to<F>;
                  { a.is_zero() } -> std::convertible_to<bool>;
                  { a.str() } -> std::convertible_to<std::string>;
                };

inline Rational conjugate(const Rational& x) { return x; }
inline QuadExt conjugate(const QuadExt& x) { return x.conjugate(); }

/// x^e for a field element by repeated squaring.
template <Field F>
F power(F x, unsigned e) {
  F r(1);
  while (e) {
    if (e & 1u) r *= x;
    e >>= 1;
    if (e) x *= x;
  }
  return r;
}

}  // namespace g2
