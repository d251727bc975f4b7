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
#include <cstddef>
#include <string>
#include <vector>

#include "g2/binary_form.hpp"
#include "g2/error.hpp"

namespace g2 {

namespace detail {

inline mpz_class factorial(std::size_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline mpz_class binomial(std::size_t n, std::size_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// All k-th order partials of f, indexed by the number of y-derivatives.
template <Field F>
std::vector<BinaryForm<F>> kth_partials(const BinaryForm<F>& f, std::size_t k) {
  std::vector<BinaryForm<F>> out(k + 1);
  BinaryForm<F> fy = f;
  for (std::size_t i = 0; i <= k; ++i) {
    BinaryForm<F> g = fy;
    for (std::size_t j = 0; j < k - i; ++j) g = g.dx();
    out[i] = std::move(g);
    if (i < k) fy = fy.dy();
  }
  return out;
}

}  // namespace detail

/// Order-k transvectant (f, g)_k with the factorial normalization
///   (m-k)!(n-k)!/(m! n!) * sum_i (-1)^i C(k,i) f_{x^(k-i) y^i} g_{x^i y^(k-i)}.
/// With this choice (x^2, y^2)_2 = 1 and (f, g)_k = (-1)^k (g, f)_k.
template <Field F>
BinaryForm<F> transvectant(const BinaryForm<F>& f, const BinaryForm<F>& g, std::size_t k) {
  const std::size_t m = f.degree();
  const std::size_t n = g.degree();
  if (k > std::min(m, n)) {
    throw InputError("transvectant order " + std::to_string(k) + " exceeds min(" + std::to_string(m) + ", " +
                     std::to_string(n) + ")");
  }
  auto fp = detail::kth_partials(f, k);
  auto gp = detail::kth_partials(g, k);
  BinaryForm<F> acc = BinaryForm<F>::zero(m + n - 2 * k);
  for (std::size_t i = 0; i <= k; ++i) {
    BinaryForm<F> term = fp[i] * gp[k - i];
    mpz_class c = detail::binomial(k, i);
    if (i % 2) c = -c;
    acc += term * F(Rational(c));
  }
  Rational scale(detail::factorial(m - k) * detail::factorial(n - k), detail::factorial(m) * detail::factorial(n));
  return acc * F(scale);
}

/// Value of a degree-0 form.
template <Field F>
F constant_value(const BinaryForm<F>& f) {
  if (f.degree() != 0) throw InputError("form of degree " + std::to_string(f.degree()) + " is not a constant");
  return f[0];
}

}  // namespace g2
