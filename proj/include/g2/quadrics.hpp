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

#include <string>

#include "g2/binary_form.hpp"
#include "g2/error.hpp"
#include "g2/transvectant.hpp"

namespace g2 {

/// The covariant i = (f,f)_4 together with the three quadrics
/// y1 = (f,i)_4, y2 = (i,y1)_2, y3 = (i,y2)_2 of a sextic.
///
/// No rescaling is needed: with the factorial normalization the pairings
/// (y_i, y_j)_2 are exactly the entries of the Clebsch conic matrix.
template <Field F>
struct MestreQuadrics {
  BinaryForm<F> i;
  BinaryForm<F> y1;
  BinaryForm<F> y2;
  BinaryForm<F> y3;
};

template <Field F>
void require_sextic(const BinaryForm<F>& f) {
  if (f.degree() != 6) throw InputError("expected a sextic, got a form of degree " + std::to_string(f.degree()));
}

template <Field F>
MestreQuadrics<F> mestre_quadrics(const BinaryForm<F>& f) {
  require_sextic(f);
  MestreQuadrics<F> q;
  q.i = transvectant(f, f, 4);
  q.y1 = transvectant(f, q.i, 4);
  q.y2 = transvectant(q.i, q.y1, 2);
  q.y3 = transvectant(q.i, q.y2, 2);
  return q;
}

/// R = det(rows y1, y2, y3 in the basis x^2, xy, y^2) / 2.
template <Field F>
F quadric_determinant_R(const BinaryForm<F>& y1, const BinaryForm<F>& y2, const BinaryForm<F>& y3) {
  if (y1.degree() != 2 || y2.degree() != 2 || y3.degree() != 2) {
    throw InputError("quadric determinant needs three quadrics");
  }
  F det = y1[0] * (y2[1] * y3[2] - y2[2] * y3[1]) - y1[1] * (y2[0] * y3[2] - y2[2] * y3[0]) +
          y1[2] * (y2[0] * y3[1] - y2[1] * y3[0]);
  return det / F(2);
}

template <Field F>
F quadric_determinant_R(const MestreQuadrics<F>& q) {
  return quadric_determinant_R(q.y1, q.y2, q.y3);
}

}  // namespace g2
