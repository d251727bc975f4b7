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

#include <stdexcept>
#include <string>
#include <string_view>

namespace g2 {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: parse failures, wrong degrees, out-of-range orders.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Exact arithmetic failures: division by zero, mixing Q(sqrt s) with Q(sqrt s')
/// for s != s'.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// The squarefree part of a radicand could not be certified within the
/// configured factoring budget.
class UnfactoredRadicand : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// Named loci on which a construction is undefined.
enum class Locus {
  zero_tuple,               // [0:0:0:0]
  not_genus_two,            // I10 = 0
  d_locus,                  // Clebsch D = 0 (mestre route)
  minor_vanishes,           // A22*A33 - A23^2 = 0
  degenerate_intersection,  // pullback vanishes identically
  appendix_degenerate,      // closed-form sextic vanishes identically
  formula_pole,             // a rational formula is evaluated at its pole
  h1_locus,                 // chi10 = 0
  zero_divisor,             // a ratio of forms with a vanishing denominator
  zero_radicand,            // squarefree part of zero requested
};

constexpr std::string_view locus_name(Locus locus) noexcept {
  switch (locus) {
    case Locus::zero_tuple: return "zero_tuple";
    case Locus::not_genus_two: return "not_genus_two";
    case Locus::d_locus: return "d_locus";
    case Locus::minor_vanishes: return "minor_vanishes";
    case Locus::degenerate_intersection: return "degenerate_intersection";
    case Locus::appendix_degenerate: return "appendix_degenerate";
    case Locus::formula_pole: return "formula_pole";
    case Locus::h1_locus: return "h1_locus";
    case Locus::zero_divisor: return "zero_divisor";
    case Locus::zero_radicand: return "zero_radicand";
  }
  return "unknown";
}

/// A well-formed input that lies on a locus where the requested construction
/// does not exist. Callers typically route these to classification.
class DegenerateError : public Error {
 public:
  DegenerateError(Locus locus, const std::string& what) : Error(what), locus_(locus) {}
  Locus locus() const noexcept { return locus_; }

 private:
  Locus locus_;
};

/// An identity that must hold exactly did not. Always a bug, never an input problem.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace g2
