// Copyright 2026 The fqlab Authors.
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

#ifndef FQLAB_CHARACTERS_H_
#define FQLAB_CHARACTERS_H_

#include <complex>

#include "fqlab/cyclotomic.h"
#include "fqlab/field.h"

namespace fqlab {

// Exact (cyclotomic) or double-precision complex evaluation.
enum class Mode { kExact, kFloat };

// Exact when q <= 31, float otherwise.
inline Mode default_mode(const Field& f) {
  return f.q() <= 31 ? Mode::kExact : Mode::kFloat;
}

// The canonical additive character chi(a) = zeta_p^{Tr(a)}.
CycNum additive_char(const Field& f, Fq a);
std::complex<double> additive_char_float(const Field& f, Fq a);

// The quadratic character psi.
inline int quadratic_char(const Field& f, Fq a) { return f.quadratic_char(a); }

// G_a(psi, chi) = sum over s != 0 of psi(s) chi(a s), by direct summation.
CycInt gauss_sum_integral(const Field& f, Fq a);
CycNum gauss_sum(const Field& f, Fq a);
std::complex<double> gauss_sum_float(const Field& f, Fq a);

// G_1 for the canonical character in closed form:
//   (-1)^{l-1} sqrt(q)        if p = 1 mod 4,
//   (-1)^{l-1} i^l sqrt(q)    if p = 3 mod 4.
std::complex<double> gauss_sum_closed_form(const Field& f);

}  // namespace fqlab

#endif  // FQLAB_CHARACTERS_H_
