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

#include "fqlab/characters.h"

#include <cmath>
#include <numbers>

namespace fqlab {

CycNum additive_char(const Field& f, Fq a) {
  return CycNum::zeta_power(f.p(), f.trace(a));
}

std::complex<double> additive_char_float(const Field& f, Fq a) {
  const double ang = 2.0 * std::numbers::pi * f.trace(a) / f.p();
  return {std::cos(ang), std::sin(ang)};
}

CycInt gauss_sum_integral(const Field& f, Fq a) {
  CycInt g(f.p());
  for (uint32_t s = 1; s < f.q(); ++s) {
    const Fq sv{s};
    g.add_zeta(f.trace(f.mul(a, sv)), f.quadratic_char(sv));
  }
  return g;
}

CycNum gauss_sum(const Field& f, Fq a) {
  return gauss_sum_integral(f, a).to_cycnum(1);
}

std::complex<double> gauss_sum_float(const Field& f, Fq a) {
  std::complex<double> g = 0.0;
  for (uint32_t s = 1; s < f.q(); ++s) {
    const Fq sv{s};
    g += static_cast<double>(f.quadratic_char(sv)) *
         additive_char_float(f, f.mul(a, sv));
  }
  return g;
}

std::complex<double> gauss_sum_closed_form(const Field& f) {
  const double root_q = std::sqrt(static_cast<double>(f.q()));
  const double sign = (f.l() % 2 == 1) ? 1.0 : -1.0;  // (-1)^{l-1}
  if (f.p() % 4 == 1) return {sign * root_q, 0.0};
  // i^l cycles through 1, i, -1, -i.
  static constexpr std::complex<double> kPowI[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return sign * kPowI[f.l() % 4] * root_q;
}

}  // namespace fqlab
