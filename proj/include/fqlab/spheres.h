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

#ifndef FQLAB_SPHERES_H_
#define FQLAB_SPHERES_H_

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "fqlab/caps.h"
#include "fqlab/cyclotomic.h"
#include "fqlab/fourier.h"
#include "fqlab/pointset.h"

namespace fqlab {

struct Sphere {
  Fq t;
  PointSet points;
};

// ||x|| for every grid index.
std::vector<Fq> norm_table(const Grid& grid);

// S_t = {x : ||x|| = t} by exhaustive scan.
Sphere sphere_points(const Grid& grid, Fq t, const Caps& caps = {});
// S_0, ..., S_{q-1}, indexed by element.
std::vector<PointSet> all_spheres(const Grid& grid, const Caps& caps = {});

int64_t sphere_size_closed_form(const Field& f, uint32_t d, Fq t);

// psi^d(-1) G_1^d as an element of Z[zeta_p].
CycInt sphere_fourier_constant(const Field& f, uint32_t d);

// q^{d+1} S_t^(m) via the closed form, for a frequency of norm
// `norm_m`; `m_is_zero` adds the q^d delta term.  `constant` is
// sphere_fourier_constant(f, d).
CycInt sphere_fourier_scaled(const Field& f, uint32_t d, Fq t, Fq norm_m,
                             bool m_is_zero, const CycInt& constant);

// S_t^(m) = q^{-1} delta_0(m)
//         + q^{-d-1} psi^d(-1) G^d sum_{s != 0} chi(||m||/(4s) + s t) psi^d(s).
Value sphere_fourier_closed_form(const Field& f, uint32_t d, Fq t,
                                 std::span<const Fq> m, Mode mode);

struct ClosedFormCheck {
  uint64_t compared = 0;
  uint64_t mismatches = 0;
};
// Closed form against the transform of every sphere indicator, exactly,
// at every frequency.
ClosedFormCheck verify_sphere_fourier_closed_form(const Grid& grid,
                                                  const Caps& caps = {});

struct SphereIdentityReport {
  // (i) sum_t |S_t|^2 against q^{2d-1} + q^d - q^{d-1}.
  mpz_class sum_sizes_squared;
  mpz_class sum_sizes_squared_expected;
  // (ii) sum_t |S_t^(m)|^2 = q^{-d} - q^{-d-1} for every m != 0.
  uint64_t energy_checked = 0;
  uint64_t energy_failures = 0;
  mpq_class energy_expected;
  // (iii) sum_t |S_t| S_t^(m) <= 1 - 1/q for every m != 0.
  uint64_t weighted_checked = 0;
  uint64_t weighted_failures = 0;
  uint64_t weighted_nonrational = 0;
  mpq_class weighted_max;
  mpq_class weighted_bound;

  bool sizes_ok() const { return sum_sizes_squared == sum_sizes_squared_expected; }
  bool energy_ok() const { return energy_failures == 0; }
  bool weighted_ok() const {
    return weighted_failures == 0 && weighted_nonrational == 0;
  }
  bool ok() const { return sizes_ok() && energy_ok() && weighted_ok(); }
};
SphereIdentityReport verify_sphere_identities(const Grid& grid, const Caps& caps = {});

// sigma_E(t) = sum_{||m|| = t} |E^(m)|^2 for each t.  Values lie in the real
// subfield of Q(zeta_p); they are rational when p = 3 but not in general.
std::vector<CycNum> sigma_E(const PointSet& e, const Caps& caps = {});
std::vector<CycNum> sigma_E(const SpectralTable& e_hat);
std::vector<double> sigma_E_float(const PointSet& e, const Caps& caps = {});

struct MattilaResult {
  mpq_class m;      // q^{3d+1} |E|^{-4} sum_{t != 0} sigma_E(t)^2
  mpq_class bound;  // q if m <= 1, else q / m
};
MattilaResult mattila(const PointSet& e, const Caps& caps = {});

struct RestrictionResult {
  double lhs = 0.0;    // max over t != 0 of sigma_E(t)
  Fq argmax;
  double bound = 0.0;  // sqrt(3) |E|^{3/2} / q^3
  double ratio = 0.0;  // lhs / bound
};
RestrictionResult restriction_max(const PointSet& e, Mode mode,
                                  const Caps& caps = {});

}  // namespace fqlab

#endif  // FQLAB_SPHERES_H_
