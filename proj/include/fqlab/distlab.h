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

#ifndef FQLAB_DISTLAB_H_
#define FQLAB_DISTLAB_H_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "fqlab/caps.h"
#include "fqlab/cyclotomic.h"
#include "fqlab/fourier.h"
#include "fqlab/pointset.h"
#include "fqlab/verdict.h"

namespace fqlab {

// Counts indexed by field element.
struct CountTable {
  std::vector<uint64_t> counts;

  uint64_t total() const;
  std::vector<Fq> support() const;
  uint64_t support_size() const;
  uint64_t operator[](Fq t) const { return counts[t.v]; }
};

enum class PinKind { kDistance, kDot };

// nu(t) = #{(x, y) in E x E : ||x - y|| = t}.
CountTable nu(const PointSet& e);
std::vector<Fq> distance_set(const PointSet& e);

// Largest |nu(t) - q^{2d} sum_m |E^(m)|^2 S_t^(m)| over t.  In exact mode
// `exact_zero` says whether every defect vanishes identically.
struct SpectralDefect {
  Mode mode = Mode::kExact;
  bool exact_zero = false;
  double max_abs = 0.0;
};
SpectralDefect spectral_nu_check(const PointSet& e, Mode mode,
                                 const Caps& caps = {});

// An exact identity lhs == rhs with lhs an integer.
struct IdentityCheck {
  mpq_class lhs;
  CycNum rhs;

  bool holds() const { return rhs.is_rational() && rhs.rational_value() == lhs; }
  double defect() const { return std::abs((rhs.to_complex() - lhs.get_d())); }
};

// d = 2:  sum_t nu(t)^2
//   = q^6 sum_t (sum_{m in S_t} |E^(m)|^2)^2 + q^{-1}|E|^4 - q|E|^2.
IdentityCheck nu_energy_identity(const PointSet& e, const Caps& caps = {});

// d = 2, q = 1 mod 4:
//   nu(0) = q^{-1}|E|^2 + q^3 sum_{||m|| = 0} |E^(m)|^2 - |E|.
IdentityCheck nu_zero_closed_form(const PointSet& e, const Caps& caps = {});

// (1 - 2/q)^2 / (1 + sqrt(3) - sqrt(3) q^{-2/3}).
double planar_distance_epsilon(uint64_t q);
// d = 2, |E| >= ceil(q^{4/3}):  |Delta(E)| > q/(1+sqrt 3) when q = 3 mod 4,
// and |Delta(E)| > eps_q q when q = 1 mod 4, q > 9.  Otherwise skipped.
Verdict planar_distance_check(const PointSet& e);

// nu_y(t) = #{x in E : ||x - y|| = t}.
CountTable pinned_nu(const PointSet& e, std::span<const Fq> y);
std::vector<Fq> pinned_distance_set(const PointSet& e, std::span<const Fq> y);
// eta_y(s) = #{x in E : x . y = s}.
CountTable eta(const PointSet& e, std::span<const Fq> y);
std::vector<Fq> pinned_dot_set(const PointSet& e, std::span<const Fq> y);

// Image sizes over a pool of pins.
struct PinStatistics {
  uint64_t pins = 0;
  uint64_t image_total = 0;  // sum over pins of the image size
  mpq_class mean;
  mpq_class threshold;
  uint64_t above = 0;        // pins with image size > threshold
  double fraction_above = 0.0;
  std::vector<uint64_t> witnesses;  // grid indices of those pins
};
PinStatistics pool_statistics(const PointSet& e, const PointSet& pool,
                              PinKind kind, const mpq_class& threshold);
// Pins drawn from E itself.
PinStatistics pin_statistics(const PointSet& e, const mpq_class& threshold);
PinStatistics dot_pin_statistics(const PointSet& e,
                                 const mpq_class& threshold);

// |E| >= ceil(q^{(d+1)/2}):  mean over y in E of the image size > q/2.
Verdict pinned_distance_mean_check(const PointSet& e);
Verdict pinned_dot_mean_check(const PointSet& e);

// sum_{y in E} sum_t nu_y(t)^2 < q^{-1}|E|^3 + q^d |E|.
mpz_class pinned_second_moment(const PointSet& e);
Verdict pinned_second_moment_check(const PointSet& e);
// sum_{y in E} sum_s eta_y(s)^2 <= |E|^3/q + q^d|E| - q^{d-1}|E|.
mpz_class dot_second_moment(const PointSet& e);
Verdict dot_second_moment_check(const PointSet& e);

// eta_y^(t) = q^{d-1} E^(t y) for all t, exactly.  `e_hat` is the exact
// transform of the indicator of E.
bool eta_transform_identity(const PointSet& e, const SpectralTable& e_hat,
                            std::span<const Fq> y);

// E_z = pi(E) x {z}, pi dropping the last coordinate.
PointSet slice(const PointSet& e, Fq z);
// Pins y~ in E_z against all of E.  Distance threshold q/3, dot threshold
// q/2 (z != 0); asserted when |E||E_z| >= q^d, otherwise skipped.
Verdict slice_pinned_check(const PointSet& e, Fq z, PinKind kind,
                           PinStatistics* stats = nullptr);

}  // namespace fqlab

#endif  // FQLAB_DISTLAB_H_
