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

#ifndef FQLAB_FOURIER_H_
#define FQLAB_FOURIER_H_

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "fqlab/caps.h"
#include "fqlab/characters.h"
#include "fqlab/cyclotomic.h"
#include "fqlab/grid.h"
#include "fqlab/pointset.h"

namespace fqlab {

// A scalar produced in either mode.  In exact mode `approx` is the complex
// embedding of `exact`.
struct Value {
  Mode mode = Mode::kFloat;
  CycNum exact;
  std::complex<double> approx;

  static Value of_exact(CycNum v);
  static Value of_float(std::complex<double> v);
  bool is_zero(double tol) const;
};

// Dense values on F_q^d indexed by the grid encoding.  Exact values are
// stored as one common rational scale times integral elements of Z[zeta_p]
// (p int64 coefficients per point).
class GridValues {
 public:
  const Grid& grid() const { return grid_; }
  const Field& field() const { return grid_.field(); }
  Mode mode() const { return mode_; }
  uint64_t size() const { return grid_.size(); }

  // Exact mode only.
  const mpq_class& scale() const { return scale_; }
  CycInt numerator(uint64_t i) const;
  std::span<const int64_t> numerator_coeffs(uint64_t i) const {
    return {num_.data() + i * field().p(), field().p()};
  }
  CycNum exact(uint64_t i) const;

  // Either mode.
  std::complex<double> approx(uint64_t i) const;
  Value value(uint64_t i) const;

 protected:
  GridValues(Grid grid, Mode mode) : grid_(std::move(grid)), mode_(mode) {}

  Grid grid_;
  Mode mode_;
  std::vector<int64_t> num_;
  mpq_class scale_ = 1;
  std::vector<std::complex<double>> fv_;

  friend class SpectralTable;
  friend class GridFunction;
  friend class FourierEngine;
};

// A function f : F_q^d -> C.
class GridFunction : public GridValues {
 public:
  static GridFunction indicator(const PointSet& e, Mode mode);
  static GridFunction from_rationals(const Grid& grid,
                                     std::span<const mpq_class> values);
  static GridFunction from_cycnums(const Grid& grid,
                                   std::span<const CycNum> values);
  static GridFunction from_complex(const Grid& grid,
                                   std::vector<std::complex<double>> values);

  GridFunction to_float() const;

 private:
  using GridValues::GridValues;
  friend class FourierEngine;
};

// The transform f^(m) over all m in F_q^d.
class SpectralTable : public GridValues {
 private:
  using GridValues::GridValues;
  friend class FourierEngine;
};

// f^(m) = q^{-d} sum_x chi(-x.m) f(x), one coordinate at a time.
SpectralTable dft(const GridFunction& f, const Caps& caps = {});
// f(x) = sum_m chi(x.m) F(m).
GridFunction idft(const SpectralTable& spec, const Caps& caps = {});
// Direct double sum over (x, m); test oracle, q^d <= 10^4.
SpectralTable dft_naive(const GridFunction& f);

// |sum_m |f^(m)|^2 - q^{-d} sum_x |f(x)|^2|.  Exact mode returns the signed
// difference as an element of Q(zeta_p).
Value plancherel_defect(const GridFunction& f, const Caps& caps = {});

// sum over m in M of |F(m)|^2.
Value energy_on_set(const SpectralTable& spec, const PointSet& m);

// Pointwise comparison; exact_equal needs both operands exact.
bool exact_equal(const GridValues& a, const GridValues& b);
double sup_distance(const GridValues& a, const GridValues& b);

}  // namespace fqlab

#endif  // FQLAB_FOURIER_H_
