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

#include "fqlab/fourier.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <utility>

#include "fqlab/error.h"

namespace fqlab {

Value Value::of_exact(CycNum v) {
  Value out;
  out.mode = Mode::kExact;
  out.approx = v.to_complex();
  out.exact = std::move(v);
  return out;
}

Value Value::of_float(std::complex<double> v) {
  Value out;
  out.mode = Mode::kFloat;
  out.approx = v;
  return out;
}

bool Value::is_zero(double tol) const {
  if (mode == Mode::kExact) return exact.is_zero();
  return std::abs(approx) <= tol;
}

CycInt GridValues::numerator(uint64_t i) const {
  CycInt out(field().p());
  auto src = numerator_coeffs(i);
  std::copy(src.begin(), src.end(), out.coeffs().begin());
  return out;
}

CycNum GridValues::exact(uint64_t i) const {
  if (mode_ != Mode::kExact) {
    throw Error(Errc::kInvalidArgument, "exact value of a float table");
  }
  return numerator(i).to_cycnum(scale_);
}

std::complex<double> GridValues::approx(uint64_t i) const {
  if (mode_ == Mode::kFloat) return fv_[i];
  return numerator(i).to_complex() * scale_.get_d();
}

Value GridValues::value(uint64_t i) const {
  if (mode_ == Mode::kFloat) return Value::of_float(fv_[i]);
  return Value::of_exact(exact(i));
}

namespace {

int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) {
    throw Error(Errc::kOverflow, "numerator exceeds 64 bits");
  }
  return z.get_si();
}

constexpr int64_t kMagnitudeLimit = int64_t{1} << 62;

}  // namespace

// Builds and transforms GridValues; friend of the value classes.
class FourierEngine {
 public:
  static GridFunction make_function(const Grid& grid, Mode mode) {
    GridFunction f(grid, mode);
    if (mode == Mode::kExact) {
      f.num_.assign(grid.size() * grid.field().p(), 0);
    } else {
      f.fv_.assign(grid.size(), 0.0);
    }
    return f;
  }

  static GridFunction indicator(const PointSet& e, Mode mode) {
    GridFunction f = make_function(e.grid(), mode);
    const uint32_t p = e.field().p();
    for (uint64_t i : e.indices()) {
      if (mode == Mode::kExact) {
        f.num_[i * p] = 1;
      } else {
        f.fv_[i] = 1.0;
      }
    }
    return f;
  }

  // values[i] given by canonical-basis rational coefficients.
  static GridFunction from_rational_coeffs(
      const Grid& grid, const std::vector<std::vector<mpq_class>>& values) {
    GridFunction f = make_function(grid, Mode::kExact);
    mpz_class den = 1;
    for (const auto& v : values) {
      for (const auto& c : v) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      }
    }
    const uint32_t p = grid.field().p();
    for (uint64_t i = 0; i < values.size(); ++i) {
      for (size_t k = 0; k < values[i].size(); ++k) {
        mpq_class scaled = values[i][k] * den;
        f.num_[i * p + k] = to_int64(scaled.get_num());
      }
    }
    f.scale_ = mpq_class(1, den);
    f.scale_.canonicalize();
    return f;
  }

  static GridFunction to_float(const GridFunction& f) {
    if (f.mode_ == Mode::kFloat) return f;
    GridFunction g = make_function(f.grid_, Mode::kFloat);
    for (uint64_t i = 0; i < f.size(); ++i) g.fv_[i] = f.approx(i);
    return g;
  }

  // out(m) = sum_x zeta^{sign * x.m} in(x), per axis.  sign = -1 for the
  // forward transform.
  static void transform(const GridValues& in, GridValues& out, int sign) {
    const Grid& grid = in.grid_;
    const Field& f = grid.field();
    const uint32_t p = f.p();
    const uint32_t q = f.q();
    const uint64_t n = grid.size();
    std::vector<uint32_t> row(q);
    auto fill_row = [&](uint32_t m) {
      for (uint32_t x = 0; x < q; ++x) {
        const uint32_t t = f.trace(f.mul(Fq{x}, Fq{m}));
        row[x] = sign > 0 ? t : (p - t) % p;
      }
    };

    if (in.mode_ == Mode::kExact) {
      std::vector<int64_t> cur = in.num_;
      std::vector<int64_t> next(cur.size());
      for (uint32_t j = 0; j < grid.d(); ++j) {
        guard_magnitude(cur, p, q);
        std::fill(next.begin(), next.end(), 0);
        const uint64_t s = grid.stride(j);
        for (uint32_t m = 0; m < q; ++m) {
          fill_row(m);
          for (uint64_t hi = 0; hi < n; hi += s * q) {
            for (uint64_t lo = 0; lo < s; ++lo) {
              const uint64_t base = hi + lo;
              int64_t* dst = next.data() + (base + m * s) * p;
              for (uint32_t x = 0; x < q; ++x) {
                const int64_t* src = cur.data() + (base + x * s) * p;
                const uint32_t k = row[x];
                for (uint32_t c = 0; c + k < p; ++c) dst[c + k] += src[c];
                for (uint32_t c = p - k; c < p; ++c) dst[c + k - p] += src[c];
              }
            }
          }
        }
        reduce(next, p);
        std::swap(cur, next);
      }
      out.num_ = std::move(cur);
      out.fv_.clear();
      return;
    }

    std::vector<std::complex<double>> w(p);
    for (uint32_t k = 0; k < p; ++k) {
      const double ang = 2.0 * std::numbers::pi * k / p;
      w[k] = {std::cos(ang), std::sin(ang)};
    }
    std::vector<std::complex<double>> cur = in.fv_;
    std::vector<std::complex<double>> next(n);
    for (uint32_t j = 0; j < grid.d(); ++j) {
      const uint64_t s = grid.stride(j);
      for (uint32_t m = 0; m < q; ++m) {
        fill_row(m);
        for (uint64_t hi = 0; hi < n; hi += s * q) {
          for (uint64_t lo = 0; lo < s; ++lo) {
            const uint64_t base = hi + lo;
            std::complex<double> acc = 0.0;
            for (uint32_t x = 0; x < q; ++x) {
              acc += w[row[x]] * cur[base + x * s];
            }
            next[base + m * s] = acc;
          }
        }
      }
      std::swap(cur, next);
    }
    out.fv_ = std::move(cur);
    out.num_.clear();
  }

  // Shift each element so its least coefficient is 0; value unchanged since
  // 1 + zeta + ... + zeta^{p-1} = 0.
  static void reduce(std::vector<int64_t>& v, uint32_t p) {
    for (size_t i = 0; i < v.size(); i += p) {
      const int64_t lo = *std::min_element(v.begin() + i, v.begin() + i + p);
      if (lo) {
        for (uint32_t c = 0; c < p; ++c) v[i + c] -= lo;
      }
    }
  }

  static void guard_magnitude(const std::vector<int64_t>& v, uint32_t p,
                              uint32_t q) {
    int64_t worst = 0;
    for (size_t i = 0; i < v.size(); i += p) {
      int64_t l1 = 0;
      for (uint32_t c = 0; c < p; ++c) l1 += std::llabs(v[i + c]);
      worst = std::max(worst, l1);
    }
    if (worst > kMagnitudeLimit / q) {
      throw Error(Errc::kOverflow, "transform numerators exceed 62 bits");
    }
  }

  static SpectralTable dft(const GridFunction& f, const Caps& caps) {
    check_grid_cap(f.grid_, f.mode_, caps);
    SpectralTable out(f.grid_, f.mode_);
    transform(f, out, -1);
    const double inv = std::pow(static_cast<double>(f.grid_.q()),
                                -static_cast<double>(f.grid_.d()));
    if (f.mode_ == Mode::kExact) {
      out.scale_ = f.scale_ / mpq_class(mpz_class(f.grid_.size()));
    } else {
      for (auto& v : out.fv_) v *= inv;
    }
    return out;
  }

  static GridFunction idft(const SpectralTable& spec, const Caps& caps) {
    check_grid_cap(spec.grid_, spec.mode_, caps);
    GridFunction out(spec.grid_, spec.mode_);
    transform(spec, out, +1);
    out.scale_ = spec.scale_;
    return out;
  }

  static SpectralTable dft_naive(const GridFunction& f) {
    const Grid& grid = f.grid_;
    if (grid.size() > 10000) {
      throw Error(Errc::kCapExceeded, "naive transform limited to q^d <= 10^4");
    }
    const Field& fld = grid.field();
    const uint32_t p = fld.p();
    const uint64_t n = grid.size();
    SpectralTable out(grid, f.mode_);
    if (f.mode_ == Mode::kExact) {
      out.num_.assign(n * p, 0);
    } else {
      out.fv_.assign(n, 0.0);
    }
    GridPoint x(grid.d()), m(grid.d());
    for (uint64_t mi = 0; mi < n; ++mi) {
      grid.decode_into(mi, m);
      for (uint64_t xi = 0; xi < n; ++xi) {
        grid.decode_into(xi, x);
        const uint32_t k = (p - fld.trace(dot(fld, x, m))) % p;
        if (f.mode_ == Mode::kExact) {
          for (uint32_t c = 0; c < p; ++c) {
            out.num_[mi * p + (c + k) % p] += f.num_[xi * p + c];
          }
        } else {
          out.fv_[mi] += std::polar(1.0, 2.0 * std::numbers::pi * k / p) *
                         f.fv_[xi];
        }
      }
    }
    if (f.mode_ == Mode::kExact) {
      out.scale_ = f.scale_ / mpq_class(mpz_class(n));
    } else {
      for (auto& v : out.fv_) v /= static_cast<double>(n);
    }
    return out;
  }
};

GridFunction GridFunction::indicator(const PointSet& e, Mode mode) {
  return FourierEngine::indicator(e, mode);
}

GridFunction GridFunction::from_rationals(const Grid& grid,
                                          std::span<const mpq_class> values) {
  if (values.size() != grid.size()) {
    throw Error(Errc::kShapeMismatch, "expected q^d values");
  }
  std::vector<std::vector<mpq_class>> coeffs;
  coeffs.reserve(values.size());
  for (const auto& v : values) coeffs.push_back({v});
  return FourierEngine::from_rational_coeffs(grid, coeffs);
}

GridFunction GridFunction::from_cycnums(const Grid& grid,
                                        std::span<const CycNum> values) {
  if (values.size() != grid.size()) {
    throw Error(Errc::kShapeMismatch, "expected q^d values");
  }
  std::vector<std::vector<mpq_class>> coeffs;
  coeffs.reserve(values.size());
  for (const auto& v : values) {
    if (v.p() != grid.field().p()) {
      throw Error(Errc::kShapeMismatch, "cyclotomic order differs from p");
    }
    coeffs.emplace_back(v.coeffs().begin(), v.coeffs().end());
  }
  return FourierEngine::from_rational_coeffs(grid, coeffs);
}

GridFunction GridFunction::from_complex(
    const Grid& grid, std::vector<std::complex<double>> values) {
  if (values.size() != grid.size()) {
    throw Error(Errc::kShapeMismatch, "expected q^d values");
  }
  GridFunction f(grid, Mode::kFloat);
  f.fv_ = std::move(values);
  return f;
}

GridFunction GridFunction::to_float() const {
  return FourierEngine::to_float(*this);
}

SpectralTable dft(const GridFunction& f, const Caps& caps) {
  return FourierEngine::dft(f, caps);
}

GridFunction idft(const SpectralTable& spec, const Caps& caps) {
  return FourierEngine::idft(spec, caps);
}

SpectralTable dft_naive(const GridFunction& f) {
  return FourierEngine::dft_naive(f);
}

namespace {

// sum_i |v_i|^2 in exact mode, as (sum of integral norms) * scale^2.
CycNum exact_energy(const GridValues& v, const std::vector<uint64_t>* subset) {
  const uint32_t p = v.field().p();
  CycInt acc(p);
  auto add = [&](uint64_t i) { acc += v.numerator(i).norm_squared(); };
  if (subset) {
    for (uint64_t i : *subset) add(i);
  } else {
    for (uint64_t i = 0; i < v.size(); ++i) add(i);
  }
  return acc.to_cycnum(v.scale() * v.scale());
}

double float_energy(const GridValues& v, const std::vector<uint64_t>* subset) {
  double acc = 0.0;
  if (subset) {
    for (uint64_t i : *subset) acc += std::norm(v.approx(i));
  } else {
    for (uint64_t i = 0; i < v.size(); ++i) acc += std::norm(v.approx(i));
  }
  return acc;
}

}  // namespace

Value plancherel_defect(const GridFunction& f, const Caps& caps) {
  const SpectralTable spec = dft(f, caps);
  const mpq_class inv_n(1, mpz_class(f.size()));
  if (f.mode() == Mode::kExact) {
    CycNum diff = exact_energy(spec, nullptr) - exact_energy(f, nullptr) * inv_n;
    return Value::of_exact(std::move(diff));
  }
  const double diff = float_energy(spec, nullptr) -
                      float_energy(f, nullptr) / static_cast<double>(f.size());
  return Value::of_float(std::abs(diff));
}

Value energy_on_set(const SpectralTable& spec, const PointSet& m) {
  if (!spec.grid().same_shape(m.grid())) {
    throw Error(Errc::kShapeMismatch, "frequency set on a different grid");
  }
  if (spec.mode() == Mode::kExact) {
    return Value::of_exact(exact_energy(spec, &m.indices()));
  }
  return Value::of_float(float_energy(spec, &m.indices()));
}

bool exact_equal(const GridValues& a, const GridValues& b) {
  if (a.mode() != Mode::kExact || b.mode() != Mode::kExact) {
    throw Error(Errc::kInvalidArgument, "exact comparison of float tables");
  }
  if (!a.grid().same_shape(b.grid())) return false;
  for (uint64_t i = 0; i < a.size(); ++i) {
    if (!(a.exact(i) == b.exact(i))) return false;
  }
  return true;
}

double sup_distance(const GridValues& a, const GridValues& b) {
  if (!a.grid().same_shape(b.grid())) {
    throw Error(Errc::kShapeMismatch, "tables on different grids");
  }
  double worst = 0.0;
  for (uint64_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a.approx(i) - b.approx(i)));
  }
  return worst;
}

}  // namespace fqlab
