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

#include "fqlab/distlab.h"

#include <cmath>
#include <complex>
#include <string>

#include "fqlab/error.h"
#include "fqlab/spheres.h"

namespace fqlab {

namespace {

mpz_class zpow(uint64_t base, uint64_t e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

Fq norm_of_difference(const Field& f, std::span<const Fq> x,
                      std::span<const Fq> y) {
  Fq s = f.zero();
  for (size_t i = 0; i < x.size(); ++i) s = f.add(s, f.square(f.sub(x[i], y[i])));
  return s;
}

Fq pin_value(const Field& f, PinKind kind, std::span<const Fq> x,
             std::span<const Fq> y) {
  return kind == PinKind::kDistance ? norm_of_difference(f, x, y)
                                    : dot(f, x, y);
}

void require_nonempty(const PointSet& e, const char* what) {
  if (e.empty()) throw Error(Errc::kEmptySet, what);
}

void require_pin_shape(const PointSet& e, std::span<const Fq> y) {
  if (y.size() != e.d()) throw Error(Errc::kShapeMismatch, "pin dimension");
}

CountTable pin_counts(const PointSet& e, std::span<const Fq> y, PinKind kind) {
  require_pin_shape(e, y);
  const Field& f = e.field();
  CountTable out{std::vector<uint64_t>(f.q(), 0)};
  for (size_t i = 0; i < e.size(); ++i) {
    ++out.counts[pin_value(f, kind, e.coords(i), y).v];
  }
  return out;
}

mpz_class pin_second_moment(const PointSet& e, PinKind kind) {
  mpz_class total = 0;
  for (size_t j = 0; j < e.size(); ++j) {
    const CountTable c = pin_counts(e, e.coords(j), kind);
    uint64_t s = 0;
    for (uint64_t v : c.counts) s += v * v;
    total += mpz_class(static_cast<unsigned long>(s));
  }
  return total;
}

}  // namespace

uint64_t CountTable::total() const {
  uint64_t s = 0;
  for (uint64_t v : counts) s += v;
  return s;
}

std::vector<Fq> CountTable::support() const {
  std::vector<Fq> out;
  for (uint32_t t = 0; t < counts.size(); ++t) {
    if (counts[t]) out.push_back(Fq{t});
  }
  return out;
}

uint64_t CountTable::support_size() const {
  uint64_t n = 0;
  for (uint64_t v : counts) n += v != 0;
  return n;
}

CountTable nu(const PointSet& e) {
  require_nonempty(e, "nu of the empty set");
  const Field& f = e.field();
  CountTable out{std::vector<uint64_t>(f.q(), 0)};
  for (size_t i = 0; i < e.size(); ++i) {
    ++out.counts[0];
    for (size_t j = i + 1; j < e.size(); ++j) {
      out.counts[norm_of_difference(f, e.coords(i), e.coords(j)).v] += 2;
    }
  }
  return out;
}

std::vector<Fq> distance_set(const PointSet& e) { return nu(e).support(); }

SpectralDefect spectral_nu_check(const PointSet& e, Mode mode,
                                 const Caps& caps) {
  const Grid& grid = e.grid();
  const uint32_t q = grid.q();
  const uint32_t p = grid.field().p();
  const uint64_t n = grid.size();
  const CountTable counts = nu(e);
  const auto spheres = all_spheres(grid, caps);
  const SpectralTable e_hat = dft(GridFunction::indicator(e, mode), caps);
  SpectralDefect out;
  out.mode = mode;
  if (mode == Mode::kExact) {
    std::vector<CycInt> energy;
    energy.reserve(n);
    for (uint64_t m = 0; m < n; ++m) {
      energy.push_back(e_hat.numerator(m).norm_squared());
    }
    // nu(t) = q^{-d} sum_m |N_E(m)|^2 N_t(m) with numerators at scale q^{-d}.
    const int64_t qd = static_cast<int64_t>(n);
    out.exact_zero = true;
    for (uint32_t t = 0; t < q; ++t) {
      const SpectralTable s_hat =
          dft(GridFunction::indicator(spheres[t], Mode::kExact), caps);
      CycInt acc(p);
      for (uint64_t m = 0; m < n; ++m) acc += energy[m] * s_hat.numerator(m);
      CycInt lhs = CycInt::constant(p, static_cast<int64_t>(counts.counts[t]));
      lhs *= qd;
      const CycInt diff = acc - lhs;
      if (!(diff == CycInt(p))) out.exact_zero = false;
      out.max_abs =
          std::max(out.max_abs, std::abs(diff.to_complex()) / static_cast<double>(qd));
    }
    return out;
  }
  const double q2d = static_cast<double>(n) * static_cast<double>(n);
  for (uint32_t t = 0; t < q; ++t) {
    const SpectralTable s_hat =
        dft(GridFunction::indicator(spheres[t], Mode::kFloat), caps);
    std::complex<double> acc = 0.0;
    for (uint64_t m = 0; m < n; ++m) {
      acc += std::norm(e_hat.approx(m)) * s_hat.approx(m);
    }
    out.max_abs = std::max(
        out.max_abs, std::abs(acc * q2d - static_cast<double>(counts.counts[t])));
  }
  return out;
}

IdentityCheck nu_energy_identity(const PointSet& e, const Caps& caps) {
  if (e.d() != 2) throw Error(Errc::kWrongDimension, "identity needs d = 2");
  const uint32_t q = e.grid().q();
  const uint32_t p = e.field().p();
  IdentityCheck out;
  out.lhs = 0;
  for (uint64_t v : nu(e).counts) out.lhs += mpq_class(mpz_class(v) * v);
  const auto sigma = sigma_E(e, caps);
  CycNum sum(p);
  for (const auto& s : sigma) sum += s * s;
  const mpz_class size(static_cast<unsigned long>(e.size()));
  mpq_class tail = mpq_class(size * size * size * size, q) -
                   mpq_class(size * size * q);
  out.rhs = sum * mpq_class(zpow(q, 6)) + CycNum::rational(p, tail);
  return out;
}

IdentityCheck nu_zero_closed_form(const PointSet& e, const Caps& caps) {
  if (e.d() != 2) throw Error(Errc::kWrongDimension, "identity needs d = 2");
  const uint32_t q = e.grid().q();
  if (q % 4 != 1) {
    throw Error(Errc::kWrongFieldClass, "identity needs q = 1 mod 4");
  }
  const uint32_t p = e.field().p();
  IdentityCheck out;
  out.lhs = mpq_class(mpz_class(static_cast<unsigned long>(nu(e).counts[0])));
  const auto sigma = sigma_E(e, caps);
  const mpz_class size(static_cast<unsigned long>(e.size()));
  mpq_class tail = mpq_class(size * size, q) - mpq_class(size);
  out.rhs = sigma[0] * mpq_class(zpow(q, 3)) + CycNum::rational(p, tail);
  return out;
}

double planar_distance_epsilon(uint64_t q) {
  const double qd = static_cast<double>(q);
  const double s3 = std::sqrt(3.0);
  const double num = (1.0 - 2.0 / qd) * (1.0 - 2.0 / qd);
  return num / (1.0 + s3 - s3 * std::pow(qd, -2.0 / 3.0));
}

Verdict planar_distance_check(const PointSet& e) {
  if (e.d() != 2) throw Error(Errc::kWrongDimension, "bound needs d = 2");
  const uint64_t q = e.grid().q();
  const uint64_t need = ceil_power(q, 4, 3);
  if (e.size() < need) {
    return verdict_skipped("|E| = " + std::to_string(e.size()) +
                           " < ceil(q^{4/3}) = " + std::to_string(need));
  }
  double threshold;
  if (q % 4 == 3) {
    threshold = static_cast<double>(q) / (1.0 + std::sqrt(3.0));
  } else if (q > 9) {
    threshold = planar_distance_epsilon(q) * static_cast<double>(q);
  } else {
    return verdict_skipped("no explicit constant for q = 1 mod 4, q <= 9");
  }
  const auto delta = distance_set(e);
  return verdict_greater(Quantity::integer(delta.size()), threshold);
}

CountTable pinned_nu(const PointSet& e, std::span<const Fq> y) {
  require_nonempty(e, "pinned counts of the empty set");
  return pin_counts(e, y, PinKind::kDistance);
}

std::vector<Fq> pinned_distance_set(const PointSet& e, std::span<const Fq> y) {
  return pinned_nu(e, y).support();
}

CountTable eta(const PointSet& e, std::span<const Fq> y) {
  return pin_counts(e, y, PinKind::kDot);
}

std::vector<Fq> pinned_dot_set(const PointSet& e, std::span<const Fq> y) {
  return eta(e, y).support();
}

PinStatistics pool_statistics(const PointSet& e, const PointSet& pool,
                              PinKind kind, const mpq_class& threshold) {
  require_nonempty(e, "pin statistics of the empty set");
  require_nonempty(pool, "empty pin pool");
  if (!e.grid().same_shape(pool.grid())) {
    throw Error(Errc::kShapeMismatch, "pins on a different grid");
  }
  const Field& f = e.field();
  PinStatistics st;
  st.pins = pool.size();
  st.threshold = threshold;
  std::vector<uint64_t> stamp(f.q(), 0);
  for (size_t j = 0; j < pool.size(); ++j) {
    const auto y = pool.coords(j);
    uint64_t image = 0;
    for (size_t i = 0; i < e.size(); ++i) {
      const uint32_t t = pin_value(f, kind, e.coords(i), y).v;
      if (stamp[t] != j + 1) {
        stamp[t] = j + 1;
        ++image;
      }
    }
    st.image_total += image;
    if (mpq_class(static_cast<unsigned long>(image)) > threshold) {
      ++st.above;
      st.witnesses.push_back(pool.indices()[j]);
    }
  }
  st.mean = mpq_class(static_cast<unsigned long>(st.image_total),
                      static_cast<unsigned long>(st.pins));
  st.mean.canonicalize();
  st.fraction_above = static_cast<double>(st.above) / st.pins;
  return st;
}

PinStatistics pin_statistics(const PointSet& e, const mpq_class& threshold) {
  return pool_statistics(e, e, PinKind::kDistance, threshold);
}

PinStatistics dot_pin_statistics(const PointSet& e,
                                 const mpq_class& threshold) {
  return pool_statistics(e, e, PinKind::kDot, threshold);
}

namespace {

Verdict pinned_mean_check(const PointSet& e, PinKind kind) {
  require_nonempty(e, "pinned mean of the empty set");
  const uint64_t q = e.grid().q();
  const uint64_t need = ceil_power(q, e.d() + 1, 2);
  if (e.size() < need) {
    return verdict_skipped("|E| = " + std::to_string(e.size()) +
                           " < ceil(q^{(d+1)/2}) = " + std::to_string(need));
  }
  mpq_class half(q, 2);
  half.canonicalize();
  const PinStatistics st = pool_statistics(e, e, kind, half);
  Verdict v = verdict_greater(st.mean, half);
  v.note = "fraction_above=" + Quantity(st.fraction_above).to_string();
  return v;
}

}  // namespace

Verdict pinned_distance_mean_check(const PointSet& e) {
  return pinned_mean_check(e, PinKind::kDistance);
}

Verdict pinned_dot_mean_check(const PointSet& e) {
  return pinned_mean_check(e, PinKind::kDot);
}

mpz_class pinned_second_moment(const PointSet& e) {
  return pin_second_moment(e, PinKind::kDistance);
}

Verdict pinned_second_moment_check(const PointSet& e) {
  const uint32_t q = e.grid().q();
  const mpz_class size(static_cast<unsigned long>(e.size()));
  mpq_class rhs = mpq_class(size * size * size, q) + mpq_class(zpow(q, e.d()) * size);
  rhs.canonicalize();
  return verdict_less(pinned_second_moment(e), rhs);
}

mpz_class dot_second_moment(const PointSet& e) {
  return pin_second_moment(e, PinKind::kDot);
}

Verdict dot_second_moment_check(const PointSet& e) {
  const uint32_t q = e.grid().q();
  const mpz_class size(static_cast<unsigned long>(e.size()));
  mpq_class rhs = mpq_class(size * size * size, q) +
                  mpq_class(zpow(q, e.d()) * size) -
                  mpq_class(zpow(q, e.d() - 1) * size);
  rhs.canonicalize();
  return verdict_less_equal(dot_second_moment(e), rhs);
}

bool eta_transform_identity(const PointSet& e, const SpectralTable& e_hat,
                            std::span<const Fq> y) {
  require_pin_shape(e, y);
  if (e_hat.mode() != Mode::kExact || !e_hat.grid().same_shape(e.grid())) {
    throw Error(Errc::kInvalidArgument, "needs the exact transform of E");
  }
  const Field& f = e.field();
  const CountTable counts = eta(e, y);
  std::vector<mpq_class> values;
  for (uint64_t c : counts.counts) {
    values.emplace_back(mpz_class(static_cast<unsigned long>(c)));
  }
  const Grid line(e.field_ptr(), 1);
  const SpectralTable eta_hat = dft(GridFunction::from_rationals(line, values));
  const mpq_class lift(zpow(f.q(), e.d() - 1));
  for (uint32_t t = 0; t < f.q(); ++t) {
    const uint64_t idx = e.grid().encode(scale(f, Fq{t}, y));
    if (!(eta_hat.exact(t) == e_hat.exact(idx) * lift)) return false;
  }
  return true;
}

PointSet slice(const PointSet& e, Fq z) {
  if (e.d() < 2) throw Error(Errc::kWrongDimension, "slices need d >= 2");
  if (e.empty()) throw Error(Errc::kZSliceEmpty, "E_z of the empty set");
  if (z.v >= e.grid().q()) throw Error(Errc::kInvalidArgument, "z out of range");
  std::vector<GridPoint> pts;
  pts.reserve(e.size());
  for (size_t i = 0; i < e.size(); ++i) {
    GridPoint x = e.point(i);
    x.back() = z;
    pts.push_back(std::move(x));
  }
  return PointSet::from_points(e.grid(), pts);
}

Verdict slice_pinned_check(const PointSet& e, Fq z, PinKind kind,
                           PinStatistics* stats) {
  if (kind == PinKind::kDot && z == Fq{0}) {
    throw Error(Errc::kInvalidArgument, "dot-product slices need z != 0");
  }
  const PointSet ez = slice(e, z);
  const uint32_t q = e.grid().q();
  mpq_class threshold(q, kind == PinKind::kDistance ? 3 : 2);
  threshold.canonicalize();
  PinStatistics st = pool_statistics(e, ez, kind, threshold);
  const mpz_class product = mpz_class(static_cast<unsigned long>(e.size())) *
                            static_cast<unsigned long>(ez.size());
  Verdict v;
  if (product < zpow(q, e.d())) {
    v = verdict_skipped("|E||E_z| = " + product.get_str() + " < q^d");
  } else {
    v = verdict_greater(st.mean, threshold);
    v.note = "fraction_above=" + Quantity(st.fraction_above).to_string();
  }
  if (stats) *stats = std::move(st);
  return v;
}

}  // namespace fqlab
