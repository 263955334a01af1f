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

#include "fqlab/spheres.h"

#include <cmath>

#include "fqlab/characters.h"
#include "fqlab/error.h"

namespace fqlab {

namespace {

mpz_class zpow(uint64_t base, uint64_t e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

int64_t ipow(int64_t base, uint32_t e) {
  int64_t out = 1;
  while (e--) out *= base;
  return out;
}

}  // namespace

std::vector<Fq> norm_table(const Grid& grid) {
  const Field& f = grid.field();
  const uint32_t q = f.q();
  std::vector<Fq> out(grid.size());
  for (uint64_t i = 1; i < grid.size(); ++i) {
    out[i] = f.add(f.square(Fq{static_cast<uint32_t>(i % q)}), out[i / q]);
  }
  return out;
}

Sphere sphere_points(const Grid& grid, Fq t, const Caps& caps) {
  check_grid_cap(grid, Mode::kFloat, caps);
  const auto norms = norm_table(grid);
  std::vector<uint64_t> idx;
  for (uint64_t i = 0; i < grid.size(); ++i) {
    if (norms[i] == t) idx.push_back(i);
  }
  return Sphere{t, PointSet::from_indices(grid, idx)};
}

std::vector<PointSet> all_spheres(const Grid& grid, const Caps& caps) {
  check_grid_cap(grid, Mode::kFloat, caps);
  const auto norms = norm_table(grid);
  std::vector<std::vector<uint64_t>> idx(grid.q());
  for (uint64_t i = 0; i < grid.size(); ++i) idx[norms[i].v].push_back(i);
  std::vector<PointSet> out;
  out.reserve(grid.q());
  for (const auto& v : idx) out.push_back(PointSet::from_indices(grid, v));
  return out;
}

int64_t sphere_size_closed_form(const Field& f, uint32_t d, Fq t) {
  const int64_t q = f.q();
  const Fq minus_one = f.minus_one();
  if (d % 2 == 1) {
    const Fq sign = ((d - 1) / 2) % 2 ? minus_one : f.one();
    return ipow(q, d - 1) +
           ipow(q, (d - 1) / 2) * f.quadratic_char(f.mul(sign, t));
  }
  const Fq sign = (d / 2) % 2 ? minus_one : f.one();
  const int64_t mu = t == f.zero() ? q - 1 : -1;
  return ipow(q, d - 1) + mu * ipow(q, (d - 2) / 2) * f.quadratic_char(sign);
}

CycInt sphere_fourier_constant(const Field& f, uint32_t d) {
  const CycInt g = gauss_sum_integral(f, f.one());
  CycInt c = CycInt::constant(f.p(), 1);
  for (uint32_t i = 0; i < d; ++i) c = c * g;
  if (d % 2 == 1) c *= f.quadratic_char(f.minus_one());
  return c;
}

namespace {

// sum_{s != 0} psi^d(s) zeta^{Tr(norm_m / (4s) + s t)}
CycInt sphere_sum(const Field& f, uint32_t d, Fq t, Fq norm_m) {
  const Fq four = f.from_int(4);
  CycInt z(f.p());
  for (uint32_t s = 1; s < f.q(); ++s) {
    const Fq sv{s};
    const Fq arg = f.add(f.div(norm_m, f.mul(four, sv)), f.mul(sv, t));
    const int sign = d % 2 == 1 ? f.quadratic_char(sv) : 1;
    z.add_zeta(f.trace(arg), sign);
  }
  return z;
}

}  // namespace

CycInt sphere_fourier_scaled(const Field& f, uint32_t d, Fq t, Fq norm_m,
                             bool m_is_zero, const CycInt& constant) {
  CycInt out = constant * sphere_sum(f, d, t, norm_m);
  if (m_is_zero) {
    const mpz_class qd = zpow(f.q(), d);
    out += CycInt::constant(f.p(), qd.get_si());
  }
  return out;
}

Value sphere_fourier_closed_form(const Field& f, uint32_t d, Fq t,
                                 std::span<const Fq> m, Mode mode) {
  if (m.size() != d) throw Error(Errc::kShapeMismatch, "frequency dimension");
  const Fq nm = norm(f, m);
  bool zero = true;
  for (Fq c : m) zero = zero && c == f.zero();
  if (mode == Mode::kExact) {
    const CycInt scaled =
        sphere_fourier_scaled(f, d, t, nm, zero, sphere_fourier_constant(f, d));
    return Value::of_exact(scaled.to_cycnum(mpq_class(1, zpow(f.q(), d + 1))));
  }
  const double q = f.q();
  std::complex<double> c = std::pow(gauss_sum_float(f, f.one()), d);
  if (d % 2 == 1) c *= static_cast<double>(f.quadratic_char(f.minus_one()));
  const std::complex<double> v =
      c * sphere_sum(f, d, t, nm).to_complex() * std::pow(q, -double(d) - 1);
  return Value::of_float(zero ? v + 1.0 / q : v);
}

ClosedFormCheck verify_sphere_fourier_closed_form(const Grid& grid,
                                                  const Caps& caps) {
  check_grid_cap(grid, Mode::kExact, caps);
  const Field& f = grid.field();
  const uint32_t q = f.q();
  const uint32_t d = grid.d();
  const CycInt constant = sphere_fourier_constant(f, d);
  const auto norms = norm_table(grid);
  const auto spheres = all_spheres(grid, caps);
  ClosedFormCheck out;
  for (uint32_t t = 0; t < q; ++t) {
    std::vector<CycInt> by_norm;
    by_norm.reserve(q);
    for (uint32_t n = 0; n < q; ++n) {
      by_norm.push_back(
          sphere_fourier_scaled(f, d, Fq{t}, Fq{n}, false, constant));
    }
    const CycInt at_zero =
        sphere_fourier_scaled(f, d, Fq{t}, f.zero(), true, constant);
    const SpectralTable spec =
        dft(GridFunction::indicator(spheres[t], Mode::kExact), caps);
    // q^{d+1} S^ = q * numerator when the scale is q^{-d}.
    if (spec.scale() != mpq_class(1, zpow(q, d))) {
      throw Error(Errc::kInvalidArgument, "unexpected transform scale");
    }
    for (uint64_t m = 0; m < grid.size(); ++m) {
      CycInt lhs = spec.numerator(m);
      lhs *= q;
      const CycInt& rhs = m == 0 ? at_zero : by_norm[norms[m].v];
      ++out.compared;
      if (!(lhs == rhs)) ++out.mismatches;
    }
  }
  return out;
}

SphereIdentityReport verify_sphere_identities(const Grid& grid, const Caps& caps) {
  check_grid_cap(grid, Mode::kExact, caps);
  const Field& f = grid.field();
  const uint32_t q = f.q();
  const uint32_t p = f.p();
  const uint32_t d = grid.d();
  const uint64_t n = grid.size();
  const auto spheres = all_spheres(grid, caps);

  SphereIdentityReport r;
  r.sum_sizes_squared = 0;
  for (const auto& s : spheres) r.sum_sizes_squared += mpz_class(s.size()) * s.size();
  r.sum_sizes_squared_expected =
      zpow(q, 2 * d - 1) + zpow(q, d) - zpow(q, d - 1);

  // Numerators carry the scale q^{-d}.
  const int64_t target = mpz_class(zpow(q, d) - zpow(q, d - 1)).get_si();
  r.energy_expected = mpq_class(target, zpow(q, 2 * d));
  r.energy_expected.canonicalize();
  r.weighted_bound = mpq_class(q - 1, q);
  r.weighted_bound.canonicalize();

  std::vector<CycInt> energy(n, CycInt(p));
  std::vector<CycInt> weighted(n, CycInt(p));
  for (uint32_t t = 0; t < q; ++t) {
    const SpectralTable spec =
        dft(GridFunction::indicator(spheres[t], Mode::kExact), caps);
    const int64_t size = static_cast<int64_t>(spheres[t].size());
    for (uint64_t m = 1; m < n; ++m) {
      CycInt v = spec.numerator(m);
      energy[m] += v.norm_squared();
      v *= size;
      weighted[m] += v;
    }
  }
  const mpq_class inv_qd(1, zpow(q, d));
  bool have_max = false;
  for (uint64_t m = 1; m < n; ++m) {
    ++r.energy_checked;
    if (!(energy[m] == CycInt::constant(p, target))) ++r.energy_failures;
    ++r.weighted_checked;
    if (!weighted[m].is_rational()) {
      ++r.weighted_nonrational;
      continue;
    }
    const int64_t w = weighted[m].rational_value();
    if (w > target) ++r.weighted_failures;
    const mpq_class val = mpq_class(w) * inv_qd;
    if (!have_max || val > r.weighted_max) {
      r.weighted_max = val;
      have_max = true;
    }
  }
  return r;
}

std::vector<CycNum> sigma_E(const SpectralTable& e_hat) {
  if (e_hat.mode() != Mode::kExact) {
    throw Error(Errc::kInvalidArgument, "exact sigma_E needs an exact table");
  }
  const Grid& grid = e_hat.grid();
  const uint32_t p = grid.field().p();
  const auto norms = norm_table(grid);
  std::vector<CycInt> acc(grid.q(), CycInt(p));
  for (uint64_t m = 0; m < grid.size(); ++m) {
    acc[norms[m].v] += e_hat.numerator(m).norm_squared();
  }
  const mpq_class s2 = e_hat.scale() * e_hat.scale();
  std::vector<CycNum> out;
  out.reserve(acc.size());
  for (const auto& a : acc) out.push_back(a.to_cycnum(s2));
  return out;
}

std::vector<CycNum> sigma_E(const PointSet& e, const Caps& caps) {
  return sigma_E(dft(GridFunction::indicator(e, Mode::kExact), caps));
}

std::vector<double> sigma_E_float(const PointSet& e, const Caps& caps) {
  const SpectralTable spec = dft(GridFunction::indicator(e, Mode::kFloat), caps);
  const auto norms = norm_table(e.grid());
  std::vector<double> out(e.grid().q(), 0.0);
  for (uint64_t m = 0; m < spec.size(); ++m) {
    out[norms[m].v] += std::norm(spec.approx(m));
  }
  return out;
}

MattilaResult mattila(const PointSet& e, const Caps& caps) {
  if (e.empty()) throw Error(Errc::kEmptySet, "M_E(q) of the empty set");
  const auto sigma = sigma_E(e, caps);
  const uint32_t q = e.grid().q();
  const uint32_t p = e.field().p();
  CycNum sum(p);
  for (uint32_t t = 1; t < q; ++t) sum += sigma[t] * sigma[t];
  const mpz_class e4 = zpow(e.size(), 4);
  MattilaResult r;
  r.m = sum.rational_value() * mpq_class(zpow(q, 3 * e.d() + 1), e4);
  r.m.canonicalize();
  if (r.m <= 1) {
    r.bound = q;
  } else {
    r.bound = mpq_class(q) / r.m;
  }
  return r;
}

RestrictionResult restriction_max(const PointSet& e, Mode mode,
                                  const Caps& caps) {
  if (e.empty()) throw Error(Errc::kEmptySet, "restriction of the empty set");
  if (e.d() != 2) throw Error(Errc::kWrongDimension, "restriction needs d = 2");
  std::vector<double> sigma;
  if (mode == Mode::kExact) {
    for (const auto& s : sigma_E(e, caps)) sigma.push_back(s.to_complex().real());
  } else {
    sigma = sigma_E_float(e, caps);
  }
  RestrictionResult r;
  r.argmax = Fq{1};
  r.lhs = sigma[1];
  for (uint32_t t = 2; t < sigma.size(); ++t) {
    if (sigma[t] > r.lhs) {
      r.lhs = sigma[t];
      r.argmax = Fq{t};
    }
  }
  const double q = e.grid().q();
  r.bound = std::sqrt(3.0) * std::pow(static_cast<double>(e.size()), 1.5) /
            (q * q * q);
  r.ratio = r.lhs / r.bound;
  return r;
}

}  // namespace fqlab
