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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fqlab/characters.h"
#include "fqlab/constructions.h"
#include "fqlab/distlab.h"
#include "fqlab/error.h"
#include "fqlab/fourier.h"
#include "fqlab/kstar.h"
#include "fqlab/rng.h"
#include "fqlab/simplex.h"
#include "fqlab/spheres.h"
#include "fqlab/sumset.h"
#include "fqlab/verdict.h"
#include "oracle/census_oracle.h"

namespace fqlab {
namespace {

constexpr double kTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; the first few are kept for the report line.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  uint64_t checks() const { return checks_; }
  Outcome done(std::string detail) const {
    if (failures_) detail += ", " + std::to_string(failures_) + " failed: " + first_;
    return {failures_ == 0, detail};
  }

 private:
  uint64_t checks_ = 0;
  uint64_t failures_ = 0;
  std::string first_;
};

std::string qd(uint64_t q, uint32_t d) {
  return "q=" + std::to_string(q) + " d=" + std::to_string(d);
}

PointSet random_set(const Grid& grid, uint64_t size, CounterRng& rng) {
  return PointSet::from_indices(grid, rng.sample_without_replacement(grid.size(), size));
}

PointSet random_sized_set(const Grid& grid, CounterRng& rng) {
  return random_set(grid, 1 + rng.uniform(grid.size()), rng);
}

Caps large_caps() {
  Caps c;
  c.exact_points = 2'000'000;
  c.float_points = 2'000'000;
  return c;
}

uint64_t ipow(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// 1. Sphere identities.
Outcome sphere_identities() {
  Checker c;
  std::vector<std::pair<uint64_t, uint32_t>> cases;
  for (uint64_t q : {3, 5, 7, 9, 11, 13, 25, 27}) {
    for (uint32_t d : {2, 3}) cases.emplace_back(q, d);
  }
  for (uint64_t q : {3, 5, 7}) cases.emplace_back(q, 4);
  std::string spot;
  uint64_t freqs = 0;
  for (auto [q, d] : cases) {
    if (ipow(q, d) > 2'000'000) continue;
    const SphereIdentityReport r = verify_sphere_identities(Grid(Field::of_order(q), d), large_caps());
    c.expect(r.sizes_ok(), "(i) " + qd(q, d));
    c.expect(r.energy_ok(), "(ii) " + qd(q, d));
    c.expect(r.weighted_ok(), "(iii) " + qd(q, d));
    freqs += r.energy_checked;
    if (q == 3 && d == 2) {
      spot = r.sum_sizes_squared.get_str();
      c.expect(r.sum_sizes_squared == 33, "spot value " + spot);
    }
  }
  return c.done(std::to_string(cases.size()) + " (q,d) pairs, " + std::to_string(freqs) +
                " frequencies m != 0, q=3 d=2 sum |S_t|^2 = " + spot);
}

// 2. Gauss sums.
Outcome gauss_sums() {
  Checker c;
  double worst = 0.0;
  for (uint64_t q : {3, 5, 7, 9, 11, 13, 25, 27, 49, 81, 121, 125}) {
    const FieldPtr f = Field::of_order(q);
    const CycNum g = gauss_sum(*f, f->one());
    const double err = std::abs(g.to_complex() - gauss_sum_closed_form(*f));
    worst = std::max(worst, err);
    c.expect(err <= kTol, "closed form q=" + std::to_string(q));
    const CycNum g2 = g * g;
    const mpq_class want(f->quadratic_char(f->minus_one()) * static_cast<int64_t>(q));
    c.expect(g2.is_rational() && g2.rational_value() == want, "G^2 q=" + std::to_string(q));
  }
  std::ostringstream os;
  os << "12 fields, max |G - closed form| = " << worst << ", G^2 = psi(-1) q exact";
  return c.done(os.str());
}

// 3. Sphere transform closed form.
Outcome sphere_closed_form() {
  Checker c;
  uint64_t compared = 0;
  for (uint64_t q : {3, 5, 7, 9}) {
    for (uint32_t d : {2, 3}) {
      const ClosedFormCheck r =
          verify_sphere_fourier_closed_form(Grid(Field::of_order(q), d), large_caps());
      compared += r.compared;
      c.expect(r.mismatches == 0, qd(q, d));
    }
  }
  return c.done(std::to_string(compared) + " (t, m) values compared exactly");
}

// 4. Transform round trips and Plancherel.
Outcome fourier_core() {
  Checker c;
  CounterRng rng(4);
  // Exact round trips, q^d <= 10^4, on indicators and rational functions.
  const std::vector<std::pair<uint64_t, uint32_t>> exact_cases = {
      {3, 2}, {5, 2}, {9, 2}, {25, 2}, {97, 2}, {3, 8}, {7, 4}, {13, 3}, {27, 2}, {5, 5}};
  for (auto [q, d] : exact_cases) {
    const Grid g(Field::of_order(q), d);
    const GridFunction ind = GridFunction::indicator(random_sized_set(g, rng), Mode::kExact);
    c.expect(exact_equal(idft(dft(ind, large_caps()), large_caps()), ind),
             "exact indicator " + qd(q, d));
    std::vector<mpq_class> vals(g.size());
    for (auto& v : vals) {
      v = mpq_class(static_cast<long>(rng.uniform(21)) - 10, 1 + rng.uniform(6));
    }
    const GridFunction fr = GridFunction::from_rationals(g, vals);
    c.expect(exact_equal(idft(dft(fr, large_caps()), large_caps()), fr),
             "exact rationals " + qd(q, d));
  }
  // Float round trips, q^d <= 10^6.
  double worst = 0.0;
  const std::vector<std::pair<uint64_t, uint32_t>> float_cases = {
      {997, 2}, {31, 4}, {11, 5}, {3, 12}, {125, 2}, {243, 2}};
  for (auto [q, d] : float_cases) {
    const Grid g(Field::of_order(q), d);
    std::vector<std::complex<double>> vals(g.size());
    for (auto& v : vals) v = {rng.unit() - 0.5, rng.unit() - 0.5};
    const GridFunction f = GridFunction::from_complex(g, vals);
    const double err = sup_distance(idft(dft(f, large_caps()), large_caps()), f);
    worst = std::max(worst, err);
    c.expect(err <= kTol, "float " + qd(q, d));
  }
  // Plancherel on 100 random sets: 50 exact, 50 float.
  double worst_planch = 0.0;
  for (int i = 0; i < 100; ++i) {
    const bool exact = i < 50;
    const uint64_t q = exact ? std::array<uint64_t, 5>{3, 5, 7, 9, 11}[i % 5]
                             : std::array<uint64_t, 5>{31, 37, 49, 81, 101}[i % 5];
    const uint32_t d = exact ? 2 + (i % 2) : 2;
    const Grid g(Field::of_order(q), d);
    const Value v = plancherel_defect(
        GridFunction::indicator(random_sized_set(g, rng), exact ? Mode::kExact : Mode::kFloat),
        large_caps());
    if (exact) {
      c.expect(v.exact.is_zero(), "Plancherel exact " + qd(q, d));
    } else {
      worst_planch = std::max(worst_planch, std::abs(v.approx));
      c.expect(std::abs(v.approx) <= kTol, "Plancherel float " + qd(q, d));
    }
  }
  std::ostringstream os;
  os << exact_cases.size() << " exact round trips x2, float sup error " << worst
     << ", Plancherel: 50 exact zero, float max " << worst_planch;
  return c.done(os.str());
}

// 5. sum_t nu(t)^2 identity in the plane.
Outcome nu_energy() {
  Checker c;
  CounterRng rng(5);
  for (uint64_t q : {3, 5, 7, 9, 11, 13}) {
    const Grid g(Field::of_order(q), 2);
    for (int i = 0; i < 50; ++i) {
      c.expect(nu_energy_identity(random_sized_set(g, rng)).holds(), "q=" + std::to_string(q));
    }
  }
  const Grid g3(Field::of_order(3), 2);
  const PointSet hand = PointSet::from_points(
      g3, std::vector<GridPoint>{{Fq{0}, Fq{0}}, {Fq{1}, Fq{0}}});
  const IdentityCheck h = nu_energy_identity(hand);
  c.expect(h.holds() && h.lhs == 8, "hand case");
  return c.done("300 random sets exact, E={(0,0),(1,0)}: sum nu^2 = " + h.lhs.get_str());
}

// 6. nu(0) closed form.
Outcome nu_zero() {
  Checker c;
  CounterRng rng(6);
  for (uint64_t q : {5, 9, 13, 25}) {
    const Grid g(Field::of_order(q), 2);
    for (int i = 0; i < 50; ++i) {
      c.expect(nu_zero_closed_form(random_sized_set(g, rng)).holds(),
               "q=" + std::to_string(q));
    }
  }
  return c.done("200 random sets, defect exactly 0");
}

// 7. Distance sets in the plane.
Outcome planar_distances() {
  Checker c;
  CounterRng rng(7);
  double least = 1e300;
  for (uint64_t q : {7, 11, 19, 23, 13, 17, 25, 29}) {
    const Grid g(Field::of_order(q), 2);
    for (int i = 0; i < 100; ++i) {
      const Verdict v = planar_distance_check(random_set(g, ceil_power(q, 4, 3), rng));
      least = std::min(least, v.margin);
      c.expect(v.status == Status::kPass,
               "q=" + std::to_string(q) + " " + std::string(status_name(v.status)));
    }
  }
  std::ostringstream os;
  os.precision(6);
  os << "800 sets, least relative margin " << least << ", eps_13 = " << planar_distance_epsilon(13);
  return c.done(os.str());
}

// 8. Pinned distance and dot means.
Outcome pinned() {
  Checker c;
  CounterRng rng(8);
  for (auto [q, d] : std::vector<std::pair<uint64_t, uint32_t>>{{5, 2}, {7, 2}, {9, 2}, {5, 3}}) {
    const Grid g(Field::of_order(q), d);
    for (int i = 0; i < 50; ++i) {
      const PointSet e = random_set(g, ceil_power(q, d + 1, 2), rng);
      const std::string at = qd(q, d);
      c.expect(pinned_distance_mean_check(e).status == Status::kPass, "distance " + at);
      c.expect(pinned_dot_mean_check(e).status == Status::kPass, "dot " + at);
      c.expect(pinned_second_moment_check(e).status == Status::kPass, "moment " + at);
      c.expect(dot_second_moment_check(e).status == Status::kPass, "dot moment " + at);
    }
  }
  return c.done("200 sets x 4 assertions");
}

// 9. Slices of cartesian products.
Outcome slices() {
  Checker c;
  CounterRng rng(9);
  uint64_t sets = 0;
  for (uint64_t q : {5, 7, 9}) {
    const FieldPtr f = Field::of_order(q);
    for (uint32_t d : {2, 3}) {
      const Grid g(f, d);
      for (uint64_t a = 1; a <= q; ++a) {
        if (ipow(a, 2 * d - 1) < ipow(q, d)) continue;
        for (int rep = 0; rep < 3; ++rep) {
          std::vector<FqSet> axes;
          for (uint32_t j = 0; j < d; ++j) {
            std::vector<Fq> pick;
            for (uint64_t v : rng.sample_without_replacement(q, a)) {
              pick.push_back(Fq{static_cast<uint32_t>(v)});
            }
            axes.push_back(make_set(*f, pick));
          }
          // Equal factors A^d and mixed factors A_1 x ... x A_d.
          for (bool same : {true, false}) {
            std::string spec = "product:";
            for (uint32_t j = 0; j < (same ? 1u : d); ++j) {
              if (j) spec += ";";
              for (size_t n = 0; n < axes[j].size(); ++n) {
                spec += (n ? "," : "") + std::to_string(axes[j][n].v);
              }
            }
            const PointSet e = construct_set(g, spec);
            ++sets;
            for (uint32_t z = 0; z < q; ++z) {
              const std::string at = qd(q, d) + " " + spec + " z=" + std::to_string(z);
              const Verdict vd = slice_pinned_check(e, Fq{z}, PinKind::kDistance);
              c.expect(vd.status == Status::kPass, "distance " + at);
              if (z != 0) {
                const Verdict vt = slice_pinned_check(e, Fq{z}, PinKind::kDot);
                c.expect(vt.status == Status::kPass, "dot " + at);
              }
            }
          }
        }
      }
    }
  }
  return c.done(std::to_string(sets) + " products, " + std::to_string(c.checks()) +
                " (set, z, kind) assertions");
}

// 10. Sharpness witnesses.
Outcome sharpness() {
  Checker c;
  for (uint64_t q : {5, 13, 25}) {
    const PointSet line = construct_set(Grid(Field::of_order(q), 2), "line:auto");
    c.expect(distance_set(line).size() == 1, "line q=" + std::to_string(q));
  }
  std::string census_note;
  for (uint64_t q : {9, 25}) {
    for (uint32_t d : {2, 3}) {
      const Grid g(Field::of_order(q), d);
      const PointSet e = construct_set(g, "subfield");
      const uint32_t p = g.field().p();
      bool inside = true;
      for (Fq t : distance_set(e)) inside &= g.field().in_prime_subfield(t);
      c.expect(inside, "distances " + qd(q, d));
      const CensusResult r = simplex_census(e, 2);
      c.expect(!r.sampled && r.classes <= uint64_t{p} * p * p, "census " + qd(q, d));
      census_note += " " + std::to_string(r.classes) + "<=" + std::to_string(p * p * p);
    }
  }
  return c.done("lines |Delta| = 1; subfield census(E,2):" + census_note);
}

// 11. Simplex census against the brute-force oracle.
Outcome census() {
  Checker c;
  const Grid g3(Field::of_order(3), 2);
  c.expect(simplex_census(PointSet::full(g3), 1).classes == 2, "F_3^2 k=1");
  CounterRng rng(11);
  auto check_set = [&](const PointSet& e, const std::string& label) {
    for (uint32_t k : {1u, 2u}) {
      const uint64_t got = simplex_census(e, k).classes;
      c.expect(got == testing::census_oracle(e, k, true), "oracle " + label);
      for (int i = 0; i < 10; ++i) {
        const Orthogonal o = random_orthogonal(e.field(), e.d(), rng.next());
        GridPoint tau(e.d());
        for (auto& t : tau) t = Fq{static_cast<uint32_t>(rng.uniform(e.field().q()))};
        c.expect(simplex_census(apply_isometry(e, o, tau), k).classes == got,
                 "isometry " + label);
      }
    }
  };
  uint64_t small = 0;
  for (uint32_t mask = 0; mask < (1u << 9); ++mask) {
    if (std::popcount(mask) > 6) continue;
    std::vector<uint64_t> idx;
    for (uint64_t i = 0; i < 9; ++i) {
      if (mask >> i & 1) idx.push_back(i);
    }
    check_set(PointSet::from_indices(g3, idx), "F_3^2 mask " + std::to_string(mask));
    ++small;
  }
  const Grid g5(Field::of_order(5), 2);
  for (int i = 0; i < 20; ++i) {
    check_set(random_set(g5, 1 + rng.uniform(25), rng), "F_5^2 #" + std::to_string(i));
  }
  return c.done(std::to_string(small) + " subsets of F_3^2 and 20 of F_5^2, k in {1,2}, "
                "10 isometries each");
}

// 12. Hidden-constant statements against their default constants.
Outcome soft_constants() {
  Checker c;
  CounterRng rng(12);
  double worst_ratio = 0.0;
  std::string worst_at;
  for (uint64_t q : {3, 5, 7}) {
    const Grid g(Field::of_order(q), 2);
    std::vector<PointSet> family = {PointSet::full(g)};
    for (uint64_t size : {2, 3, 5, 8, 12, 20, 30, 45, 60}) {
      if (size > g.size()) continue;
      for (int rep = 0; rep < 3; ++rep) family.push_back(random_set(g, size, rng));
    }
    for (const PointSet& e : family) {
      for (uint32_t k : {2u, 3u}) {
        for (PinKind kind : {PinKind::kDistance, PinKind::kDot}) {
          const KStarMoment m = kstar_second_moment(e, k, kind);
          if (m.ratio > worst_ratio) {
            worst_ratio = m.ratio;
            worst_at = "q=" + std::to_string(q) + " |E|=" + std::to_string(e.size()) +
                       " k=" + std::to_string(k) +
                       (kind == PinKind::kDot ? " dot" : " distance");
          }
          c.expect(m.ratio <= 8.0, "k-star ratio");
        }
      }
    }
  }
  double least_fraction = 1.0;
  for (uint64_t q : {5, 7, 11, 13}) {
    const FieldPtr f = Field::of_order(q);
    for (uint32_t d : {2, 3}) {
      for (uint64_t size = ceil_power(q, d, 2 * d - 1); size <= q; ++size) {
        for (int rep = 0; rep < 3; ++rep) {
          std::vector<Fq> pick;
          for (uint64_t v : rng.sample_without_replacement(q, size)) {
            pick.push_back(Fq{static_cast<uint32_t>(v)});
          }
          const FqSet a = make_set(*f, pick);
          const Fq z{static_cast<uint32_t>(1 + rng.uniform(q - 1))};
          const SumProductScan s = sum_product_scan(*f, a, d, z);
          least_fraction = std::min(least_fraction, s.fraction);
          c.expect(s.fraction >= 0.25, "scan " + qd(q, d));
        }
      }
    }
  }
  std::ostringstream os;
  os.precision(4);
  os << "max k-star ratio " << worst_ratio << " (" << worst_at << "), min scan fraction "
     << least_fraction << ", restriction raw max ratio";
  for (uint64_t q : {7, 11, 13}) {
    const Grid g(Field::of_order(q), 2);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const RestrictionResult r = restriction_max(random_sized_set(g, rng), Mode::kExact);
      worst = std::max(worst, r.ratio);
      c.expect(r.ratio <= 1.0 + 5.0 / q, "restriction q=" + std::to_string(q));
    }
    os << " q=" << q << ": " << worst;
  }
  return c.done(os.str());
}

// 13. Byte-identical reports from the command-line tool.
std::string run_capture(const std::string& cmd, int* status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  *status = pclose(pipe);
  return out;
}

Outcome determinism() {
  Checker c;
  const std::string cmd = std::string(FQLAB_CLI) + " verify --suite all --seed 2026";
  int s1 = 0, s2 = 0;
  const std::string a = run_capture(cmd, &s1);
  const std::string b = run_capture(cmd, &s2);
  c.expect(!a.empty(), "empty report");
  c.expect(s1 == 0 && s2 == 0, "exit status " + std::to_string(s1));
  c.expect(a == b, "reports differ");
  const size_t lines = std::count(a.begin(), a.end(), '\n');
  return c.done("two runs, " + std::to_string(a.size()) + " bytes / " +
                std::to_string(lines) + " lines each, identical");
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0: none
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace fqlab

int main() {
  using fqlab::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "sphere identities", 120, fqlab::sphere_identities},
      {2, "Gauss sums", 5, fqlab::gauss_sums},
      {3, "sphere transform closed form", 60, fqlab::sphere_closed_form},
      {4, "transform core", 0, fqlab::fourier_core},
      {5, "sum of nu^2 identity", 120, fqlab::nu_energy},
      {6, "nu(0) closed form", 0, fqlab::nu_zero},
      {7, "planar distance sets", 0, fqlab::planar_distances},
      {8, "pinned means", 0, fqlab::pinned},
      {9, "slice means", 0, fqlab::slices},
      {10, "sharpness witnesses", 0, fqlab::sharpness},
      {11, "simplex census", 600, fqlab::census},
      {12, "soft constants", 0, fqlab::soft_constants},
      {13, "determinism", 0, fqlab::determinism},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    fqlab::Outcome out;
    try {
      out = cr.run();
    } catch (const std::exception& e) {
      out = {false, std::string("error: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0 && secs > cr.limit_seconds) {
      out.pass = false;
      out.detail += ", over the time limit";
    }
    failed += !out.pass;
    char head[96];
    std::snprintf(head, sizeof(head), "AC%02d %s  %-30s %7.2fs  ", cr.id,
                  out.pass ? "PASS" : "FAIL", cr.title, secs);
    std::cout << head << out.detail << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed")
            << std::endl;
  return failed ? 1 : 0;
}
