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

#include "fqlab/suites.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <string_view>
#include <utility>

#include "fqlab/constructions.h"
#include "fqlab/distlab.h"
#include "fqlab/error.h"
#include "fqlab/fourier.h"
#include "fqlab/kstar.h"
#include "fqlab/rng.h"
#include "fqlab/simplex.h"
#include "fqlab/spheres.h"
#include "fqlab/sumset.h"

namespace fqlab {

namespace {

uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Every random choice in a suite is keyed by (seed, tag).
uint64_t derive_seed(uint64_t seed, std::string_view tag) {
  return CounterRng(seed, fnv1a(tag)).next();
}

std::string qd(uint64_t q, uint32_t d) {
  return "q=" + std::to_string(q) + ",d=" + std::to_string(d);
}

uint64_t ipow(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

Verdict outcome(bool ok, Quantity lhs, Quantity rhs, std::string note = {}) {
  Verdict v;
  v.status = ok ? Status::kPass : Status::kFail;
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  v.margin = ok ? 0.0 : -1.0;
  v.note = std::move(note);
  return v;
}

Verdict finding(Quantity lhs, Quantity rhs, std::string note) {
  Verdict v;
  v.status = Status::kFinding;
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  v.margin = v.rhs.approx != 0.0 ? (v.lhs.approx - v.rhs.approx) / std::abs(v.rhs.approx)
                                 : v.lhs.approx;
  v.note = std::move(note);
  return v;
}

Verdict not_run(const Error& e) {
  return verdict_skipped("not run: " + std::string(e.what()));
}

Quantity cyc_quantity(const CycNum& v) {
  if (v.is_rational()) return v.rational_value();
  return v.to_complex().real();
}

// Folds the verdicts of one check over many inputs into one record: fail if
// any input failed, lhs/rhs/margin of the input with the least margin.
class Tally {
 public:
  void add(const std::string& label, const Verdict& v) {
    ++count_[v.status];
    ++inputs_;
    if (v.status == Status::kSkipped) {
      if (skip_note_.empty()) skip_note_ = label + ": " + v.note;
      return;
    }
    if (!worst_ || v.margin < worst_->margin ||
        (v.status == Status::kFail && worst_->status != Status::kFail)) {
      worst_ = v;
      worst_label_ = label;
    }
  }
  bool empty() const { return inputs_ == 0; }

  Verdict result() const {
    Verdict out;
    std::string counts = "inputs=" + std::to_string(inputs_);
    for (Status s : {Status::kPass, Status::kFail, Status::kSkipped, Status::kFinding}) {
      auto it = count_.find(s);
      if (it != count_.end()) {
        counts += " " + std::string(status_name(s)) + "=" + std::to_string(it->second);
      }
    }
    if (!worst_) {
      out = verdict_skipped(counts + "; " + skip_note_);
      return out;
    }
    out = *worst_;
    if (count_.count(Status::kFail)) {
      out.status = Status::kFail;
    } else if (count_.count(Status::kPass)) {
      out.status = Status::kPass;
    } else {
      out.status = Status::kFinding;
    }
    out.note = counts + "; least margin at " + worst_label_;
    if (!worst_->note.empty()) out.note += ": " + worst_->note;
    return out;
  }

 private:
  std::map<Status, uint64_t> count_;
  uint64_t inputs_ = 0;
  std::optional<Verdict> worst_;
  std::string worst_label_;
  std::string skip_note_;
};

struct NamedSet {
  std::string label;
  PointSet set;
};

class SuiteRunner {
 public:
  SuiteRunner(const ExperimentConfig& c, Report& r) : cfg_(c), report_(r) {}

  void run(const std::string& suite) {
    if (suite == "identities") return identities();
    if (suite == "wolff") return planar_distances();
    if (suite == "pinned") return pinned();
    if (suite == "slices") return slices();
    if (suite == "kstar") return kstar();
    if (suite == "simplex") return simplex();
    if (suite == "sumproduct") return sumproduct();
    throw Error(Errc::kInvalidArgument, "unknown suite " + suite);
  }

 private:
  using Matrix = std::vector<std::pair<uint64_t, uint32_t>>;

  Matrix matrix(std::vector<uint64_t> qs, std::vector<uint32_t> ds) const {
    if (!cfg_.qs.empty()) qs = cfg_.qs;
    if (!cfg_.ds.empty()) ds = cfg_.ds;
    Matrix out;
    for (uint64_t q : qs) {
      for (uint32_t d : ds) out.emplace_back(q, d);
    }
    return out;
  }

  uint32_t trials(uint32_t fallback) const {
    return cfg_.trials ? cfg_.trials : fallback;
  }

  Mode mode_for(const Field& f) const { return cfg_.mode.value_or(default_mode(f)); }

  void add(const std::string& name, const std::string& anchor, Verdict v) {
    report_.add(name, anchor, std::move(v));
  }
  void add(const std::string& name, const std::string& anchor, const Tally& t) {
    if (!t.empty()) report_.add(name, anchor, t.result());
  }

  // The configured set, or `fallback(trial)` for each trial.  Construction
  // failures are recorded under `name` and yield no sets.
  std::vector<NamedSet> sets(const Grid& grid, const std::string& name,
                             uint32_t count,
                             const std::function<NamedSet(uint32_t)>& fallback) {
    std::vector<NamedSet> out;
    try {
      if (!cfg_.set.empty()) {
        out.push_back({cfg_.set, construct_set(grid, cfg_.set)});
        return out;
      }
      for (uint32_t i = 0; i < count; ++i) out.push_back(fallback(i));
    } catch (const Error& e) {
      if (e.code() == Errc::kSpecifierParse) throw;
      add(name + "/construct", "set construction", not_run(e));
      out.clear();
    }
    return out;
  }

  NamedSet random_set(const Grid& grid, uint64_t size, const std::string& tag) {
    const uint64_t seed = derive_seed(cfg_.seed, tag);
    const std::string spec =
        "random:size=" + std::to_string(size) + ",seed=" + std::to_string(seed);
    return {spec, construct_set(grid, spec)};
  }

  // identities -----------------------------------------------------------

  void identities() {
    std::set<uint64_t> gauss_done;
    for (auto [q, d] : matrix({3, 5, 7, 9, 11, 13}, {2, 3})) {
      const FieldPtr f = Field::of_order(q);
      const Grid grid(f, d);
      const std::string at = qd(q, d);
      if (gauss_done.insert(q).second) gauss(*f);
      sphere_identities(grid);

      Tally planch, spectral, energy_id, zero_id, matt, restr_soft, restr_raw;
      const Mode mode = mode_for(*f);
      const uint64_t n = grid.size();
      auto family = [&](uint32_t i) {
        const std::string tag = "identities/" + at + "/" + std::to_string(i);
        CounterRng rng(derive_seed(cfg_.seed, tag + "/size"));
        return random_set(grid, 1 + rng.uniform(std::max<uint64_t>(1, n / 2)), tag);
      };
      for (const auto& [label, e] : sets(grid, "identities/" + at, trials(5), family)) {
        if (e.empty()) continue;
        try {
          const GridFunction ind = GridFunction::indicator(e, mode);
          const Value pd = plancherel_defect(ind, cfg_.caps);
          const double tol = 1e-9 * static_cast<double>(e.size());
          planch.add(label, outcome(pd.is_zero(tol),
                                    mode == Mode::kExact ? Quantity(cyc_quantity(pd.exact))
                                                         : Quantity(std::abs(pd.approx)),
                                    mpq_class(0), mode == Mode::kExact ? "exact" : "float"));
          const SpectralDefect sd = spectral_nu_check(e, mode, cfg_.caps);
          const bool sd_ok = mode == Mode::kExact
                                 ? sd.exact_zero
                                 : sd.max_abs <= tol * static_cast<double>(e.size());
          spectral.add(label, outcome(sd_ok, sd.max_abs, mpq_class(0)));
          if (d == 2) {
            const IdentityCheck m = nu_energy_identity(e, cfg_.caps);
            energy_id.add(label, outcome(m.holds(), m.lhs, cyc_quantity(m.rhs)));
            if (q % 4 == 1) {
              const IdentityCheck z = nu_zero_closed_form(e, cfg_.caps);
              zero_id.add(label, outcome(z.holds(), z.lhs, cyc_quantity(z.rhs)));
            }
            restriction(e, label, restr_soft, restr_raw);
          }
          const MattilaResult mr = mattila(e, cfg_.caps);
          const uint64_t delta = distance_set(e).size();
          matt.add(label, finding(mpq_class(delta), mr.bound,
                                  "|E|=" + std::to_string(e.size()) +
                                      " M=" + mr.m.get_str()));
        } catch (const Error& err) {
          if (err.code() != Errc::kCapExceeded) throw;
          planch.add(label, not_run(err));
        }
      }
      const std::string base = "identities/";
      add(base + "plancherel/" + at, "Plancherel", planch);
      add(base + "spectral-nu/" + at, "nu from the spectrum", spectral);
      add(base + "nu-energy/" + at, "sum of nu^2 identity (d=2)", energy_id);
      add(base + "nu-zero/" + at, "nu(0) closed form (d=2, q=1 mod 4)", zero_id);
      add(base + "mattila/" + at, "Mattila functional, |Delta(E)| vs min(q, q/M)",
          matt);
      add(base + "restriction/" + at, "circle restriction bound, ratio <= 1 + 5/q",
          restr_soft);
      add(base + "restriction-raw/" + at, "circle restriction bound, raw ratio <= 1",
          restr_raw);
    }
  }

  void restriction(const PointSet& e, const std::string& label, Tally& soft,
                   Tally& raw) {
    const RestrictionResult r = restriction_max(e, mode_for(e.field()), cfg_.caps);
    const double q = e.field().q();
    const std::string note = "max at t=" + std::to_string(r.argmax.v) +
                             " lhs=" + std::to_string(r.lhs);
    Verdict s = verdict_less_equal(r.ratio, 1.0 + 5.0 / q);
    s.note = note;
    soft.add(label, s);
    Verdict v = verdict_less_equal(r.ratio, 1.0);
    if (v.status == Status::kFail) v.status = Status::kFinding;
    v.note = note;
    raw.add(label, v);
  }

  void gauss(const Field& f) {
    const std::string at = "q=" + std::to_string(f.q());
    const CycNum g = gauss_sum(f, f.one());
    const mpq_class expected(f.quadratic_char(f.minus_one()) * int64_t{f.q()});
    const CycNum g2 = g * g;
    add("identities/gauss-square/" + at, "G^2 = psi(-1) q",
        outcome(g2.is_rational() && g2.rational_value() == expected, cyc_quantity(g2),
                expected));
    const double err = std::abs(g.to_complex() - gauss_sum_closed_form(f));
    Verdict v = verdict_less_equal(err, 1e-9);
    v.note = "|G - closed form|";
    add("identities/gauss-closed-form/" + at, "explicit Gauss sum", v);
  }

  void sphere_identities(const Grid& grid) {
    const std::string at = qd(grid.q(), grid.d());
    try {
      const SphereIdentityReport r = verify_sphere_identities(grid, cfg_.caps);
      add("identities/sphere-sizes/" + at, "sum_t |S_t|^2",
          outcome(r.sizes_ok(), r.sum_sizes_squared, r.sum_sizes_squared_expected));
      add("identities/sphere-energy/" + at, "sum_t |S_t^(m)|^2, m != 0",
          outcome(r.energy_ok(), mpz_class(r.energy_failures), mpz_class(0),
                  "frequencies=" + std::to_string(r.energy_checked) +
                      " expected=" + r.energy_expected.get_str()));
      add("identities/sphere-weighted/" + at, "sum_t |S_t| S_t^(m) <= 1 - 1/q",
          outcome(r.weighted_ok(), r.weighted_max, r.weighted_bound,
                  "frequencies=" + std::to_string(r.weighted_checked) +
                      " nonrational=" + std::to_string(r.weighted_nonrational)));
      std::vector<uint64_t> sizes(grid.q(), 0);
      for (Fq t : norm_table(grid)) ++sizes[t.v];
      uint64_t bad = 0;
      for (uint32_t t = 0; t < grid.q(); ++t) {
        bad += static_cast<int64_t>(sizes[t]) !=
               sphere_size_closed_form(grid.field(), grid.d(), Fq{t});
      }
      add("identities/sphere-size-closed-form/" + at, "sphere sizes",
          outcome(bad == 0, mpz_class(bad), mpz_class(0)));
      const ClosedFormCheck cf = verify_sphere_fourier_closed_form(grid, cfg_.caps);
      add("identities/sphere-fourier/" + at, "sphere transform closed form",
          outcome(cf.mismatches == 0, mpz_class(cf.mismatches), mpz_class(0),
                  "compared=" + std::to_string(cf.compared)));
    } catch (const Error& e) {
      if (e.code() != Errc::kCapExceeded) throw;
      add("identities/sphere/" + at, "sphere identities", not_run(e));
    }
  }

  // planar distances ----------------------------------------------------------------

  void planar_distances() {
    for (auto [q, d] : matrix({7, 11, 13, 17, 19, 23, 25, 29}, {2})) {
      const std::string at = qd(q, d);
      if (d != 2) {
        add("wolff/" + at, "distance set bound (d=2)",
            verdict_skipped("the bound is stated for d = 2"));
        continue;
      }
      const Grid grid(Field::of_order(q), d);
      Tally t;
      const uint64_t size = std::min(grid.size(), ceil_power(q, 4, 3));
      auto family = [&](uint32_t i) {
        return random_set(grid, size, "wolff/" + at + "/" + std::to_string(i));
      };
      for (const auto& [label, e] : sets(grid, "wolff/" + at, trials(20), family)) {
        t.add(label, planar_distance_check(e));
      }
      add("wolff/" + at, "distance set bound (d=2)", t);
    }
  }

  // pinned ---------------------------------------------------------------

  void pinned() {
    Matrix m = matrix({}, {});
    if (cfg_.qs.empty() && cfg_.ds.empty()) m = {{5, 2}, {7, 2}, {9, 2}, {5, 3}};
    if (m.empty()) m = matrix({5, 7, 9}, {2});
    for (auto [q, d] : m) {
      const std::string at = qd(q, d);
      const FieldPtr f = Field::of_order(q);
      const Grid grid(f, d);
      Tally dist, dot, dist2, dot2, eta_id;
      const uint64_t size = std::min(grid.size(), ceil_power(q, d + 1, 2));
      auto family = [&](uint32_t i) {
        return random_set(grid, size, "pinned/" + at + "/" + std::to_string(i));
      };
      for (const auto& [label, e] : sets(grid, "pinned/" + at, trials(10), family)) {
        if (e.empty()) continue;
        dist.add(label, pinned_distance_mean_check(e));
        dot.add(label, pinned_dot_mean_check(e));
        dist2.add(label, pinned_second_moment_check(e));
        dot2.add(label, dot_second_moment_check(e));
        try {
          const SpectralTable e_hat =
              dft(GridFunction::indicator(e, Mode::kExact), cfg_.caps);
          uint64_t bad = 0, tried = 0;
          for (size_t i = 0; i < e.size() && tried < 4; ++i, ++tried) {
            bad += !eta_transform_identity(e, e_hat, e.coords(i));
          }
          eta_id.add(label, outcome(bad == 0, mpz_class(bad), mpz_class(0),
                                    "pins=" + std::to_string(tried)));
        } catch (const Error& err) {
          if (err.code() != Errc::kCapExceeded) throw;
          eta_id.add(label, not_run(err));
        }
      }
      add("pinned/distance-mean/" + at, "mean pinned distance count > q/2", dist);
      add("pinned/dot-mean/" + at, "mean pinned dot count > q/2", dot);
      add("pinned/distance-moment/" + at, "pinned distance second moment", dist2);
      add("pinned/dot-moment/" + at, "pinned dot second moment", dot2);
      add("pinned/eta-transform/" + at, "eta_y transform identity", eta_id);
    }
  }

  // slices ---------------------------------------------------------------

  void slices() {
    for (auto [q, d] : matrix({5, 7, 9}, {2, 3})) {
      const std::string at = qd(q, d);
      if (d < 2) {
        add("slices/" + at, "slice pinned counts", verdict_skipped("needs d >= 2"));
        continue;
      }
      const FieldPtr f = Field::of_order(q);
      const Grid grid(f, d);
      // Least a with a^{2d-1} >= q^d.
      uint64_t a = 1;
      while (ipow(a, 2 * d - 1) < ipow(q, d)) ++a;
      auto family = [&](uint32_t i) {
        std::string spec;
        if (i == 0) {
          spec = "product:0.." + std::to_string(a - 1);
        } else {
          const FqSet s = parse_field_subset(
              *f, "random:size=" + std::to_string(std::min<uint64_t>(a + i / 2, q)) +
                      ",seed=" +
                      std::to_string(derive_seed(
                          cfg_.seed, "slices/" + at + "/" + std::to_string(i))));
          spec = "product:";
          for (size_t j = 0; j < s.size(); ++j) {
            spec += (j ? "," : "") + std::to_string(s[j].v);
          }
        }
        return NamedSet{spec, construct_set(grid, spec)};
      };
      Tally dist, dot;
      for (const auto& [label, e] : sets(grid, "slices/" + at, trials(4), family)) {
        if (e.empty()) continue;
        for (uint32_t z = 0; z < q; ++z) {
          if (cfg_.z && *cfg_.z != z) continue;
          const std::string where = label + " z=" + std::to_string(z);
          dist.add(where, slice_pinned_check(e, Fq{z}, PinKind::kDistance));
          if (z != 0) dot.add(where, slice_pinned_check(e, Fq{z}, PinKind::kDot));
        }
      }
      add("slices/distance/" + at, "slice pinned distance mean > q/3", dist);
      add("slices/dot/" + at, "slice pinned dot mean > q/2", dot);
    }
  }

  // kstar ----------------------------------------------------------------

  void kstar() {
    std::vector<uint32_t> ks = cfg_.ks.empty() ? std::vector<uint32_t>{2, 3} : cfg_.ks;
    for (auto [q, d] : matrix({3, 5, 7}, {2})) {
      const std::string at = qd(q, d);
      const Grid grid(Field::of_order(q), d);
      auto family = [&](uint32_t i) {
        if (i == 0 && grid.size() <= 60) {
          return NamedSet{"grid", PointSet::full(grid)};
        }
        const std::string tag = "kstar/" + at + "/" + std::to_string(i);
        CounterRng rng(derive_seed(cfg_.seed, tag + "/size"));
        const uint64_t hi = std::min<uint64_t>(60, grid.size());
        return random_set(grid, 2 + rng.uniform(hi - 1), tag);
      };
      const auto family_sets = sets(grid, "kstar/" + at, trials(4), family);
      for (uint32_t k : ks) {
        const std::string atk = at + ",k=" + std::to_string(k);
        for (PinKind kind : {PinKind::kDistance, PinKind::kDot}) {
          const std::string kn = kind == PinKind::kDistance ? "distance" : "dot";
          Tally moment, mean;
          for (const auto& [label, e] : family_sets) {
            if (e.empty()) continue;
            try {
              const KStarMoment m = kstar_second_moment(e, k, kind, cfg_.caps);
              Verdict v = verdict_less_equal(m.ratio, cfg_.moment_constant);
              v.note = "lhs=" + m.lhs.get_str() + " reference=" + m.reference.get_str();
              moment.add(label, v);
            } catch (const Error& err) {
              if (err.code() != Errc::kCapExceeded) throw;
              moment.add(label, not_run(err));
            }
            mean.add(label, kstar_mean_check(e, k, kind, label));
          }
          add("kstar/" + kn + "-moment/" + atk,
              "k-star second moment / (|E|^{k+2}/q^k + q^d|E|^k) <= C", moment);
          add("kstar/" + kn + "-mean/" + atk, "mean k-star image >= c q^k", mean);
        }
      }
    }
  }

  Verdict kstar_mean_check(const PointSet& e, uint32_t k, PinKind kind,
                           const std::string& label) {
    const uint64_t q = e.field().q();
    const uint32_t d = e.d();
    const bool sphere =
        label == "sphere:t=1" || label.rfind("sphere_subset:t=1,", 0) == 0;
    const uint64_t need = sphere ? ceil_power(q, d + k - 1, 2) : ceil_power(q, d + k, 2);
    if (sphere && k + 1 > d) return verdict_skipped("sphere mode needs k <= d-1");
    if (e.size() < need) {
      return verdict_skipped("|E|=" + std::to_string(e.size()) + " < " +
                             std::to_string(need));
    }
    Sampling sampling{true, derive_seed(cfg_.seed, "kstar-mean/" + label), cfg_.samples};
    try {
      const KStarMean m = kstar_mean_image(e, k, kind, sphere, cfg_.caps, sampling);
      Verdict v = verdict_greater_equal(
          m.mean, mpq_class(mpq_class(ipow(q, k)) * mpq_class(cfg_.proportion_constant)));
      v.note = "tuples=" + std::to_string(m.tuples) + (m.sampled ? " sampled" : "") +
               " q^k=" + std::to_string(ipow(q, k));
      return v;
    } catch (const Error& err) {
      if (err.code() != Errc::kCapExceeded) throw;
      return not_run(err);
    }
  }

  // simplex --------------------------------------------------------------

  void simplex() {
    std::vector<uint32_t> ks = cfg_.ks.empty() ? std::vector<uint32_t>{1, 2} : cfg_.ks;
    for (auto [q, d] : matrix({3, 5, 9, 25}, {2})) {
      const std::string at = qd(q, d);
      const FieldPtr f = Field::of_order(q);
      const Grid grid(f, d);
      std::vector<NamedSet> family;
      if (!cfg_.set.empty()) {
        family = sets(grid, "simplex/" + at, 1, nullptr);
      } else {
        if (ipow(grid.size(), 3) <= cfg_.caps.tuples) {
          family.push_back({"grid", PointSet::full(grid)});
        }
        family.push_back(random_set(grid, std::min<uint64_t>(grid.size(), q + 2),
                                    "simplex/" + at));
        for (const char* spec : {"subfield", "line:auto"}) {
          try {
            family.push_back({spec, construct_set(grid, spec)});
          } catch (const Error& e) {
            if (e.code() != Errc::kConstructionUnavailable) throw;
          }
        }
      }
      for (const auto& [label, e] : family) {
        if (label == "line:auto") line_sharpness(e, at);
        if (label.rfind("subfield", 0) == 0) subfield_distances(e, at);
        for (uint32_t k : ks) census_checks(e, label, k, at);
      }
    }
  }

  void line_sharpness(const PointSet& e, const std::string& at) {
    const uint64_t n = distance_set(e).size();
    add("simplex/sharpness-line/" + at, "isotropic line has one distance",
        outcome(n == 1, mpz_class(n), mpz_class(1)));
  }

  // The distances of (F_{p^k})^d lie in F_{p^k}.
  uint64_t subfield_order(const PointSet& e) const {
    const std::set<uint32_t> coords = [&] {
      std::set<uint32_t> s;
      for (size_t i = 0; i < e.size(); ++i) {
        for (Fq c : e.coords(i)) s.insert(c.v);
      }
      return s;
    }();
    return coords.size();
  }

  void subfield_distances(const PointSet& e, const std::string& at) {
    const Field& f = e.field();
    const uint64_t order = subfield_order(e);
    uint32_t k = 0;
    for (uint32_t j = 1; j <= f.l(); ++j) {
      if (f.l() % j == 0 && ipow(f.p(), j) == order) k = j;
    }
    if (k == 0) return;
    const auto sub = f.subfield(k);
    const std::set<uint32_t> members = [&] {
      std::set<uint32_t> s;
      for (Fq a : sub) s.insert(a.v);
      return s;
    }();
    uint64_t outside = 0;
    const auto delta = distance_set(e);
    for (Fq t : delta) outside += !members.count(t.v);
    add("simplex/sharpness-subfield-distances/" + at, "distances stay in the subfield",
        outcome(outside == 0, mpz_class(outside), mpz_class(0),
                "|Delta|=" + std::to_string(delta.size()) +
                    " subfield order=" + std::to_string(order)));
  }

  void census_checks(const PointSet& e, const std::string& label, uint32_t k,
                     const std::string& at) {
    const std::string atk = at + ",k=" + std::to_string(k) + "/" + label;
    if (k > e.d() || k == 0 || k > kMaxSimplexOrder) {
      add("simplex/census/" + atk, "k-simplex census",
          verdict_skipped("needs 1 <= k <= d"));
      return;
    }
    CensusOptions opts;
    opts.sampling = {true, derive_seed(cfg_.seed, "census/" + atk), cfg_.samples};
    const CensusResult c = simplex_census(e, k, opts, cfg_.caps);
    const uint64_t full = ipow(e.field().q(), k * (k + 1) / 2);
    add("simplex/census/" + atk, "k-simplex census vs q^{k(k+1)/2}",
        finding(mpz_class(c.classes), mpz_class(full),
                "|E|=" + std::to_string(e.size()) + " tuples=" +
                    std::to_string(c.tuples) + (c.sampled ? " sampled lower bound" : "")));
    if (label.rfind("subfield", 0) == 0) {
      const uint64_t cap = ipow(subfield_order(e), k * (k + 1) / 2);
      add("simplex/sharpness-subfield-census/" + atk,
          "subfield census <= p^{k(k+1)/2}",
          outcome(c.classes <= cap, mpz_class(c.classes), mpz_class(cap)));
    }
    if (c.sampled) return;
    uint64_t mismatches = 0;
    uint64_t worst = c.classes;
    const uint32_t n_iso = 10;
    for (uint32_t i = 0; i < n_iso; ++i) {
      const uint64_t s = derive_seed(cfg_.seed, "isometry/" + atk + "/" + std::to_string(i));
      const Orthogonal o = random_orthogonal(e.field(), e.d(), s);
      CounterRng rng(s);
      GridPoint tau(e.d());
      for (auto& c0 : tau) c0 = Fq{static_cast<uint32_t>(rng.uniform(e.field().q()))};
      const uint64_t image = simplex_census(apply_isometry(e, o, tau), k, opts, cfg_.caps).classes;
      if (image != c.classes) {
        ++mismatches;
        worst = image;
      }
    }
    add("simplex/isometry-invariance/" + atk, "census invariant under O(E) + tau",
        outcome(mismatches == 0, mpz_class(c.classes), mpz_class(worst),
                "isometries=" + std::to_string(n_iso)));
  }

  // sumproduct -----------------------------------------------------------

  void sumproduct() {
    for (auto [q, d] : matrix({5, 7, 11, 13}, {2, 3})) {
      const std::string at = qd(q, d);
      const FieldPtr f = Field::of_order(q);
      if (d < 2) {
        add("sumproduct/" + at, "sum-product", verdict_skipped("needs d >= 2"));
        continue;
      }
      Tally scan, cover, half, product_dilate;
      const uint32_t n = trials(5);
      for (uint32_t i = 0; i < n; ++i) {
        const std::string tag = "sumproduct/" + at + "/" + std::to_string(i);
        const uint64_t base = derive_seed(cfg_.seed, tag);
        auto subset = [&](uint64_t size, uint64_t salt) {
          return parse_field_subset(*f, "random:size=" + std::to_string(size) +
                                            ",seed=" + std::to_string(base + salt) +
                                            ",nonzero");
        };
        // Fraction of coefficient tuples whose sumset passes q/2.
        {
          const uint64_t size = std::min<uint64_t>(q - 1, ceil_power(q, d, 2 * d - 1));
          const FqSet a = cfg_.set.empty() ? subset(size, 0) : parse_field_subset(*f, cfg_.set);
          CounterRng rng(base);
          const Fq z = cfg_.z ? Fq{*cfg_.z % static_cast<uint32_t>(q)}
                              : Fq{static_cast<uint32_t>(1 + rng.uniform(q - 1))};
          const std::string label = set_label(a) + " z=" + std::to_string(z.v);
          if (z.v == 0) {
            scan.add(label, verdict_skipped("z = 0"));
          } else if (a.size() < ceil_power(q, d, 2 * d - 1)) {
            scan.add(label, verdict_skipped("|A| < q^{d/(2d-1)}"));
          } else {
            const SumProductScan s = sum_product_scan(
                *f, a, d, z, cfg_.caps, {true, base + 1, cfg_.samples});
            Verdict v = verdict_greater_equal(s.fraction, cfg_.proportion_constant);
            v.note = "tuples=" + std::to_string(s.tuples) + " above=" +
                     std::to_string(s.above) + (s.sampled ? " sampled" : "");
            scan.add(label, v);
          }
        }
        // d-fold A.A + ... + A.A covers F_q^* when |A| > q^{1/2 + 1/(2d)}.
        {
          uint64_t size = ceil_power(q, d + 1, 2 * d);
          if (ipow(size, 2 * d) == ipow(q, d + 1)) ++size;
          if (size <= q - 1) {
            const FqSet a = subset(size, 2);
            const FqSet s = product_sumset(*f, a, d);
            const uint64_t nonzero = std::count_if(s.begin(), s.end(),
                                                   [](Fq x) { return x.v != 0; });
            cover.add(set_label(a), outcome(nonzero == q - 1, mpz_class(nonzero),
                                            mpz_class(q - 1)));
          }
        }
        // |A.A + ... + A.A| >= q/2 when |A| >= q^{1/2 + 1/(2(2d-1))}.
        {
          const uint64_t size = ceil_power(q, d, 2 * d - 1);
          if (size <= q - 1) {
            const FqSet a = subset(size, 3);
            const uint64_t got = product_sumset(*f, a, d).size();
            half.add(set_label(a), verdict_greater_equal(mpz_class(2 * got), mpz_class(q)));
          }
        }
        // |A.A + zA| >= q/2 for |A| >= q^{2/3} and z in A.
        if (d == 2) {
          const uint64_t size = ceil_power(q, 2, 3);
          if (size <= q - 1) {
            const FqSet a = subset(size, 4);
            CounterRng rng(base + 5);
            const Fq z = a[rng.uniform(a.size())];
            const uint64_t got = sumset(*f, product_set(*f, a, a), dilate(*f, z, a)).size();
            product_dilate.add(set_label(a) + " z=" + std::to_string(z.v),
                            verdict_greater_equal(mpz_class(2 * got), mpz_class(q)));
          }
        }
      }
      add("sumproduct/scan/" + at, "fraction of tuples with |a.A + zA| > q/2", scan);
      add("sumproduct/products-cover/" + at, "A.A + ... + A.A contains F_q^*", cover);
      add("sumproduct/products-half/" + at, "|A.A + ... + A.A| >= q/2", half);
      add("sumproduct/product-plus-dilate/q=" + std::to_string(q),
          "|A.A + zA| >= q/2, z in A", product_dilate);
    }
  }

  static std::string set_label(const FqSet& a) {
    std::string s = "A=";
    for (size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i].v);
    return s;
  }

  const ExperimentConfig& cfg_;
  Report& report_;
};

}  // namespace

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["q"] = qs;
  j["d"] = ds;
  j["set"] = set;
  j["mode"] = mode ? (*mode == Mode::kExact ? "exact" : "float") : "auto";
  j["seed"] = seed;
  j["k"] = ks;
  j["z"] = z ? nlohmann::json(*z) : nlohmann::json(nullptr);
  j["caps"] = {{"exact_points", caps.exact_points},
               {"float_points", caps.float_points},
               {"tuples", caps.tuples}};
  j["constants"] = {{"moment", moment_constant}, {"proportion", proportion_constant}};
  j["trials"] = trials;
  j["samples"] = samples;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "identities", "wolff", "pinned", "slices", "kstar", "simplex", "sumproduct"};
  return names;
}

Report run_suite(const ExperimentConfig& config) {
  Report report(config.to_json());
  SuiteRunner runner(config, report);
  if (config.suite == "all") {
    for (const auto& name : suite_names()) runner.run(name);
  } else {
    runner.run(config.suite);
  }
  return report;
}

}  // namespace fqlab
