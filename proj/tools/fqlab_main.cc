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

// Command-line front end: verify, construct, census, scan.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fqlab/constructions.h"
#include "fqlab/error.h"
#include "fqlab/pointset_io.h"
#include "fqlab/simplex.h"
#include "fqlab/suites.h"
#include "fqlab/sumset.h"
#include "json.hpp"

namespace {

using fqlab::Errc;
using fqlab::Error;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

uint64_t to_u64(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::kInvalidArgument, "bad " + what + ": '" + s + "'");
  }
}

// "3,5,7" or "3..13" (odd prime powers in the range) or a mix.
std::vector<uint64_t> parse_orders(const std::string& s) {
  std::vector<uint64_t> out;
  for (const auto& item : split(s, ',')) {
    const size_t dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_u64(item, "q"));
      continue;
    }
    const uint64_t lo = to_u64(item.substr(0, dots), "q");
    const uint64_t hi = to_u64(item.substr(dots + 2), "q");
    for (uint64_t q = lo; q <= hi; ++q) {
      const auto pl = fqlab::Field::prime_power(q);
      if (pl && pl->first % 2 == 1) out.push_back(q);
    }
  }
  return out;
}

std::vector<uint32_t> parse_small(const std::string& s, const std::string& what) {
  std::vector<uint32_t> out;
  for (const auto& item : split(s, ',')) {
    const size_t dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(static_cast<uint32_t>(to_u64(item, what)));
      continue;
    }
    const uint64_t lo = to_u64(item.substr(0, dots), what);
    const uint64_t hi = to_u64(item.substr(dots + 2), what);
    for (uint64_t v = lo; v <= hi; ++v) out.push_back(static_cast<uint32_t>(v));
  }
  return out;
}

struct FieldFlags {
  std::string q;
  uint32_t p = 0;
  uint32_t l = 1;

  void attach(CLI::App* app) {
    app->add_option("--q", q, "field order(s): 9 or 3,5,7 or 3..13");
    app->add_option("--p", p, "characteristic (with --l)");
    app->add_option("--l", l, "extension degree (with --p)");
  }
  std::vector<uint64_t> orders() const {
    if (!q.empty() && p) throw Error(Errc::kInvalidArgument, "give --q or --p/--l, not both");
    if (p) {
      uint64_t v = 1;
      for (uint32_t i = 0; i < l; ++i) v *= p;
      return {v};
    }
    return q.empty() ? std::vector<uint64_t>{} : parse_orders(q);
  }
  fqlab::FieldPtr single() const {
    if (p) return fqlab::Field::make(p, l);
    const auto qs = orders();
    if (qs.size() != 1) throw Error(Errc::kInvalidArgument, "need exactly one field");
    return fqlab::Field::of_order(qs[0]);
  }
};

struct CapFlags {
  std::string caps;
  bool allow_large = false;

  void attach(CLI::App* app) {
    app->add_option("--cap", caps, "exact=N,float=N,tuples=N");
    app->add_flag("--allow-large", allow_large, "acknowledge caps above the defaults");
  }
  fqlab::Caps get() const {
    const fqlab::Caps defaults;
    fqlab::Caps c;
    for (const auto& item : split(caps, ',')) {
      const size_t eq = item.find('=');
      if (eq == std::string::npos) throw Error(Errc::kInvalidArgument, "bad --cap " + item);
      const std::string key = item.substr(0, eq);
      const uint64_t v = to_u64(item.substr(eq + 1), "cap");
      if (key == "exact") {
        c.exact_points = v;
      } else if (key == "float") {
        c.float_points = v;
      } else if (key == "tuples") {
        c.tuples = v;
      } else {
        throw Error(Errc::kInvalidArgument, "unknown cap " + key);
      }
    }
    const bool raised = c.exact_points > defaults.exact_points ||
                        c.float_points > defaults.float_points ||
                        c.tuples > defaults.tuples;
    if (raised && !allow_large) {
      throw Error(Errc::kInvalidArgument,
                  "--cap raises a default cap; add --allow-large to confirm");
    }
    return c;
  }
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(Errc::kInvalidArgument, "cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-field distance and configuration experiments"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run a check suite and print a report");
  FieldFlags vfield;
  CapFlags vcaps;
  std::string vd, vks, vmode = "auto", vconst, vout;
  std::optional<uint32_t> vz;
  fqlab::ExperimentConfig cfg;
  bool csv = false, timing = false;
  vfield.attach(verify);
  vcaps.attach(verify);
  verify->add_option("--suite", cfg.suite, "identities|wolff|pinned|slices|kstar|simplex|sumproduct|all");
  verify->add_option("--d", vd, "dimension(s)");
  verify->add_option("--set", cfg.set, "set specifier (suite default when omitted)");
  verify->add_option("--mode", vmode, "exact|float|auto");
  verify->add_option("--seed", cfg.seed, "master seed");
  verify->add_option("--k", vks, "k value(s)");
  verify->add_option("--z", vz, "slice / scan parameter");
  verify->add_option("--constant", vconst, "moment=C,proportion=c");
  verify->add_option("--trials", cfg.trials, "random sets per (q, d)");
  verify->add_option("--samples", cfg.samples, "sample count when sampling");
  verify->add_option("--out", vout, "write the report here");
  verify->add_flag("--csv", csv, "CSV instead of JSON lines");
  verify->add_flag("--timing", timing, "add elapsed seconds to the summary");

  // construct
  auto* construct = app.add_subcommand("construct", "build a point set and write it");
  FieldFlags cfield;
  uint32_t cd = 2;
  std::string cset, cout_path;
  cfield.attach(construct);
  construct->add_option("--d", cd, "dimension");
  construct->add_option("--set", cset, "set specifier")->required();
  construct->add_option("--out", cout_path, "output file");

  // census
  auto* census = app.add_subcommand("census", "count congruence classes of k-simplices");
  FieldFlags sfield;
  CapFlags scaps;
  uint32_t sd = 2, sk = 1;
  std::string sset = "grid";
  bool raw = false, sphere = false;
  uint64_t sseed = 1, ssamples = 0;
  sfield.attach(census);
  scaps.attach(census);
  census->add_option("--d", sd, "dimension");
  census->add_option("--set", sset, "set specifier");
  census->add_option("--k", sk, "simplex order");
  census->add_flag("--raw", raw, "count keys of all tuples, no nondegeneracy filters");
  census->add_flag("--sphere", sphere, "require E inside the unit sphere");
  census->add_option("--seed", sseed, "sampling seed");
  census->add_option("--samples", ssamples, "sample tuples beyond the cap");

  // scan
  auto* scan = app.add_subcommand("scan", "sum-product scan over coefficient tuples");
  FieldFlags nfield;
  CapFlags ncaps;
  uint32_t nd = 2, nz = 1;
  std::string na;
  uint64_t nseed = 1, nsamples = 0;
  nfield.attach(scan);
  ncaps.attach(scan);
  scan->add_option("--d", nd, "dimension (tuples have d-1 coefficients)");
  scan->add_option("--A", na, "subset of F_q: 1,2,5..7 or random:size=n,seed=s")->required();
  scan->add_option("--z", nz, "nonzero scale of the last summand");
  scan->add_option("--seed", nseed, "sampling seed");
  scan->add_option("--samples", nsamples, "sample tuples beyond the cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      cfg.qs = vfield.orders();
      if (!vd.empty()) cfg.ds = parse_small(vd, "d");
      if (!vks.empty()) cfg.ks = parse_small(vks, "k");
      cfg.z = vz;
      cfg.caps = vcaps.get();
      if (vmode == "exact") {
        cfg.mode = fqlab::Mode::kExact;
      } else if (vmode == "float") {
        cfg.mode = fqlab::Mode::kFloat;
      } else if (vmode != "auto") {
        throw Error(Errc::kInvalidArgument, "bad --mode " + vmode);
      }
      for (const auto& item : split(vconst, ',')) {
        const size_t eq = item.find('=');
        const std::string key = item.substr(0, eq);
        if (eq == std::string::npos) throw Error(Errc::kInvalidArgument, "bad --constant");
        const double v = std::stod(item.substr(eq + 1));
        if (key == "moment") {
          cfg.moment_constant = v;
        } else if (key == "proportion") {
          cfg.proportion_constant = v;
        } else {
          throw Error(Errc::kInvalidArgument, "unknown constant " + key);
        }
      }
      const auto start = std::chrono::steady_clock::now();
      fqlab::Report report = fqlab::run_suite(cfg);
      if (timing) {
        report.set_elapsed_seconds(std::chrono::duration<double>(
                                       std::chrono::steady_clock::now() - start)
                                       .count());
      }
      emit(csv ? report.to_csv() : report.to_jsonl(), vout);
      return report.ok() ? 0 : 1;
    }
    if (*construct) {
      const fqlab::Grid grid(cfield.single(), cd);
      const fqlab::PointSet e = fqlab::construct_set(grid, cset);
      std::ostringstream os;
      fqlab::write_pointset(os, e);
      emit(os.str(), cout_path);
      return 0;
    }
    if (*census) {
      const fqlab::Grid grid(sfield.single(), sd);
      const fqlab::PointSet e = fqlab::construct_set(grid, sset);
      fqlab::CensusOptions opts;
      if (raw) opts.filters = {false, false};
      opts.on_unit_sphere = sphere;
      opts.sampling = {ssamples > 0, sseed, ssamples};
      const auto r = fqlab::simplex_census(e, sk, opts, scaps.get());
      nlohmann::json j = {{"q", grid.q()},     {"d", sd},
                          {"set", sset},       {"size", e.size()},
                          {"k", sk},           {"classes", r.classes},
                          {"tuples", r.tuples}, {"admissible", r.admissible},
                          {"filtered", r.filtered}, {"sampled", r.sampled},
                          {"seed", r.sampled ? nlohmann::json(r.seed) : nlohmann::json(nullptr)}};
      std::cout << j.dump() << '\n';
      return 0;
    }
    if (*scan) {
      const fqlab::FieldPtr f = nfield.single();
      const fqlab::FqSet a = fqlab::parse_field_subset(*f, na);
      const auto r = fqlab::sum_product_scan(*f, a, nd, fqlab::Fq{nz % f->q()},
                                             ncaps.get(), {nsamples > 0, nseed, nsamples});
      nlohmann::json j = {{"q", f->q()},         {"d", nd},
                          {"A_size", a.size()},  {"z", nz % f->q()},
                          {"tuples", r.tuples},  {"above", r.above},
                          {"fraction", r.fraction}, {"sampled", r.sampled},
                          {"seed", r.sampled ? nlohmann::json(r.seed) : nlohmann::json(nullptr)}};
      std::cout << j.dump() << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
