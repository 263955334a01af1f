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

#include "fqlab/constructions.h"

#include <charconv>
#include <map>
#include <string>
#include <vector>

#include "fqlab/error.h"
#include "fqlab/pointset_io.h"
#include "fqlab/rng.h"
#include "fqlab/spheres.h"

namespace fqlab {

namespace {

[[noreturn]] void parse_fail(std::string_view spec, const std::string& why) {
  throw Error(Errc::kSpecifierParse,
              "bad set specifier '" + std::string(spec) + "': " + why);
}

uint64_t to_uint(std::string_view spec, std::string_view s) {
  uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    parse_fail(spec, "not an integer: '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const size_t at = s.find(sep);
    out.push_back(s.substr(0, at));
    if (at == std::string_view::npos) break;
    s.remove_prefix(at + 1);
  }
  return out;
}

// key=value pairs; bare words map to "".
std::map<std::string, std::string> parse_options(std::string_view spec,
                                                 std::string_view args) {
  std::map<std::string, std::string> out;
  if (args.empty()) return out;
  for (std::string_view item : split(args, ',')) {
    const size_t eq = item.find('=');
    std::string key(item.substr(0, eq));
    if (key.empty()) parse_fail(spec, "empty option");
    if (out.count(key)) parse_fail(spec, "repeated option " + key);
    out[key] = eq == std::string_view::npos ? "" : std::string(item.substr(eq + 1));
  }
  return out;
}

void allow_only(std::string_view spec, const std::map<std::string, std::string>& opts,
                std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : opts) {
    bool known = false;
    for (const char* key : keys) known |= (k == key);
    if (!known) parse_fail(spec, "unknown option " + k);
  }
}

uint64_t need(std::string_view spec, const std::map<std::string, std::string>& opts,
              const char* key) {
  auto it = opts.find(key);
  if (it == opts.end()) parse_fail(spec, std::string("missing ") + key);
  return to_uint(spec, it->second);
}

Fq element_at(std::string_view spec, const Field& f, uint64_t v) {
  if (v >= f.q()) parse_fail(spec, "element index " + std::to_string(v) + " >= q");
  return Fq{static_cast<uint32_t>(v)};
}

// "1,2,5..7"
FqSet parse_list(std::string_view spec, const Field& f, std::string_view list) {
  std::vector<Fq> out;
  if (list.empty()) return {};
  for (std::string_view item : split(list, ',')) {
    const size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(element_at(spec, f, to_uint(spec, item)));
      continue;
    }
    const uint64_t lo = to_uint(spec, item.substr(0, dots));
    const uint64_t hi = to_uint(spec, item.substr(dots + 2));
    if (lo > hi) parse_fail(spec, "empty range");
    element_at(spec, f, hi);
    for (uint64_t v = lo; v <= hi; ++v) out.push_back(Fq{static_cast<uint32_t>(v)});
  }
  return make_set(f, out);
}

PointSet product_of(const Grid& grid, const std::vector<FqSet>& factors) {
  const uint32_t d = grid.d();
  uint64_t total = 1;
  for (const auto& a : factors) {
    if (a.empty()) return PointSet(grid);
    total *= a.size();
  }
  std::vector<uint64_t> idx;
  idx.reserve(total);
  std::vector<size_t> pos(d, 0);
  GridPoint x(d);
  for (uint64_t n = 0; n < total; ++n) {
    for (uint32_t j = 0; j < d; ++j) x[j] = factors[j][pos[j]];
    idx.push_back(grid.encode(x));
    for (uint32_t j = 0; j < d; ++j) {
      if (++pos[j] < factors[j].size()) break;
      pos[j] = 0;
    }
  }
  return PointSet::from_indices(grid, idx);
}

PointSet random_subset(const Grid& grid, const std::vector<uint64_t>& universe,
                       uint64_t size, uint64_t seed, std::string_view spec) {
  if (size > universe.size()) {
    parse_fail(spec, "size " + std::to_string(size) + " exceeds " +
                         std::to_string(universe.size()) + " available points");
  }
  CounterRng rng(seed);
  std::vector<uint64_t> idx;
  idx.reserve(size);
  for (uint64_t k : rng.sample_without_replacement(universe.size(), size)) {
    idx.push_back(universe[k]);
  }
  return PointSet::from_indices(grid, idx);
}

}  // namespace

FqSet parse_field_subset(const Field& f, std::string_view spec) {
  if (spec.rfind("random:", 0) == 0) {
    const auto opts = parse_options(spec, spec.substr(7));
    allow_only(spec, opts, {"size", "seed", "nonzero"});
    const bool nonzero = opts.count("nonzero") > 0;
    const uint64_t universe = f.q() - (nonzero ? 1 : 0);
    const uint64_t size = need(spec, opts, "size");
    if (size > universe) parse_fail(spec, "size exceeds the field");
    CounterRng rng(need(spec, opts, "seed"));
    std::vector<Fq> out;
    for (uint64_t k : rng.sample_without_replacement(universe, size)) {
      out.push_back(Fq{static_cast<uint32_t>(k + (nonzero ? 1 : 0))});
    }
    return make_set(f, out);
  }
  return parse_list(spec, f, spec);
}

PointSet construct_set(const Grid& grid, std::string_view spec) {
  const Field& f = grid.field();
  const uint32_t d = grid.d();
  const size_t colon = spec.find(':');
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view args =
      colon == std::string_view::npos ? std::string_view() : spec.substr(colon + 1);

  if (kind == "grid") {
    if (!args.empty()) parse_fail(spec, "grid takes no options");
    return PointSet::full(grid);
  }
  if (kind == "random") {
    const auto opts = parse_options(spec, args);
    allow_only(spec, opts, {"size", "seed"});
    const uint64_t size = need(spec, opts, "size");
    if (size > grid.size()) parse_fail(spec, "size exceeds q^d");
    CounterRng rng(need(spec, opts, "seed"));
    return PointSet::from_indices(grid,
                                  rng.sample_without_replacement(grid.size(), size));
  }
  if (kind == "line") {
    if (args != "auto") parse_fail(spec, "expected line:auto");
    if (d < 2) {
      throw Error(Errc::kConstructionUnavailable, "line:auto needs d >= 2");
    }
    const auto i = f.sqrt_minus_one();
    if (!i) {
      throw Error(Errc::kConstructionUnavailable,
                  "no square root of -1 in F_" + std::to_string(f.q()));
    }
    std::vector<uint64_t> idx;
    GridPoint x(d, f.zero());
    for (uint32_t t = 0; t < f.q(); ++t) {
      x[0] = Fq{t};
      x[1] = f.mul(*i, Fq{t});
      idx.push_back(grid.encode(x));
    }
    return PointSet::from_indices(grid, idx);
  }
  if (kind == "subfield") {
    const auto opts = parse_options(spec, args);
    allow_only(spec, opts, {"k"});
    uint32_t k;
    if (opts.count("k")) {
      k = static_cast<uint32_t>(need(spec, opts, "k"));
    } else {
      if (f.l() % 2 != 0) {
        throw Error(Errc::kConstructionUnavailable,
                    "subfield needs an even extension degree, l = " +
                        std::to_string(f.l()));
      }
      k = f.l() / 2;
    }
    if (k == 0 || f.l() % k != 0) {
      throw Error(Errc::kConstructionUnavailable,
                  "no subfield of degree " + std::to_string(k));
    }
    const FqSet sub = make_set(f, f.subfield(k));
    return product_of(grid, std::vector<FqSet>(d, sub));
  }
  if (kind == "product") {
    const auto lists = split(args, ';');
    std::vector<FqSet> factors;
    for (std::string_view list : lists) factors.push_back(parse_list(spec, f, list));
    if (factors.size() == 1) factors.assign(d, factors[0]);
    if (factors.size() != d) {
      parse_fail(spec, "expected 1 or " + std::to_string(d) + " factors");
    }
    return product_of(grid, factors);
  }
  if (kind == "sphere") {
    const auto opts = parse_options(spec, args);
    allow_only(spec, opts, {"t"});
    return sphere_points(grid, element_at(spec, f, need(spec, opts, "t"))).points;
  }
  if (kind == "sphere_subset") {
    const auto opts = parse_options(spec, args);
    allow_only(spec, opts, {"t", "size", "seed"});
    const PointSet s =
        sphere_points(grid, element_at(spec, f, need(spec, opts, "t"))).points;
    return random_subset(grid, s.indices(), need(spec, opts, "size"),
                         need(spec, opts, "seed"), spec);
  }
  if (kind == "file") {
    if (args.empty()) parse_fail(spec, "missing path");
    return load_pointset(std::string(args), &grid);
  }
  parse_fail(spec, "unknown kind '" + std::string(kind) + "'");
}

}  // namespace fqlab
