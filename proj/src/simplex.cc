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

#include "fqlab/simplex.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "fqlab/error.h"
#include "fqlab/rng.h"

namespace fqlab {

namespace {

Fq norm_of_difference(const Field& f, std::span<const Fq> x,
                      std::span<const Fq> y) {
  Fq s = f.zero();
  for (size_t i = 0; i < x.size(); ++i) s = f.add(s, f.square(f.sub(x[i], y[i])));
  return s;
}

// Row reduction in place; returns the rank, and the determinant through
// `det` when the matrix is square.
uint32_t eliminate(const Field& f, std::vector<std::vector<Fq>>& rows,
                   Fq* det = nullptr) {
  const size_t cols = rows.empty() ? 0 : rows[0].size();
  uint32_t rank = 0;
  Fq d = f.one();
  for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == f.zero()) ++piv;
    if (piv == rows.size()) {
      d = f.zero();
      continue;
    }
    if (piv != rank) {
      std::swap(rows[piv], rows[rank]);
      d = f.neg(d);
    }
    const Fq lead = rows[rank][c];
    d = f.mul(d, lead);
    const Fq inv = f.inv(lead);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      const Fq factor = f.mul(rows[r][c], inv);
      if (factor == f.zero()) continue;
      for (size_t j = c; j < cols; ++j) {
        rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[rank][j]));
      }
    }
    ++rank;
  }
  if (det) *det = rank == cols && rank == rows.size() ? d : f.zero();
  return rank;
}

std::vector<std::vector<uint32_t>> permutations(uint32_t n) {
  std::vector<uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<uint32_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

SimplexClass key_from(std::span<const uint32_t> dist, uint32_t n,
                      const std::vector<std::vector<uint32_t>>& perms) {
  std::vector<uint32_t> best;
  std::vector<uint32_t> cur;
  cur.reserve(n * (n - 1) / 2);
  for (const auto& p : perms) {
    cur.clear();
    for (uint32_t i = 0; i < n; ++i) {
      for (uint32_t j = i + 1; j < n; ++j) cur.push_back(dist[p[i] * n + p[j]]);
    }
    if (best.empty() || cur < best) best = cur;
  }
  return SimplexClass{std::move(best)};
}

void check_order(uint32_t k, uint32_t d) {
  if (k > d) throw Error(Errc::kKExceedsD, "simplex order exceeds dimension");
  if (k > kMaxSimplexOrder) {
    throw Error(Errc::kInvalidArgument, "simplex order above 5 unsupported");
  }
}

}  // namespace

DistanceMatrix distance_matrix(const Field& f, std::span<const GridPoint> tuple) {
  if (tuple.empty()) throw Error(Errc::kInvalidArgument, "empty tuple");
  const uint32_t n = static_cast<uint32_t>(tuple.size());
  DistanceMatrix m;
  m.k = n - 1;
  m.entries.assign(n * n, f.zero());
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = i + 1; j < n; ++j) {
      const Fq t = norm_of_difference(f, tuple[i], tuple[j]);
      m.entries[i * n + j] = t;
      m.entries[j * n + i] = t;
    }
  }
  return m;
}

uint32_t affine_rank(const Field& f, std::span<const GridPoint> tuple) {
  std::vector<std::vector<Fq>> rows;
  for (size_t i = 1; i < tuple.size(); ++i) {
    rows.push_back(sub(f, tuple[i], tuple[0]));
  }
  if (rows.empty()) return 0;
  return eliminate(f, rows);
}

bool is_nondegenerate(const Field& f, std::span<const GridPoint> tuple,
                      const Filters& filters) {
  if (tuple.empty()) throw Error(Errc::kInvalidArgument, "empty tuple");
  const uint32_t k = static_cast<uint32_t>(tuple.size()) - 1;
  check_order(k, static_cast<uint32_t>(tuple[0].size()));
  if (filters.nonzero_distances) {
    const DistanceMatrix m = distance_matrix(f, tuple);
    for (uint32_t i = 0; i <= k; ++i) {
      for (uint32_t j = i + 1; j <= k; ++j) {
        if (m.at(i, j) == f.zero()) return false;
      }
    }
  }
  return !filters.rank || affine_rank(f, tuple) == k;
}

SimplexClass canonical_class(const DistanceMatrix& m) {
  if (m.k > kMaxSimplexOrder) {
    throw Error(Errc::kInvalidArgument, "simplex order above 5 unsupported");
  }
  const uint32_t n = m.k + 1;
  std::vector<uint32_t> dist(n * n);
  for (uint32_t i = 0; i < n * n; ++i) dist[i] = m.entries[i].v;
  return key_from(dist, n, permutations(n));
}

SimplexClass canonical_class(const Field& f, std::span<const GridPoint> tuple) {
  return canonical_class(distance_matrix(f, tuple));
}

CensusResult simplex_census(const PointSet& e, uint32_t k,
                            const CensusOptions& options, const Caps& caps) {
  const Field& f = e.field();
  const uint32_t d = e.d();
  check_order(k, d);
  if (options.on_unit_sphere) {
    if (k + 1 > d) {
      throw Error(Errc::kKExceedsD, "sphere census needs k <= d - 1");
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (!(norm(f, e.coords(i)) == f.one())) {
        throw Error(Errc::kInvalidArgument, "set is not on the unit sphere");
      }
    }
  }
  const uint32_t n = k + 1;
  const uint64_t size = e.size();
  CensusResult out;
  out.filtered = options.filters.any();
  if (size == 0) return out;

  // |E|^{k+1}, saturating at the cap.
  uint64_t work = 1;
  for (uint32_t i = 0; i < n && work <= caps.tuples; ++i) work *= size;
  const bool sample = work > caps.tuples;
  if (sample && !options.sampling.enabled) {
    check_tuple_cap(work, caps, "simplex census");
  }

  // Pairwise distances between members, by member position.
  std::vector<uint32_t> pair(size * size, 0);
  for (uint64_t i = 0; i < size; ++i) {
    for (uint64_t j = i + 1; j < size; ++j) {
      const uint32_t t = norm_of_difference(f, e.coords(i), e.coords(j)).v;
      pair[i * size + j] = t;
      pair[j * size + i] = t;
    }
  }
  const auto perms = permutations(n);
  std::vector<SimplexClass> keys;
  std::vector<uint32_t> dist(n * n);
  std::vector<GridPoint> tuple(n);

  auto visit = [&](std::span<const uint64_t> idx) {
    ++out.tuples;
    if (options.filters.nonzero_distances) {
      for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = i + 1; j < n; ++j) {
          if (pair[idx[i] * size + idx[j]] == 0) return;
        }
      }
    }
    if (options.filters.rank) {
      for (uint32_t i = 0; i < n; ++i) tuple[i] = e.point(idx[i]);
      if (affine_rank(f, tuple) != k) return;
    }
    ++out.admissible;
    for (uint32_t i = 0; i < n; ++i) {
      for (uint32_t j = 0; j < n; ++j) dist[i * n + j] = pair[idx[i] * size + idx[j]];
    }
    keys.push_back(key_from(dist, n, perms));
  };

  std::vector<uint64_t> idx(n, 0);
  if (sample) {
    out.sampled = true;
    out.seed = options.sampling.seed;
    CounterRng rng(options.sampling.seed);
    for (uint64_t s = 0; s < options.sampling.samples; ++s) {
      for (auto& v : idx) v = rng.uniform(size);
      visit(idx);
    }
  } else {
    // Filtered: strictly increasing positions (filters force distinct
    // points).  Raw: non-decreasing, so repeated points are included.
    const bool strict = out.filtered;
    if (strict && size < n) return out;
    for (uint32_t i = 0; i < n; ++i) idx[i] = strict ? i : 0;
    while (true) {
      visit(idx);
      int pos = static_cast<int>(n) - 1;
      while (pos >= 0) {
        const uint64_t limit = strict ? size - (n - 1 - pos) : size;
        if (idx[pos] + 1 < limit) break;
        --pos;
      }
      if (pos < 0) break;
      ++idx[pos];
      for (uint32_t j = pos + 1; j < n; ++j) idx[j] = strict ? idx[j - 1] + 1 : idx[j - 1];
    }
  }
  std::sort(keys.begin(), keys.end());
  out.classes = std::unique(keys.begin(), keys.end()) - keys.begin();
  return out;
}

Orthogonal identity_orthogonal(const Field& f, uint32_t d) {
  Orthogonal o;
  o.d = d;
  o.m.assign(d * d, f.zero());
  for (uint32_t i = 0; i < d; ++i) o.m[i * d + i] = f.one();
  return o;
}

Orthogonal random_orthogonal(const Field& f, uint32_t d, uint64_t seed,
                             int reflections) {
  if (d == 0) throw Error(Errc::kWrongDimension, "dimension must be >= 1");
  if (reflections < 0) reflections = static_cast<int>(2 * d);
  CounterRng rng(seed);
  Orthogonal o = identity_orthogonal(f, d);
  const Fq two = f.from_int(2);
  GridPoint v(d);
  for (int r = 0; r < reflections; ++r) {
    Fq nv;
    do {
      for (auto& c : v) c = Fq{static_cast<uint32_t>(rng.uniform(f.q()))};
      nv = norm(f, v);
    } while (nv == f.zero());
    const Fq c = f.div(two, nv);
    // O <- (I - c v v^T) O
    std::vector<Fq> next(d * d);
    for (uint32_t col = 0; col < d; ++col) {
      Fq vx = f.zero();
      for (uint32_t i = 0; i < d; ++i) vx = f.add(vx, f.mul(v[i], o.at(i, col)));
      const Fq s = f.mul(c, vx);
      for (uint32_t row = 0; row < d; ++row) {
        next[row * d + col] = f.sub(o.at(row, col), f.mul(s, v[row]));
      }
    }
    o.m = std::move(next);
  }
  std::vector<std::vector<Fq>> rows(d, std::vector<Fq>(d));
  for (uint32_t r = 0; r < d; ++r) {
    for (uint32_t c = 0; c < d; ++c) rows[r][c] = o.at(r, c);
  }
  Fq det;
  eliminate(f, rows, &det);
  if (det == f.one()) {
    o.determinant = 1;
  } else if (det == f.minus_one()) {
    o.determinant = -1;
  } else {
    throw Error(Errc::kInvalidArgument, "reflection product is singular");
  }
  return o;
}

bool is_orthogonal(const Field& f, const Orthogonal& o) {
  for (uint32_t i = 0; i < o.d; ++i) {
    for (uint32_t j = 0; j < o.d; ++j) {
      Fq s = f.zero();
      for (uint32_t r = 0; r < o.d; ++r) s = f.add(s, f.mul(o.at(r, i), o.at(r, j)));
      if (!(s == (i == j ? f.one() : f.zero()))) return false;
    }
  }
  return true;
}

GridPoint apply(const Field& f, const Orthogonal& o, std::span<const Fq> x) {
  if (x.size() != o.d) throw Error(Errc::kShapeMismatch, "point dimension");
  GridPoint out(o.d, f.zero());
  for (uint32_t r = 0; r < o.d; ++r) {
    for (uint32_t c = 0; c < o.d; ++c) out[r] = f.add(out[r], f.mul(o.at(r, c), x[c]));
  }
  return out;
}

PointSet apply_isometry(const PointSet& e, const Orthogonal& o,
                        std::span<const Fq> tau) {
  const Field& f = e.field();
  if (o.d != e.d() || tau.size() != e.d()) {
    throw Error(Errc::kShapeMismatch, "isometry dimension");
  }
  std::vector<GridPoint> pts;
  pts.reserve(e.size());
  for (size_t i = 0; i < e.size(); ++i) pts.push_back(add(f, apply(f, o, e.coords(i)), tau));
  return PointSet::from_points(e.grid(), pts);
}

}  // namespace fqlab
