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

#ifndef FQLAB_SIMPLEX_H_
#define FQLAB_SIMPLEX_H_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "fqlab/caps.h"
#include "fqlab/kstar.h"
#include "fqlab/pointset.h"

namespace fqlab {

// Entry (i, j) = ||V_i - V_j|| for a (k+1)-tuple of points.
struct DistanceMatrix {
  uint32_t k = 0;
  std::vector<Fq> entries;  // (k+1)^2, row-major

  Fq at(uint32_t i, uint32_t j) const { return entries[i * (k + 1) + j]; }
};
DistanceMatrix distance_matrix(const Field& f, std::span<const GridPoint> tuple);

struct Filters {
  bool rank = true;               // V_i - V_0 span a k-dimensional space
  bool nonzero_distances = true;  // no pairwise distance equals 0
  bool any() const { return rank || nonzero_distances; }
};

// Rank of {V_i - V_0} over F_q.
uint32_t affine_rank(const Field& f, std::span<const GridPoint> tuple);
// Requires k <= d.
bool is_nondegenerate(const Field& f, std::span<const GridPoint> tuple,
                      const Filters& filters = {});

// Least row-major upper triangle over all (k+1)! vertex orderings.
struct SimplexClass {
  std::vector<uint32_t> key;
  friend auto operator<=>(const SimplexClass&, const SimplexClass&) = default;
};
constexpr uint32_t kMaxSimplexOrder = 5;
SimplexClass canonical_class(const Field& f, std::span<const GridPoint> tuple);
SimplexClass canonical_class(const DistanceMatrix& m);

struct CensusOptions {
  Filters filters;
  bool on_unit_sphere = false;  // requires E inside S_1 and k <= d - 1
  Sampling sampling;
};
struct CensusResult {
  uint64_t classes = 0;   // distinct keys among admissible tuples
  uint64_t tuples = 0;    // tuples examined
  uint64_t admissible = 0;
  bool sampled = false;   // classes is then a lower bound
  bool filtered = true;   // false: raw key count over all tuples
  uint64_t seed = 0;
};
CensusResult simplex_census(const PointSet& e, uint32_t k,
                            const CensusOptions& options = {},
                            const Caps& caps = {});

// A d x d matrix over F_q with O^T O = I.
struct Orthogonal {
  uint32_t d = 0;
  std::vector<Fq> m;  // row-major
  int determinant = 1;

  Fq at(uint32_t r, uint32_t c) const { return m[r * d + c]; }
};
Orthogonal identity_orthogonal(const Field& f, uint32_t d);
// Product of `reflections` random reflections x -> x - 2(x.v)v/||v||,
// ||v|| != 0; defaults to 2d.
Orthogonal random_orthogonal(const Field& f, uint32_t d, uint64_t seed,
                             int reflections = -1);
bool is_orthogonal(const Field& f, const Orthogonal& o);
GridPoint apply(const Field& f, const Orthogonal& o, std::span<const Fq> x);
// {O x + tau : x in E}.
PointSet apply_isometry(const PointSet& e, const Orthogonal& o,
                        std::span<const Fq> tau);

}  // namespace fqlab

#endif  // FQLAB_SIMPLEX_H_
