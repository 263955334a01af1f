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

#ifndef FQLAB_KSTAR_H_
#define FQLAB_KSTAR_H_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fqlab/caps.h"
#include "fqlab/distlab.h"
#include "fqlab/pointset.h"

namespace fqlab {

// Seeded uniform sampling used when exhaustive enumeration is over the cap.
struct Sampling {
  bool enabled = false;
  uint64_t seed = 0;
  uint64_t samples = 0;
};

// Sparse counts keyed by (t_1, ..., t_k) in F_q^k, packed base q with t_1
// least significant.
class KStarTable {
 public:
  KStarTable(uint32_t q, uint32_t k) : q_(q), k_(k) {}

  uint32_t k() const { return k_; }
  uint64_t size() const { return entries_.size(); }
  uint64_t total() const;
  uint64_t count(std::span<const Fq> key) const;
  uint64_t pack(std::span<const Fq> key) const;
  std::vector<Fq> unpack(uint64_t key) const;
  // (packed key, count), keys ascending.
  const std::vector<std::pair<uint64_t, uint64_t>>& entries() const {
    return entries_;
  }

 private:
  friend KStarTable kstar_nu(const PointSet&, std::span<const GridPoint>,
                             PinKind);
  uint32_t q_;
  uint32_t k_;
  std::vector<std::pair<uint64_t, uint64_t>> entries_;
};

// nu_{y^1..y^k}(t) = #{x in E : ||x - y^i|| = t_i for all i} (or x . y^i).
KStarTable kstar_nu(const PointSet& e, std::span<const GridPoint> pins,
                    PinKind kind);

struct KStarMean {
  mpq_class mean;          // exact over the pin tuples examined
  uint64_t tuples = 0;     // pin tuples examined
  bool sampled = false;
  uint64_t seed = 0;
};
// Mean over (y^1..y^k) in E^k of the number of distinct k-tuples attained.
// `on_unit_sphere` requires E inside S_1.
KStarMean kstar_mean_image(const PointSet& e, uint32_t k, PinKind kind,
                           bool on_unit_sphere, const Caps& caps = {},
                           const Sampling& sampling = {});

struct KStarMoment {
  mpz_class lhs;        // sum over pins in E^k and keys of nu^2
  mpq_class reference;  // |E|^{k+2}/q^k + q^d |E|^k
  double ratio = 0.0;
};
KStarMoment kstar_second_moment(const PointSet& e, uint32_t k, PinKind kind,
                                const Caps& caps = {});
// The same sum as sum_{x, x'} c(x, x')^k, c counting y in E that do not
// separate x from x'.
mpz_class kstar_second_moment_by_pairs(const PointSet& e, uint32_t k,
                                       PinKind kind);

}  // namespace fqlab

#endif  // FQLAB_KSTAR_H_
