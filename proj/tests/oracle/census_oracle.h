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

#ifndef FQLAB_TESTS_ORACLE_CENSUS_ORACLE_H_
#define FQLAB_TESTS_ORACLE_CENSUS_ORACLE_H_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "fqlab/pointset.h"

namespace fqlab::testing {

// Brute-force congruence census: every ordered (k+1)-tuple of E is
// filtered by a direct rank / zero-distance test, then bucketed against
// the distance matrices already seen, trying every vertex permutation.
inline uint64_t census_oracle(const PointSet& e, uint32_t k, bool filtered) {
  const Field& f = e.field();
  const uint32_t d = e.d();
  const uint32_t n = k + 1;
  const uint64_t size = e.size();
  std::vector<std::vector<uint32_t>> reps;
  std::vector<uint64_t> idx(n, 0);
  std::vector<uint32_t> perm(n);
  if (size == 0) return 0;
  auto dist = [&](uint64_t a, uint64_t b) {
    Fq s = f.zero();
    for (uint32_t c = 0; c < d; ++c) {
      const Fq diff = f.sub(e.coords(a)[c], e.coords(b)[c]);
      s = f.add(s, f.mul(diff, diff));
    }
    return s.v;
  };
  auto rank = [&]() {
    std::vector<std::vector<Fq>> rows;
    for (uint32_t i = 1; i < n; ++i) {
      std::vector<Fq> r(d);
      for (uint32_t c = 0; c < d; ++c) {
        r[c] = f.sub(e.coords(idx[i])[c], e.coords(idx[0])[c]);
      }
      rows.push_back(r);
    }
    uint32_t rk = 0;
    for (uint32_t c = 0; c < d && rk < rows.size(); ++c) {
      uint32_t piv = rk;
      while (piv < rows.size() && rows[piv][c] == f.zero()) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rk]);
      const Fq inv = f.inv(rows[rk][c]);
      for (uint32_t r = 0; r < rows.size(); ++r) {
        if (r == rk) continue;
        const Fq factor = f.mul(rows[r][c], inv);
        for (uint32_t j = 0; j < d; ++j) {
          rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[rk][j]));
        }
      }
      ++rk;
    }
    return rk;
  };
  while (true) {
    std::vector<uint32_t> m(n * n);
    bool zero = false;
    for (uint32_t i = 0; i < n; ++i) {
      for (uint32_t j = 0; j < n; ++j) {
        m[i * n + j] = dist(idx[i], idx[j]);
        zero = zero || (i != j && m[i * n + j] == 0);
      }
    }
    if (!filtered || (!zero && rank() == k)) {
      bool found = false;
      for (const auto& r : reps) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
          bool same = true;
          for (uint32_t i = 0; i < n && same; ++i) {
            for (uint32_t j = 0; j < n && same; ++j) {
              same = r[i * n + j] == m[perm[i] * n + perm[j]];
            }
          }
          found = same;
        } while (!found && std::next_permutation(perm.begin(), perm.end()));
        if (found) break;
      }
      if (!found) reps.push_back(m);
    }
    uint32_t pos = 0;
    while (pos < n && ++idx[pos] == size) idx[pos++] = 0;
    if (pos == n) break;
  }
  return reps.size();
}

}  // namespace fqlab::testing

#endif  // FQLAB_TESTS_ORACLE_CENSUS_ORACLE_H_
