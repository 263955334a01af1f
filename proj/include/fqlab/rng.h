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

#ifndef FQLAB_RNG_H_
#define FQLAB_RNG_H_

#include <cstdint>
#include <vector>

namespace fqlab {

// Counter-based generator: the i-th draw of stream s under seed k is a pure
// function of (k, s, i).  Every random quantity in the project is derived
// from one 64-bit seed through this type.
class CounterRng {
 public:
  explicit CounterRng(uint64_t seed, uint64_t stream = 0)
      : key_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL))) {}

  // A child generator whose draws are independent of this one's.
  CounterRng fork(uint64_t stream) const { return CounterRng(key_, stream + 1); }

  uint64_t next() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  // Uniform in [0, bound), bound > 0.  Rejection sampling, no modulo bias.
  uint64_t uniform(uint64_t bound) {
    const uint64_t limit = bound * (UINT64_MAX / bound);
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  // Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // n distinct values from [0, universe), in draw order (partial
  // Fisher-Yates over a virtual identity permutation).
  std::vector<uint64_t> sample_without_replacement(uint64_t universe,
                                                   uint64_t n);

  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace fqlab

#endif  // FQLAB_RNG_H_
