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

#include "fqlab/rng.h"

#include <unordered_map>

#include "fqlab/error.h"

namespace fqlab {

std::vector<uint64_t> CounterRng::sample_without_replacement(uint64_t universe,
                                                             uint64_t n) {
  if (n > universe) {
    throw Error(Errc::kInvalidArgument, "sample larger than universe");
  }
  std::unordered_map<uint64_t, uint64_t> swapped;
  auto at = [&](uint64_t i) {
    auto it = swapped.find(i);
    return it == swapped.end() ? i : it->second;
  };
  std::vector<uint64_t> out;
  out.reserve(n);
  for (uint64_t i = 0; i < n; ++i) {
    const uint64_t j = i + uniform(universe - i);
    const uint64_t vj = at(j);
    swapped[j] = at(i);
    out.push_back(vj);
  }
  return out;
}

}  // namespace fqlab
