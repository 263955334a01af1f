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

#include "fqlab/caps.h"

#include <string>

#include "fqlab/error.h"

namespace fqlab {

void check_grid_cap(const Grid& grid, Mode mode, const Caps& caps) {
  const uint64_t cap =
      mode == Mode::kExact ? caps.exact_points : caps.float_points;
  if (grid.size() > cap) {
    throw Error(Errc::kCapExceeded,
                "q^d = " + std::to_string(grid.size()) + " exceeds the " +
                    (mode == Mode::kExact ? "exact" : "float") +
                    " cap of " + std::to_string(cap) +
                    "; raise it with --cap");
  }
}

void check_tuple_cap(uint64_t count, const Caps& caps, const char* what) {
  if (count > caps.tuples) {
    throw Error(Errc::kCapExceeded,
                std::string(what) + ": " + std::to_string(count) +
                    " tuples exceeds the cap of " +
                    std::to_string(caps.tuples) +
                    "; raise it with --cap or sample with --samples");
  }
}

}  // namespace fqlab
