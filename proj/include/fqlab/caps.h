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

#ifndef FQLAB_CAPS_H_
#define FQLAB_CAPS_H_

#include <cstdint>

#include "fqlab/characters.h"
#include "fqlab/grid.h"

namespace fqlab {

// Work limits.  Exceeding one raises CapExceeded; callers raise them
// explicitly when they mean to pay for a larger run.
struct Caps {
  uint64_t exact_points = uint64_t{1} << 14;
  uint64_t float_points = uint64_t{1} << 22;
  uint64_t tuples = 100'000'000;
};

// Throws CapExceeded when the grid is too large for a dense table.
void check_grid_cap(const Grid& grid, Mode mode, const Caps& caps);
// Throws CapExceeded when count > caps.tuples.
void check_tuple_cap(uint64_t count, const Caps& caps, const char* what);

}  // namespace fqlab

#endif  // FQLAB_CAPS_H_
