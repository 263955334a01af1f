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

#include "fqlab/pointset.h"

#include <bit>

#include "fqlab/error.h"

namespace fqlab {

PointSet::PointSet(const Grid& grid)
    : grid_(grid), bits_((grid.size() + 63) / 64, 0) {}

PointSet PointSet::from_indices(const Grid& grid,
                                std::span<const uint64_t> indices) {
  PointSet s(grid);
  for (uint64_t i : indices) {
    if (i >= grid.size()) {
      throw Error(Errc::kInvalidArgument, "point index out of range");
    }
    s.bits_[i >> 6] |= uint64_t{1} << (i & 63);
  }
  s.finalize();
  return s;
}

PointSet PointSet::from_points(const Grid& grid,
                               std::span<const GridPoint> points) {
  std::vector<uint64_t> idx;
  idx.reserve(points.size());
  for (const auto& x : points) idx.push_back(grid.encode(x));
  return from_indices(grid, idx);
}

PointSet PointSet::full(const Grid& grid) {
  PointSet s(grid);
  for (uint64_t i = 0; i < grid.size(); ++i) {
    s.bits_[i >> 6] |= uint64_t{1} << (i & 63);
  }
  s.finalize();
  return s;
}

void PointSet::finalize() {
  members_.clear();
  for (size_t w = 0; w < bits_.size(); ++w) {
    uint64_t word = bits_[w];
    while (word) {
      members_.push_back(w * 64 + std::countr_zero(word));
      word &= word - 1;
    }
  }
  const uint32_t d = grid_.d();
  coords_.resize(members_.size() * d);
  for (size_t i = 0; i < members_.size(); ++i) {
    grid_.decode_into(members_[i], std::span<Fq>(coords_.data() + i * d, d));
  }
}

std::vector<GridPoint> PointSet::points() const {
  std::vector<GridPoint> out;
  out.reserve(size());
  for (size_t i = 0; i < size(); ++i) out.push_back(point(i));
  return out;
}

bool PointSet::is_subset_of(const PointSet& other) const {
  if (!grid_.same_shape(other.grid_)) return false;
  for (size_t w = 0; w < bits_.size(); ++w) {
    if (bits_[w] & ~other.bits_[w]) return false;
  }
  return true;
}

}  // namespace fqlab
