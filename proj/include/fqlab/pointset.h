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

#ifndef FQLAB_POINTSET_H_
#define FQLAB_POINTSET_H_

#include <cstdint>
#include <utility>
#include <span>
#include <vector>

#include "fqlab/grid.h"

namespace fqlab {

// An immutable subset of F_q^d: a dense bit array over the grid together
// with the sorted list of member indices and a flat coordinate cache.
class PointSet {
 public:
  explicit PointSet(const Grid& grid);
  PointSet(FieldPtr field, uint32_t d) : PointSet(Grid(std::move(field), d)) {}

  static PointSet from_indices(const Grid& grid,
                               std::span<const uint64_t> indices);
  static PointSet from_points(const Grid& grid,
                              std::span<const GridPoint> points);
  static PointSet full(const Grid& grid);

  const Grid& grid() const { return grid_; }
  const Field& field() const { return grid_.field(); }
  const FieldPtr& field_ptr() const { return grid_.field_ptr(); }
  uint32_t d() const { return grid_.d(); }
  uint64_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool contains(uint64_t index) const {
    return index < grid_.size() && ((bits_[index >> 6] >> (index & 63)) & 1);
  }
  bool contains(std::span<const Fq> x) const {
    return contains(grid_.encode(x));
  }

  // Member indices in increasing order.
  const std::vector<uint64_t>& indices() const { return members_; }
  // Coordinates of the i-th member.
  std::span<const Fq> coords(size_t i) const {
    return {coords_.data() + i * grid_.d(), grid_.d()};
  }
  GridPoint point(size_t i) const {
    auto c = coords(i);
    return GridPoint(c.begin(), c.end());
  }
  std::vector<GridPoint> points() const;

  bool is_subset_of(const PointSet& other) const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.grid_.same_shape(b.grid_) && a.members_ == b.members_;
  }

 private:
  void finalize();

  Grid grid_;
  std::vector<uint64_t> bits_;
  std::vector<uint64_t> members_;
  std::vector<Fq> coords_;
};

}  // namespace fqlab

#endif  // FQLAB_POINTSET_H_
