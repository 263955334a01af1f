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

#ifndef FQLAB_GRID_H_
#define FQLAB_GRID_H_

#include <cstdint>
#include <span>
#include <vector>

#include "fqlab/field.h"

namespace fqlab {

using GridPoint = std::vector<Fq>;

// ||x|| = x_1^2 + ... + x_d^2.
Fq norm(const Field& f, std::span<const Fq> x);
Fq dot(const Field& f, std::span<const Fq> x, std::span<const Fq> y);
GridPoint sub(const Field& f, std::span<const Fq> x, std::span<const Fq> y);
GridPoint add(const Field& f, std::span<const Fq> x, std::span<const Fq> y);
GridPoint scale(const Field& f, Fq a, std::span<const Fq> x);

// The vector space F_q^d with its mixed-radix point encoding:
// index = x_1 + x_2 q + ... + x_d q^{d-1}, coordinate 1 least significant.
class Grid {
 public:
  static constexpr uint64_t kMaxPoints = uint64_t{1} << 32;

  Grid(FieldPtr field, uint32_t d);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  uint32_t d() const { return d_; }
  uint32_t q() const { return field_->q(); }
  uint64_t size() const { return size_; }
  // q^j
  uint64_t stride(uint32_t j) const { return strides_[j]; }

  uint64_t encode(std::span<const Fq> x) const;
  GridPoint decode(uint64_t index) const;
  void decode_into(uint64_t index, std::span<Fq> out) const;

  bool same_shape(const Grid& o) const {
    return d_ == o.d_ && field_->same_as(*o.field_);
  }

 private:
  FieldPtr field_;
  uint32_t d_;
  uint64_t size_;
  std::vector<uint64_t> strides_;
};

}  // namespace fqlab

#endif  // FQLAB_GRID_H_
