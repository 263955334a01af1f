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

#include "fqlab/grid.h"

#include <string>
#include <utility>

#include "fqlab/error.h"

namespace fqlab {

Fq norm(const Field& f, std::span<const Fq> x) {
  Fq s = f.zero();
  for (Fq c : x) s = f.add(s, f.square(c));
  return s;
}

Fq dot(const Field& f, std::span<const Fq> x, std::span<const Fq> y) {
  if (x.size() != y.size()) throw Error(Errc::kShapeMismatch, "dot: lengths");
  Fq s = f.zero();
  for (size_t i = 0; i < x.size(); ++i) s = f.add(s, f.mul(x[i], y[i]));
  return s;
}

GridPoint sub(const Field& f, std::span<const Fq> x, std::span<const Fq> y) {
  if (x.size() != y.size()) throw Error(Errc::kShapeMismatch, "sub: lengths");
  GridPoint out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = f.sub(x[i], y[i]);
  return out;
}

GridPoint add(const Field& f, std::span<const Fq> x, std::span<const Fq> y) {
  if (x.size() != y.size()) throw Error(Errc::kShapeMismatch, "add: lengths");
  GridPoint out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = f.add(x[i], y[i]);
  return out;
}

GridPoint scale(const Field& f, Fq a, std::span<const Fq> x) {
  GridPoint out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = f.mul(a, x[i]);
  return out;
}

Grid::Grid(FieldPtr field, uint32_t d) : field_(std::move(field)), d_(d) {
  if (d_ == 0) throw Error(Errc::kWrongDimension, "dimension must be >= 1");
  strides_.resize(d_ + 1);
  strides_[0] = 1;
  for (uint32_t j = 1; j <= d_; ++j) {
    strides_[j] = strides_[j - 1] * field_->q();
    if (strides_[j] > kMaxPoints) {
      throw Error(Errc::kCapExceeded,
                  "q^d exceeds 2^32 (q=" + std::to_string(field_->q()) +
                      ", d=" + std::to_string(d_) + ")");
    }
  }
  size_ = strides_[d_];
}

uint64_t Grid::encode(std::span<const Fq> x) const {
  if (x.size() != d_) throw Error(Errc::kShapeMismatch, "point dimension");
  uint64_t idx = 0;
  for (uint32_t j = d_; j-- > 0;) {
    if (x[j].v >= field_->q()) {
      throw Error(Errc::kInvalidArgument, "coordinate out of range");
    }
    idx = idx * field_->q() + x[j].v;
  }
  return idx;
}

GridPoint Grid::decode(uint64_t index) const {
  GridPoint out(d_);
  decode_into(index, out);
  return out;
}

void Grid::decode_into(uint64_t index, std::span<Fq> out) const {
  const uint32_t q = field_->q();
  for (uint32_t j = 0; j < d_; ++j) {
    out[j] = Fq{static_cast<uint32_t>(index % q)};
    index /= q;
  }
}

}  // namespace fqlab
