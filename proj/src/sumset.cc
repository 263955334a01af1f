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

#include "fqlab/sumset.h"

#include "fqlab/error.h"
#include "fqlab/rng.h"

namespace fqlab {

namespace {

FqSet from_marks(const std::vector<uint8_t>& marks) {
  FqSet out;
  for (uint32_t v = 0; v < marks.size(); ++v) {
    if (marks[v]) out.push_back(Fq{v});
  }
  return out;
}

void require_nonempty(const FqSet& a) {
  if (a.empty()) throw Error(Errc::kEmptySet, "empty subset of F_q");
}

}  // namespace

FqSet make_set(const Field& f, std::span<const Fq> elements) {
  std::vector<uint8_t> marks(f.q(), 0);
  for (Fq a : elements) {
    if (a.v >= f.q()) throw Error(Errc::kInvalidArgument, "element out of range");
    marks[a.v] = 1;
  }
  return from_marks(marks);
}

FqSet sumset(const Field& f, const FqSet& a, const FqSet& b) {
  std::vector<uint8_t> marks(f.q(), 0);
  for (Fq x : a) {
    for (Fq y : b) marks[f.add(x, y).v] = 1;
  }
  return from_marks(marks);
}

FqSet product_set(const Field& f, const FqSet& a, const FqSet& b) {
  std::vector<uint8_t> marks(f.q(), 0);
  for (Fq x : a) {
    for (Fq y : b) marks[f.mul(x, y).v] = 1;
  }
  return from_marks(marks);
}

FqSet dilate(const Field& f, Fq c, const FqSet& a) {
  std::vector<uint8_t> marks(f.q(), 0);
  for (Fq x : a) marks[f.mul(c, x).v] = 1;
  return from_marks(marks);
}

FqSet product_sumset(const Field& f, const FqSet& a, uint32_t terms) {
  require_nonempty(a);
  if (terms == 0) throw Error(Errc::kInvalidArgument, "need at least one term");
  const FqSet prod = product_set(f, a, a);
  FqSet acc = prod;
  for (uint32_t i = 1; i < terms; ++i) acc = sumset(f, acc, prod);
  return acc;
}

FqSet linear_sumset(const Field& f, const FqSet& a, std::span<const Fq> coeffs,
                    Fq z) {
  require_nonempty(a);
  FqSet acc = dilate(f, z, a);
  for (Fq c : coeffs) acc = sumset(f, acc, dilate(f, c, a));
  return acc;
}

SumProductScan sum_product_scan(const Field& f, const FqSet& a, uint32_t d,
                                Fq z, const Caps& caps,
                                const Sampling& sampling) {
  require_nonempty(a);
  if (d < 2) throw Error(Errc::kWrongDimension, "scan needs d >= 2");
  if (z == f.zero()) throw Error(Errc::kInvalidArgument, "scan needs z != 0");
  const uint64_t n = a.size();
  const uint32_t slots = d - 1;
  uint64_t tuples = 1;
  for (uint32_t i = 0; i < slots && tuples <= caps.tuples; ++i) tuples *= n;
  SumProductScan out;
  std::vector<Fq> coeffs(slots);
  auto score = [&] {
    ++out.tuples;
    if (2 * linear_sumset(f, a, coeffs, z).size() > f.q()) ++out.above;
  };
  if (tuples > caps.tuples) {
    if (!sampling.enabled) check_tuple_cap(tuples, caps, "sum-product scan");
    out.sampled = true;
    out.seed = sampling.seed;
    CounterRng rng(sampling.seed);
    for (uint64_t s = 0; s < sampling.samples; ++s) {
      for (auto& c : coeffs) c = a[rng.uniform(n)];
      score();
    }
  } else {
    std::vector<uint64_t> idx(slots, 0);
    while (true) {
      for (uint32_t i = 0; i < slots; ++i) coeffs[i] = a[idx[i]];
      score();
      uint32_t i = 0;
      while (i < slots && ++idx[i] == n) idx[i++] = 0;
      if (i == slots) break;
    }
  }
  if (out.tuples == 0) throw Error(Errc::kInvalidArgument, "no samples drawn");
  out.fraction = static_cast<double>(out.above) / out.tuples;
  return out;
}

}  // namespace fqlab
