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

#ifndef FQLAB_SUMSET_H_
#define FQLAB_SUMSET_H_

#include <cstdint>
#include <span>
#include <vector>

#include "fqlab/caps.h"
#include "fqlab/field.h"
#include "fqlab/kstar.h"

namespace fqlab {

// Subsets of F_q as sorted, duplicate-free element lists.
using FqSet = std::vector<Fq>;

FqSet make_set(const Field& f, std::span<const Fq> elements);
FqSet sumset(const Field& f, const FqSet& a, const FqSet& b);
FqSet product_set(const Field& f, const FqSet& a, const FqSet& b);
FqSet dilate(const Field& f, Fq c, const FqSet& a);

// A.A + ... + A.A with `terms` summands.
FqSet product_sumset(const Field& f, const FqSet& a, uint32_t terms);
// a_1 A + ... + a_{d-1} A + z A.
FqSet linear_sumset(const Field& f, const FqSet& a, std::span<const Fq> coeffs,
                    Fq z);

struct SumProductScan {
  uint64_t tuples = 0;  // coefficient tuples examined
  uint64_t above = 0;   // tuples whose sumset exceeds q/2
  double fraction = 0.0;
  bool sampled = false;
  uint64_t seed = 0;
};
// Over (a_1..a_{d-1}) in A^{d-1}: the fraction with
// |a_1 A + ... + a_{d-1} A + z A| > q/2.
SumProductScan sum_product_scan(const Field& f, const FqSet& a, uint32_t d,
                                Fq z, const Caps& caps = {},
                                const Sampling& sampling = {});

}  // namespace fqlab

#endif  // FQLAB_SUMSET_H_
