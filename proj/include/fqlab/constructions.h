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

#ifndef FQLAB_CONSTRUCTIONS_H_
#define FQLAB_CONSTRUCTIONS_H_

#include <string_view>

#include "fqlab/pointset.h"
#include "fqlab/sumset.h"

namespace fqlab {

// Builds a point set from a specifier:
//   grid
//   random:size=<n>,seed=<s>
//   line:auto                     {(t, i t, 0, ..., 0)} with i^2 = -1
//   subfield[:k=<k>]              (F_{p^k})^d embedded, default k = l/2
//   product:<A_1>;...;<A_d>       cartesian; one list is used for all axes
//   sphere:t=<t>
//   sphere_subset:t=<t>,size=<n>,seed=<s>
//   file:<path>
// Element lists are comma-separated indices or ranges a..b.
PointSet construct_set(const Grid& grid, std::string_view spec);

// "1,2,5..7" or "random:size=<n>,seed=<s>[,nonzero]" as a subset of F_q.
FqSet parse_field_subset(const Field& f, std::string_view spec);

}  // namespace fqlab

#endif  // FQLAB_CONSTRUCTIONS_H_
