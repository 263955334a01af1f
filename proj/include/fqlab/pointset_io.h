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

#ifndef FQLAB_POINTSET_IO_H_
#define FQLAB_POINTSET_IO_H_

#include <iosfwd>
#include <string>

#include "fqlab/pointset.h"

namespace fqlab {

// Text format: a header line
//   # q=<q> p=<p> l=<l> d=<d> modulus=<c0,...,cl>
// then one point per line, d space-separated element indices, in
// increasing point-index order.
void write_pointset(std::ostream& out, const PointSet& e);
std::string header_line(const Grid& grid);

// With `expected`, the header must describe the same field and dimension
// (HeaderMismatch otherwise); without it the field is built from the header.
PointSet read_pointset(std::istream& in, const Grid* expected = nullptr);

void save_pointset(const std::string& path, const PointSet& e);
PointSet load_pointset(const std::string& path, const Grid* expected = nullptr);

}  // namespace fqlab

#endif  // FQLAB_POINTSET_IO_H_
