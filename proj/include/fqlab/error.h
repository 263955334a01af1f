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

#ifndef FQLAB_ERROR_H_
#define FQLAB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fqlab {

enum class Errc {
  kInvalidField,
  kDivisionByZero,
  kCapExceeded,
  kEmptySet,
  kWrongDimension,
  kWrongFieldClass,
  kShapeMismatch,
  kZSliceEmpty,
  kKExceedsD,
  kSpecifierParse,
  kConstructionUnavailable,
  kHeaderMismatch,
  kParseError,
  kOverflow,
  kInvalidArgument,
};

std::string_view errc_name(Errc code);

// All library failures are reported as fqlab::Error carrying a typed code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fqlab

#endif  // FQLAB_ERROR_H_
