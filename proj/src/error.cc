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

#include "fqlab/error.h"

namespace fqlab {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kInvalidField: return "InvalidField";
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kCapExceeded: return "CapExceeded";
    case Errc::kEmptySet: return "EmptySet";
    case Errc::kWrongDimension: return "WrongDimension";
    case Errc::kWrongFieldClass: return "WrongFieldClass";
    case Errc::kShapeMismatch: return "ShapeMismatch";
    case Errc::kZSliceEmpty: return "ZSliceEmpty";
    case Errc::kKExceedsD: return "KExceedsD";
    case Errc::kSpecifierParse: return "SpecifierParse";
    case Errc::kConstructionUnavailable: return "ConstructionUnavailable";
    case Errc::kHeaderMismatch: return "HeaderMismatch";
    case Errc::kParseError: return "ParseError";
    case Errc::kOverflow: return "Overflow";
    case Errc::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace fqlab
