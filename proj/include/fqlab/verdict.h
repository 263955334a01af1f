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

#ifndef FQLAB_VERDICT_H_
#define FQLAB_VERDICT_H_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fqlab {

enum class Status { kPass, kFail, kSkipped, kFinding };
std::string_view status_name(Status s);

// An exact rational or an approximate real.
struct Quantity {
  std::optional<mpq_class> exact;
  double approx = 0.0;

  Quantity() = default;
  Quantity(const mpq_class& v) : exact(v), approx(v.get_d()) {}  // NOLINT
  Quantity(const mpz_class& v) : Quantity(mpq_class(v)) {}       // NOLINT
  Quantity(double v) : approx(v) {}                               // NOLINT
  static Quantity integer(int64_t v) { return Quantity(mpq_class(v)); }

  std::string to_string() const;
};

// Outcome of one checked statement: lhs is compared against rhs; margin is
// the relative slack (negative on failure).
struct Verdict {
  Status status = Status::kSkipped;
  Quantity lhs;
  Quantity rhs;
  double margin = 0.0;
  std::string note;
};

// Verdicts for "lhs > rhs", "lhs < rhs", "lhs <= rhs", "lhs >= rhs",
// "lhs == rhs" with exact comparison when both sides are exact.
Verdict verdict_greater(Quantity lhs, Quantity rhs);
Verdict verdict_less(Quantity lhs, Quantity rhs);
Verdict verdict_less_equal(Quantity lhs, Quantity rhs);
Verdict verdict_greater_equal(Quantity lhs, Quantity rhs);
Verdict verdict_equal(Quantity lhs, Quantity rhs);
Verdict verdict_skipped(std::string note);

// Least integer n with n >= q^{num/den}, computed exactly.
uint64_t ceil_power(uint64_t q, unsigned num, unsigned den);

}  // namespace fqlab

#endif  // FQLAB_VERDICT_H_
