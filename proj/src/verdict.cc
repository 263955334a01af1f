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

#include "fqlab/verdict.h"

#include <cmath>
#include <cstdio>
#include <utility>

#include "fqlab/error.h"

namespace fqlab {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kSkipped:
      return "skipped";
    case Status::kFinding:
      return "finding";
  }
  return "unknown";
}

std::string Quantity::to_string() const {
  if (exact) return exact->get_str();
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", approx);
  return buf;
}

namespace {

// sign of lhs - rhs
int compare(const Quantity& lhs, const Quantity& rhs) {
  if (lhs.exact && rhs.exact) return cmp(*lhs.exact, *rhs.exact);
  if (lhs.approx < rhs.approx) return -1;
  return lhs.approx > rhs.approx ? 1 : 0;
}

double relative(double num, double rhs) {
  return rhs != 0.0 ? num / std::fabs(rhs) : num;
}

Verdict make(bool ok, Quantity lhs, Quantity rhs, double margin) {
  Verdict v;
  v.status = ok ? Status::kPass : Status::kFail;
  v.margin = margin;
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  return v;
}

}  // namespace

Verdict verdict_greater(Quantity lhs, Quantity rhs) {
  const bool ok = compare(lhs, rhs) > 0;
  const double m = relative(lhs.approx - rhs.approx, rhs.approx);
  return make(ok, std::move(lhs), std::move(rhs), m);
}

Verdict verdict_greater_equal(Quantity lhs, Quantity rhs) {
  const bool ok = compare(lhs, rhs) >= 0;
  const double m = relative(lhs.approx - rhs.approx, rhs.approx);
  return make(ok, std::move(lhs), std::move(rhs), m);
}

Verdict verdict_less(Quantity lhs, Quantity rhs) {
  const bool ok = compare(lhs, rhs) < 0;
  const double m = relative(rhs.approx - lhs.approx, rhs.approx);
  return make(ok, std::move(lhs), std::move(rhs), m);
}

Verdict verdict_less_equal(Quantity lhs, Quantity rhs) {
  const bool ok = compare(lhs, rhs) <= 0;
  const double m = relative(rhs.approx - lhs.approx, rhs.approx);
  return make(ok, std::move(lhs), std::move(rhs), m);
}

Verdict verdict_equal(Quantity lhs, Quantity rhs) {
  const bool ok = compare(lhs, rhs) == 0;
  const double m = -std::fabs(lhs.approx - rhs.approx);
  return make(ok, std::move(lhs), std::move(rhs), m);
}

Verdict verdict_skipped(std::string note) {
  Verdict v;
  v.status = Status::kSkipped;
  v.note = std::move(note);
  return v;
}

uint64_t ceil_power(uint64_t q, unsigned num, unsigned den) {
  if (den == 0) throw Error(Errc::kInvalidArgument, "zero denominator");
  mpz_class target;
  mpz_ui_pow_ui(target.get_mpz_t(), q, num);
  mpz_class root;
  mpz_root(root.get_mpz_t(), target.get_mpz_t(), den);  // floor
  mpz_class back;
  mpz_pow_ui(back.get_mpz_t(), root.get_mpz_t(), den);
  if (back < target) ++root;
  return root.get_ui();
}

}  // namespace fqlab
