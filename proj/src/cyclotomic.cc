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

#include "fqlab/cyclotomic.h"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "fqlab/error.h"

namespace fqlab {
namespace {

void check_same_p(uint32_t a, uint32_t b) {
  if (a != b) throw Error(Errc::kShapeMismatch, "cyclotomic orders differ");
}

// Folds a redundant length-p vector into the length-(p-1) canonical basis.
std::vector<mpq_class> fold(std::vector<mpq_class> r) {
  const mpq_class top = r.back();
  r.pop_back();
  if (top != 0) {
    for (auto& c : r) c -= top;
  }
  return r;
}

}  // namespace

CycNum::CycNum(uint32_t p) : p_(p), c_(p - 1) {}

CycNum CycNum::rational(uint32_t p, const mpq_class& v) {
  CycNum z(p);
  z.c_[0] = v;
  z.c_[0].canonicalize();
  return z;
}

CycNum CycNum::from_coeffs(uint32_t p, std::vector<mpq_class> canonical) {
  if (canonical.size() + 1 != p) {
    throw Error(Errc::kShapeMismatch, "expected p-1 coefficients");
  }
  CycNum z;
  z.p_ = p;
  z.c_ = std::move(canonical);
  for (auto& c : z.c_) c.canonicalize();
  return z;
}

CycNum CycNum::zeta_power(uint32_t p, int64_t k) {
  int64_t r = k % static_cast<int64_t>(p);
  if (r < 0) r += p;
  CycNum z(p);
  if (r == static_cast<int64_t>(p) - 1) {
    for (auto& c : z.c_) c = -1;
  } else {
    z.c_[r] = 1;
  }
  return z;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  check_same_p(p_, o.p_);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  check_same_p(p_, o.p_);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  check_same_p(p_, o.p_);
  std::vector<mpq_class> r(p_);
  const size_t n = c_.size();
  for (size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      if (o.c_[j] == 0) continue;
      size_t k = i + j;
      if (k >= p_) k -= p_;
      r[k] += c_[i] * o.c_[j];
    }
  }
  c_ = fold(std::move(r));
  return *this;
}

CycNum& CycNum::operator*=(const mpq_class& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

CycNum CycNum::conj() const {
  std::vector<mpq_class> r(p_);
  for (size_t j = 0; j < c_.size(); ++j) r[(p_ - j) % p_] = c_[j];
  CycNum out;
  out.p_ = p_;
  out.c_ = fold(std::move(r));
  return out;
}

bool CycNum::is_zero() const {
  for (const auto& c : c_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

const mpq_class& CycNum::rational_value() const {
  if (!is_rational()) {
    throw Error(Errc::kInvalidArgument, "cyclotomic value is not rational");
  }
  return c_[0];
}

std::complex<double> CycNum::to_complex() const {
  std::complex<double> s = 0.0;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(j) / p_;
    s += c_[j].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

std::string CycNum::to_string() const {
  std::string out;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[j].get_str() + ")";
    if (j > 0) out += "*z^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

CycInt CycInt::constant(uint32_t p, int64_t v) {
  CycInt z(p);
  z.c_[0] = v;
  return z;
}

void CycInt::add_rotated(const CycInt& o, uint32_t k) {
  const uint32_t n = p();
  uint32_t dst = k;
  for (uint32_t j = 0; j < n; ++j) {
    c_[dst] += o.c_[j];
    if (++dst == n) dst = 0;
  }
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same_p(p(), o.p());
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check_same_p(p(), o.p());
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycInt& CycInt::operator*=(int64_t s) {
  for (auto& c : c_) {
    if (__builtin_mul_overflow(c, s, &c)) {
      throw Error(Errc::kOverflow, "CycInt scalar product");
    }
  }
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  check_same_p(a.p(), b.p());
  const uint32_t n = a.p();
  std::vector<__int128> r(n, 0);
  for (uint32_t i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (uint32_t j = 0; j < n; ++j) {
      uint32_t k = i + j;
      if (k >= n) k -= n;
      r[k] += static_cast<__int128>(a.c_[i]) * b.c_[j];
    }
  }
  // Shift by the minimum so magnitudes stay small before narrowing.
  __int128 top = r[n - 1];
  CycInt out(n);
  for (uint32_t k = 0; k < n; ++k) {
    const __int128 v = r[k] - top;
    if (v > INT64_MAX || v < INT64_MIN) {
      throw Error(Errc::kOverflow, "CycInt product exceeds int64");
    }
    out.c_[k] = static_cast<int64_t>(v);
  }
  return out;
}

bool operator==(const CycInt& a, const CycInt& b) {
  if (a.p() != b.p()) return false;
  const uint32_t n = a.p();
  if (n == 0) return true;
  const int64_t da = a.c_[n - 1], db = b.c_[n - 1];
  for (uint32_t k = 0; k + 1 < n; ++k) {
    if (a.c_[k] - da != b.c_[k] - db) return false;
  }
  return true;
}

CycInt CycInt::conj() const {
  const uint32_t n = p();
  CycInt out(n);
  for (uint32_t j = 0; j < n; ++j) out.c_[(n - j) % n] = c_[j];
  return out;
}

CycInt CycInt::canonical() const {
  CycInt out = *this;
  if (c_.empty()) return out;
  const int64_t top = c_.back();
  for (auto& c : out.c_) c -= top;
  return out;
}

bool CycInt::is_rational() const {
  const uint32_t n = p();
  // Rational iff all non-constant redundant coordinates agree.
  for (uint32_t k = 2; k < n; ++k) {
    if (c_[k] != c_[1]) return false;
  }
  return true;
}

int64_t CycInt::rational_value() const {
  if (!is_rational()) {
    throw Error(Errc::kInvalidArgument, "cyclotomic integer is not rational");
  }
  return p() > 1 ? c_[0] - c_[1] : c_[0];
}

CycNum CycInt::to_cycnum(const mpq_class& scale) const {
  const uint32_t n = p();
  const int64_t top = c_[n - 1];
  std::vector<mpq_class> r(n - 1);
  for (uint32_t k = 0; k + 1 < n; ++k) {
    r[k] = mpq_class(mpz_class(static_cast<long>(c_[k] - top))) * scale;
  }
  return CycNum::from_coeffs(n, std::move(r));
}

std::complex<double> CycInt::to_complex() const {
  std::complex<double> s = 0.0;
  const uint32_t n = p();
  for (uint32_t j = 0; j < n; ++j) {
    if (c_[j] == 0) continue;
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(j) / n;
    s += static_cast<double>(c_[j]) *
         std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

}  // namespace fqlab
