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

#ifndef FQLAB_CYCLOTOMIC_H_
#define FQLAB_CYCLOTOMIC_H_

#include <gmpxx.h>

#include <complex>
#include <ostream>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fqlab {

// Exact element of the cyclotomic field Q(zeta_p), stored in the basis
// zeta^0, ..., zeta^{p-2}.  The relation 1 + zeta + ... + zeta^{p-1} = 0 is
// always applied, so the representation is unique and equality is
// coefficientwise.
class CycNum {
 public:
  CycNum() = default;
  explicit CycNum(uint32_t p);

  static CycNum rational(uint32_t p, const mpq_class& v);
  static CycNum zeta_power(uint32_t p, int64_t k);
  // `canonical` holds the p-1 coefficients of zeta^0..zeta^{p-2}.
  static CycNum from_coeffs(uint32_t p, std::vector<mpq_class> canonical);

  uint32_t p() const { return p_; }
  std::span<const mpq_class> coeffs() const { return c_; }

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator*=(const mpq_class& s);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator*(CycNum a, const mpq_class& s) { return a *= s; }
  friend bool operator==(const CycNum& a, const CycNum& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

  // Complex conjugation, zeta -> zeta^{-1}.
  CycNum conj() const;
  // |z|^2 = z * conj(z), an element of the real subfield.
  CycNum norm_squared() const { return *this * conj(); }

  bool is_zero() const;
  bool is_rational() const;
  // Requires is_rational().
  const mpq_class& rational_value() const;

  // Embedding zeta -> exp(2 pi i / p).
  std::complex<double> to_complex() const;
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const CycNum& v) {
    return os << v.to_string();
  }

 private:
  uint32_t p_ = 0;
  std::vector<mpq_class> c_;
};

// Element of Z[zeta_p] with int64 coefficients in the redundant basis
// zeta^0, ..., zeta^{p-1}.  Two vectors represent the same number iff they
// differ by a multiple of (1, ..., 1); canonical() zeroes the last slot.
// Used for bulk exact transforms, where multiplying by zeta^k is a rotation.
class CycInt {
 public:
  CycInt() = default;
  explicit CycInt(uint32_t p) : c_(p, 0) {}

  static CycInt constant(uint32_t p, int64_t v);

  uint32_t p() const { return static_cast<uint32_t>(c_.size()); }
  std::span<const int64_t> coeffs() const { return c_; }
  std::span<int64_t> coeffs() { return c_; }

  void add_zeta(uint32_t k, int64_t c) { c_[k] += c; }
  // this += zeta^k * o
  void add_rotated(const CycInt& o, uint32_t k);

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(int64_t s);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  // Product in Z[zeta_p]; throws Errc::kOverflow past int64.
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend bool operator==(const CycInt& a, const CycInt& b);

  CycInt conj() const;
  CycInt norm_squared() const { return *this * conj(); }
  CycInt canonical() const;

  bool is_rational() const;
  // Requires is_rational().
  int64_t rational_value() const;

  CycNum to_cycnum(const mpq_class& scale) const;
  std::complex<double> to_complex() const;

 private:
  std::vector<int64_t> c_;
};

}  // namespace fqlab

#endif  // FQLAB_CYCLOTOMIC_H_
