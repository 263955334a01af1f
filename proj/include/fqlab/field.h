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

#ifndef FQLAB_FIELD_H_
#define FQLAB_FIELD_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fqlab {

// An element of F_q by canonical index: the base-p digits of its
// polynomial-basis coordinates, constant coefficient least significant.
// The index encoding fixes enumeration order everywhere downstream.
struct Fq {
  uint32_t v = 0;
  friend constexpr auto operator<=>(Fq, Fq) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// F_{p^l} for an odd prime p, realized as Z_p[x] / (modulus).
//
// Immutable after construction; all lookup tables (discrete log, trace,
// quadratic character) are built eagerly, so a Field may be shared freely
// across threads.
class Field {
 public:
  static constexpr uint64_t kMaxOrder = uint64_t{1} << 20;

  // Uses the default modulus: the lexicographically least monic irreducible
  // of degree l, with coefficient tuples (c_0, c_1, ..., c_{l-1}) compared
  // from the constant term upward.
  static FieldPtr make(uint32_t p, uint32_t l);
  // `modulus` lists c_0..c_l and must be monic and irreducible.
  static FieldPtr make(uint32_t p, uint32_t l, std::vector<uint32_t> modulus);
  // q must be an odd prime power <= kMaxOrder.
  static FieldPtr of_order(uint64_t q);

  static std::vector<uint32_t> default_modulus(uint32_t p, uint32_t l);
  static bool is_irreducible(uint32_t p, std::span<const uint32_t> monic);
  // Returns (p, l) when q = p^l with p prime, otherwise nullopt.
  static std::optional<std::pair<uint32_t, uint32_t>> prime_power(uint64_t q);

  uint32_t p() const { return p_; }
  uint32_t l() const { return l_; }
  uint32_t q() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  std::string modulus_string() const;
  // "q=<q> p=<p> l=<l> modulus=<c0,...,cl>"
  std::string describe() const;
  bool same_as(const Field& other) const {
    return p_ == other.p_ && l_ == other.l_ && modulus_ == other.modulus_;
  }

  Fq zero() const { return Fq{0}; }
  Fq one() const { return Fq{1}; }
  Fq minus_one() const { return Fq{p_ - 1}; }
  Fq from_int(int64_t n) const;
  Fq element(uint64_t index) const;
  Fq from_coeffs(std::span<const uint32_t> coeffs) const;
  std::vector<uint32_t> coeffs(Fq a) const;
  bool in_prime_subfield(Fq a) const { return a.v < p_; }

  Fq add(Fq a, Fq b) const {
    if (l_ == 1) {
      uint32_t s = a.v + b.v;
      return Fq{s >= p_ ? s - p_ : s};
    }
    if (!add_table_.empty()) return Fq{add_table_[a.v * q_ + b.v]};
    return add_digits(a, b);
  }
  Fq neg(Fq a) const { return Fq{neg_table_[a.v]}; }
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq mul(Fq a, Fq b) const {
    if (a.v == 0 || b.v == 0) return zero();
    return Fq{exp_[log_[a.v] + log_[b.v]]};
  }
  Fq square(Fq a) const { return mul(a, a); }
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, uint64_t e) const;

  // A fixed primitive element and the discrete log to its base.
  Fq generator() const { return Fq{exp_[1]}; }
  uint32_t log(Fq a) const;

  // Absolute trace to Z_p, read from the table (value in [0, p)).
  uint32_t trace(Fq a) const { return trace_[a.v]; }
  // a + a^p + ... + a^{p^{l-1}} evaluated by repeated Frobenius.
  Fq trace_by_frobenius(Fq a) const;

  // +1 on nonzero squares, -1 on non-squares, 0 at 0 (table).
  int quadratic_char(Fq a) const { return psi_[a.v]; }
  // a^{(q-1)/2} mapped into {-1, 0, +1}.
  int quadratic_char_by_euler(Fq a) const;

  // Least-index i with i^2 = -1, if one exists.
  std::optional<Fq> sqrt_minus_one() const;
  // Elements fixed by x -> x^{p^k}: the subfield of order p^k (k | l).
  std::vector<Fq> subfield(uint32_t k) const;

 private:
  Field(uint32_t p, uint32_t l, std::vector<uint32_t> modulus);
  Fq add_digits(Fq a, Fq b) const;

  uint32_t p_;
  uint32_t l_;
  uint32_t q_;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> pow_p_;  // p^i, i <= l
  std::vector<uint32_t> exp_;    // g^i for i in [0, 2(q-1))
  std::vector<uint32_t> log_;    // log_[0] unused
  std::vector<uint32_t> neg_table_;
  std::vector<uint32_t> add_table_;  // q*q, only for small extension fields
  std::vector<uint32_t> trace_;
  std::vector<int8_t> psi_;
};

}  // namespace fqlab

#endif  // FQLAB_FIELD_H_
