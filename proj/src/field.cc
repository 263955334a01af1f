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

#include "fqlab/field.h"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fqlab/error.h"

namespace fqlab {
namespace {

using Poly = std::vector<uint64_t>;  // coefficients, constant term first

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Remainder of a modulo the monic polynomial m (degree >= 1).
Poly poly_mod(Poly a, const Poly& m, uint64_t p) {
  const size_t dm = m.size() - 1;
  for (size_t k = a.size(); k-- > dm;) {
    const uint64_t c = a[k] % p;
    if (c == 0) continue;
    for (size_t j = 0; j <= dm; ++j) {
      a[k - dm + j] = (a[k - dm + j] + (p - c) * m[j]) % p;
    }
  }
  a.resize(std::min(a.size(), dm));
  a.resize(dm, 0);
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, uint64_t p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_mod(std::move(prod), m, p);
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& m, uint64_t p) {
  Poly result(m.size() - 1, 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Poly digits_of(uint64_t index, uint32_t p, uint32_t l) {
  Poly out(l, 0);
  for (uint32_t i = 0; i < l; ++i) {
    out[i] = index % p;
    index /= p;
  }
  return out;
}

uint64_t index_of(const Poly& digits, uint32_t p) {
  uint64_t idx = 0;
  for (size_t i = digits.size(); i-- > 0;) idx = idx * p + digits[i];
  return idx;
}

}  // namespace

std::optional<std::pair<uint32_t, uint32_t>> Field::prime_power(uint64_t q) {
  if (q < 2) return std::nullopt;
  for (uint64_t d = 2; d <= q; ++d) {
    if (q % d != 0) continue;
    if (!is_prime(d)) return std::nullopt;
    uint32_t l = 0;
    uint64_t r = q;
    while (r % d == 0) {
      r /= d;
      ++l;
    }
    if (r != 1) return std::nullopt;
    return std::make_pair(static_cast<uint32_t>(d), l);
  }
  return std::nullopt;
}

bool Field::is_irreducible(uint32_t p, std::span<const uint32_t> monic) {
  const size_t l = monic.size() - 1;
  if (l == 0 || monic[l] != 1) return false;
  if (l == 1) return true;
  Poly f(monic.begin(), monic.end());
  // Exhaustive trial division by every monic polynomial of degree <= l/2.
  for (size_t k = 1; k <= l / 2; ++k) {
    uint64_t count = 1;
    for (size_t i = 0; i < k; ++i) count *= p;
    for (uint64_t n = 0; n < count; ++n) {
      Poly g = digits_of(n, p, static_cast<uint32_t>(k));
      g.push_back(1);
      Poly r = poly_mod(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](uint64_t c) { return c == 0; })) {
        return false;
      }
    }
  }
  return true;
}

std::vector<uint32_t> Field::default_modulus(uint32_t p, uint32_t l) {
  uint64_t count = 1;
  for (uint32_t i = 0; i < l; ++i) count *= p;
  std::vector<uint32_t> m(l + 1, 0);
  m[l] = 1;
  // Enumerate (c_0, ..., c_{l-1}) in lexicographic order, c_0 most
  // significant.
  for (uint64_t n = 0; n < count; ++n) {
    uint64_t r = n;
    for (uint32_t i = l; i-- > 0;) {
      m[i] = static_cast<uint32_t>(r % p);
      r /= p;
    }
    if (is_irreducible(p, m)) return m;
  }
  throw Error(Errc::kInvalidField, "no irreducible polynomial found");
}

FieldPtr Field::make(uint32_t p, uint32_t l) {
  if (p == 2) throw Error(Errc::kInvalidField, "characteristic 2 unsupported");
  if (!is_prime(p)) throw Error(Errc::kInvalidField, "p is not prime");
  if (l == 0) throw Error(Errc::kInvalidField, "extension degree must be >= 1");
  return make(p, l, default_modulus(p, l));
}

FieldPtr Field::make(uint32_t p, uint32_t l, std::vector<uint32_t> modulus) {
  if (p == 2) throw Error(Errc::kInvalidField, "characteristic 2 unsupported");
  if (!is_prime(p)) throw Error(Errc::kInvalidField, "p is not prime");
  if (l == 0) throw Error(Errc::kInvalidField, "extension degree must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < l; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(Errc::kInvalidField, "q exceeds 2^20");
  }
  if (modulus.size() != l + 1) {
    throw Error(Errc::kInvalidField, "modulus must have l+1 coefficients");
  }
  for (uint32_t c : modulus) {
    if (c >= p) throw Error(Errc::kInvalidField, "modulus coefficient >= p");
  }
  if (!is_irreducible(p, modulus)) {
    throw Error(Errc::kInvalidField, "modulus is not monic irreducible");
  }
  return FieldPtr(new Field(p, l, std::move(modulus)));
}

FieldPtr Field::of_order(uint64_t q) {
  auto pl = prime_power(q);
  if (!pl) throw Error(Errc::kInvalidField, "q is not a prime power");
  return make(pl->first, pl->second);
}

Field::Field(uint32_t p, uint32_t l, std::vector<uint32_t> modulus)
    : p_(p), l_(l), modulus_(std::move(modulus)) {
  pow_p_.resize(l_ + 1);
  pow_p_[0] = 1;
  for (uint32_t i = 1; i <= l_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;
  q_ = pow_p_[l_];

  neg_table_.resize(q_);
  for (uint32_t a = 0; a < q_; ++a) {
    uint32_t r = a, out = 0;
    for (uint32_t i = 0; i < l_; ++i) {
      uint32_t dgt = r % p_;
      r /= p_;
      out += ((p_ - dgt) % p_) * pow_p_[i];
    }
    neg_table_[a] = out;
  }
  if (l_ > 1 && q_ <= 512) {
    add_table_.resize(static_cast<size_t>(q_) * q_);
    for (uint32_t a = 0; a < q_; ++a) {
      for (uint32_t b = 0; b < q_; ++b) {
        add_table_[a * q_ + b] = add_digits(Fq{a}, Fq{b}).v;
      }
    }
  }

  // Primitive element: least index whose order is exactly q - 1.
  const Poly m(modulus_.begin(), modulus_.end());
  const uint64_t order = q_ - 1;
  const auto factors = prime_factors(order);
  Poly g;
  for (uint64_t cand = 1; cand < q_; ++cand) {
    Poly c = digits_of(cand, p_, l_);
    bool primitive = true;
    for (uint64_t r : factors) {
      Poly e = poly_powmod(c, order / r, m, p_);
      if (index_of(e, p_) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = std::move(c);
      break;
    }
  }

  exp_.resize(2 * static_cast<size_t>(order) + 1);
  log_.assign(q_, 0);
  Poly cur(l_, 0);
  cur[0] = 1;
  for (uint64_t i = 0; i < order; ++i) {
    const auto idx = static_cast<uint32_t>(index_of(cur, p_));
    exp_[i] = idx;
    log_[idx] = static_cast<uint32_t>(i);
    cur = poly_mulmod(cur, g, m, p_);
  }
  for (uint64_t i = order; i < exp_.size(); ++i) exp_[i] = exp_[i - order];

  psi_.assign(q_, 0);
  for (uint32_t a = 1; a < q_; ++a) psi_[a] = (log_[a] % 2 == 0) ? 1 : -1;

  // The trace is Z_p-linear: tabulate it from the traces of the basis.
  std::vector<uint32_t> basis_trace(l_);
  for (uint32_t j = 0; j < l_; ++j) {
    basis_trace[j] = trace_by_frobenius(Fq{pow_p_[j]}).v;
  }
  trace_.assign(q_, 0);
  for (uint32_t a = 0; a < q_; ++a) {
    uint64_t s = 0;
    uint32_t r = a;
    for (uint32_t j = 0; j < l_; ++j) {
      s += static_cast<uint64_t>(r % p_) * basis_trace[j];
      r /= p_;
    }
    trace_[a] = static_cast<uint32_t>(s % p_);
  }
}

Fq Field::add_digits(Fq a, Fq b) const {
  uint32_t x = a.v, y = b.v, out = 0;
  for (uint32_t i = 0; i < l_; ++i) {
    uint32_t s = x % p_ + y % p_;
    if (s >= p_) s -= p_;
    out += s * pow_p_[i];
    x /= p_;
    y /= p_;
  }
  return Fq{out};
}

std::string Field::modulus_string() const {
  std::string s;
  for (size_t i = 0; i < modulus_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(modulus_[i]);
  }
  return s;
}

std::string Field::describe() const {
  return "q=" + std::to_string(q_) + " p=" + std::to_string(p_) +
         " l=" + std::to_string(l_) + " modulus=" + modulus_string();
}

Fq Field::from_int(int64_t n) const {
  int64_t r = n % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return Fq{static_cast<uint32_t>(r)};
}

Fq Field::element(uint64_t index) const {
  if (index >= q_) {
    throw Error(Errc::kInvalidArgument,
                "element index " + std::to_string(index) + " out of range");
  }
  return Fq{static_cast<uint32_t>(index)};
}

Fq Field::from_coeffs(std::span<const uint32_t> coeffs) const {
  if (coeffs.size() != l_) {
    throw Error(Errc::kInvalidArgument, "expected l coefficients");
  }
  uint32_t idx = 0;
  for (size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) {
      throw Error(Errc::kInvalidArgument, "coefficient out of range");
    }
    idx = idx * p_ + coeffs[i];
  }
  return Fq{idx};
}

std::vector<uint32_t> Field::coeffs(Fq a) const {
  std::vector<uint32_t> out(l_);
  uint32_t r = a.v;
  for (uint32_t i = 0; i < l_; ++i) {
    out[i] = r % p_;
    r /= p_;
  }
  return out;
}

Fq Field::inv(Fq a) const {
  if (a.v == 0) throw Error(Errc::kDivisionByZero, "inverse of zero");
  const uint32_t order = q_ - 1;
  return Fq{exp_[(order - log_[a.v]) % order]};
}

Fq Field::pow(Fq a, uint64_t e) const {
  if (e == 0) return one();
  if (a.v == 0) return zero();
  const uint64_t order = q_ - 1;
  return Fq{exp_[(log_[a.v] * (e % order)) % order]};
}

uint32_t Field::log(Fq a) const {
  if (a.v == 0) throw Error(Errc::kDivisionByZero, "log of zero");
  return log_[a.v];
}

Fq Field::trace_by_frobenius(Fq a) const {
  Fq sum = zero();
  Fq b = a;
  for (uint32_t i = 0; i < l_; ++i) {
    sum = add(sum, b);
    b = pow(b, p_);
  }
  return sum;
}

int Field::quadratic_char_by_euler(Fq a) const {
  if (a.v == 0) return 0;
  return pow(a, (q_ - 1) / 2) == one() ? 1 : -1;
}

std::optional<Fq> Field::sqrt_minus_one() const {
  const Fq target = minus_one();
  for (uint32_t i = 1; i < q_; ++i) {
    if (square(Fq{i}) == target) return Fq{i};
  }
  return std::nullopt;
}

std::vector<Fq> Field::subfield(uint32_t k) const {
  if (k == 0 || l_ % k != 0) {
    throw Error(Errc::kInvalidArgument, "subfield degree must divide l");
  }
  std::vector<Fq> out;
  for (uint32_t a = 0; a < q_; ++a) {
    if (pow(Fq{a}, pow_p_[k]) == Fq{a}) out.push_back(Fq{a});
  }
  return out;
}

}  // namespace fqlab
