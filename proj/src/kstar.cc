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

#include "fqlab/kstar.h"

#include <algorithm>
#include <limits>

#include "fqlab/error.h"
#include "fqlab/rng.h"

namespace fqlab {

namespace {

Fq pin_value(const Field& f, PinKind kind, std::span<const Fq> x,
             std::span<const Fq> y) {
  Fq s = f.zero();
  for (size_t i = 0; i < x.size(); ++i) {
    s = f.add(s, kind == PinKind::kDistance ? f.square(f.sub(x[i], y[i]))
                                            : f.mul(x[i], y[i]));
  }
  return s;
}

uint64_t checked_power(uint64_t q, uint32_t k) {
  uint64_t out = 1;
  for (uint32_t i = 0; i < k; ++i) {
    if (out > std::numeric_limits<uint64_t>::max() / 2 / q) {
      throw Error(Errc::kCapExceeded, "q^k does not fit in 63 bits");
    }
    out *= q;
  }
  return out;
}

// Pairwise pin values val(i, j) = value of point i against pin j, both in E.
class PairValues {
 public:
  PairValues(const PointSet& e, PinKind kind) : e_(e), kind_(kind) {
    const uint64_t n = e.size();
    if (n * n <= (uint64_t{1} << 24)) {
      table_.resize(n * n);
      for (uint64_t i = 0; i < n; ++i) {
        for (uint64_t j = 0; j < n; ++j) {
          table_[i * n + j] = compute(i, j);
        }
      }
    }
  }

  uint32_t operator()(uint64_t i, uint64_t j) const {
    return table_.empty() ? compute(i, j) : table_[i * e_.size() + j];
  }

 private:
  uint32_t compute(uint64_t i, uint64_t j) const {
    return pin_value(e_.field(), kind_, e_.coords(i), e_.coords(j)).v;
  }

  const PointSet& e_;
  PinKind kind_;
  std::vector<uint32_t> table_;
};

// Keys of every x in E against pin tuple `pins` (indices into E).
void tuple_keys(const PairValues& val, uint64_t n, std::span<const uint64_t> pins,
                const std::vector<uint64_t>& weights,
                std::vector<uint64_t>& keys) {
  keys.assign(n, 0);
  for (size_t m = 0; m < pins.size(); ++m) {
    for (uint64_t i = 0; i < n; ++i) keys[i] += val(i, pins[m]) * weights[m];
  }
}

// Number of distinct keys; `stamp` is scratch sized q^k or empty.
uint64_t distinct(std::vector<uint64_t>& keys, std::vector<uint64_t>& stamp,
                  uint64_t epoch) {
  if (!stamp.empty()) {
    uint64_t c = 0;
    for (uint64_t key : keys) {
      if (stamp[key] != epoch) {
        stamp[key] = epoch;
        ++c;
      }
    }
    return c;
  }
  std::sort(keys.begin(), keys.end());
  return std::unique(keys.begin(), keys.end()) - keys.begin();
}

// Advances an odometer over [0, n)^k; false after the last tuple.
bool advance(std::vector<uint64_t>& t, uint64_t n) {
  for (auto& v : t) {
    if (++v < n) return true;
    v = 0;
  }
  return false;
}

std::vector<uint64_t> key_weights(uint32_t q, uint32_t k) {
  std::vector<uint64_t> w(k);
  uint64_t acc = 1;
  for (uint32_t i = 0; i < k; ++i) {
    w[i] = acc;
    acc *= q;
  }
  return w;
}

uint64_t tuple_work(uint64_t n, uint32_t k, const char* what,
                    const Sampling* sampling, const Caps& caps) {
  // |E|^{k+1}, saturating.
  uint64_t work = 1;
  for (uint32_t i = 0; i <= k; ++i) {
    if (work > caps.tuples) break;
    work *= n;
  }
  if (!sampling || !sampling->enabled) check_tuple_cap(work, caps, what);
  return work;
}

}  // namespace

uint64_t KStarTable::total() const {
  uint64_t s = 0;
  for (const auto& [key, c] : entries_) s += c;
  return s;
}

uint64_t KStarTable::pack(std::span<const Fq> key) const {
  if (key.size() != k_) throw Error(Errc::kShapeMismatch, "key arity");
  uint64_t out = 0;
  for (size_t i = key.size(); i-- > 0;) out = out * q_ + key[i].v;
  return out;
}

std::vector<Fq> KStarTable::unpack(uint64_t key) const {
  std::vector<Fq> out(k_);
  for (uint32_t i = 0; i < k_; ++i) {
    out[i] = Fq{static_cast<uint32_t>(key % q_)};
    key /= q_;
  }
  return out;
}

uint64_t KStarTable::count(std::span<const Fq> key) const {
  const uint64_t packed = pack(key);
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), std::make_pair(packed, uint64_t{0}));
  return it != entries_.end() && it->first == packed ? it->second : 0;
}

KStarTable kstar_nu(const PointSet& e, std::span<const GridPoint> pins,
                    PinKind kind) {
  if (pins.empty()) throw Error(Errc::kInvalidArgument, "k must be >= 1");
  const Field& f = e.field();
  const uint32_t k = static_cast<uint32_t>(pins.size());
  checked_power(f.q(), k);
  for (const auto& y : pins) {
    if (y.size() != e.d()) throw Error(Errc::kShapeMismatch, "pin dimension");
  }
  KStarTable table(f.q(), k);
  std::vector<uint64_t> keys;
  keys.reserve(e.size());
  std::vector<Fq> key(k);
  for (size_t i = 0; i < e.size(); ++i) {
    for (uint32_t m = 0; m < k; ++m) key[m] = pin_value(f, kind, e.coords(i), pins[m]);
    keys.push_back(table.pack(key));
  }
  std::sort(keys.begin(), keys.end());
  for (size_t i = 0; i < keys.size();) {
    size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    table.entries_.emplace_back(keys[i], j - i);
    i = j;
  }
  return table;
}

KStarMean kstar_mean_image(const PointSet& e, uint32_t k, PinKind kind,
                           bool on_unit_sphere, const Caps& caps,
                           const Sampling& sampling) {
  if (e.empty()) throw Error(Errc::kEmptySet, "k-star image of the empty set");
  if (k == 0) throw Error(Errc::kInvalidArgument, "k must be >= 1");
  const Field& f = e.field();
  if (on_unit_sphere) {
    for (size_t i = 0; i < e.size(); ++i) {
      if (!(norm(f, e.coords(i)) == f.one())) {
        throw Error(Errc::kInvalidArgument, "set is not on the unit sphere");
      }
    }
  }
  const uint64_t space = checked_power(f.q(), k);
  const uint64_t n = e.size();
  const uint64_t work = tuple_work(n, k, "k-star image", &sampling, caps);
  const PairValues val(e, kind);
  const auto weights = key_weights(f.q(), k);
  std::vector<uint64_t> stamp(space <= (uint64_t{1} << 22) ? space : 0, 0);
  std::vector<uint64_t> keys;
  KStarMean out;
  mpz_class total = 0;
  uint64_t epoch = 0;
  if (work > caps.tuples) {
    out.sampled = true;
    out.seed = sampling.seed;
    CounterRng rng(sampling.seed);
    std::vector<uint64_t> pins(k);
    for (uint64_t s = 0; s < sampling.samples; ++s) {
      for (auto& p : pins) p = rng.uniform(n);
      tuple_keys(val, n, pins, weights, keys);
      total += static_cast<unsigned long>(distinct(keys, stamp, ++epoch));
      ++out.tuples;
    }
  } else {
    std::vector<uint64_t> pins(k, 0);
    do {
      tuple_keys(val, n, pins, weights, keys);
      total += static_cast<unsigned long>(distinct(keys, stamp, ++epoch));
      ++out.tuples;
    } while (advance(pins, n));
  }
  if (out.tuples == 0) throw Error(Errc::kInvalidArgument, "no samples drawn");
  out.mean = mpq_class(total, mpz_class(static_cast<unsigned long>(out.tuples)));
  out.mean.canonicalize();
  return out;
}

KStarMoment kstar_second_moment(const PointSet& e, uint32_t k, PinKind kind,
                                const Caps& caps) {
  if (e.empty()) throw Error(Errc::kEmptySet, "k-star moment of the empty set");
  if (k == 0) throw Error(Errc::kInvalidArgument, "k must be >= 1");
  const Field& f = e.field();
  checked_power(f.q(), k);
  const uint64_t n = e.size();
  tuple_work(n, k, "k-star moment", nullptr, caps);
  const PairValues val(e, kind);
  const auto weights = key_weights(f.q(), k);
  std::vector<uint64_t> keys;
  std::vector<uint64_t> pins(k, 0);
  KStarMoment out;
  out.lhs = 0;
  do {
    tuple_keys(val, n, pins, weights, keys);
    std::sort(keys.begin(), keys.end());
    uint64_t s = 0;
    for (size_t i = 0; i < keys.size();) {
      size_t j = i;
      while (j < keys.size() && keys[j] == keys[i]) ++j;
      s += (j - i) * (j - i);
      i = j;
    }
    out.lhs += static_cast<unsigned long>(s);
  } while (advance(pins, n));
  mpz_class ek, qk, qd;
  const mpz_class size(static_cast<unsigned long>(n));
  mpz_pow_ui(ek.get_mpz_t(), size.get_mpz_t(), k);
  mpz_ui_pow_ui(qk.get_mpz_t(), f.q(), k);
  mpz_ui_pow_ui(qd.get_mpz_t(), f.q(), e.d());
  out.reference = mpq_class(ek * size * size, qk) + mpq_class(qd * ek);
  out.reference.canonicalize();
  out.ratio = mpq_class(out.lhs / out.reference).get_d();
  return out;
}

mpz_class kstar_second_moment_by_pairs(const PointSet& e, uint32_t k,
                                       PinKind kind) {
  const uint64_t n = e.size();
  const PairValues val(e, kind);
  mpz_class total = 0;
  mpz_class term;
  for (uint64_t x = 0; x < n; ++x) {
    for (uint64_t xp = 0; xp < n; ++xp) {
      unsigned long c = 0;
      for (uint64_t y = 0; y < n; ++y) c += val(x, y) == val(xp, y);
      mpz_ui_pow_ui(term.get_mpz_t(), c, k);
      total += term;
    }
  }
  return total;
}

}  // namespace fqlab
