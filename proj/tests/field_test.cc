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

#include <cmath>
#include <complex>
#include <set>

#include "fqlab/characters.h"
#include "fqlab/cyclotomic.h"
#include "fqlab/error.h"
#include "fqlab/field.h"
#include "gtest/gtest.h"

namespace fqlab {
namespace {

TEST(FieldTest, DefaultModuli) {
  EXPECT_EQ(Field::default_modulus(3, 2), (std::vector<uint32_t>{1, 0, 1}));
  EXPECT_EQ(Field::default_modulus(5, 2), (std::vector<uint32_t>{1, 1, 1}));
  EXPECT_EQ(Field::default_modulus(3, 3), (std::vector<uint32_t>{1, 0, 2, 1}));
  EXPECT_EQ(Field::default_modulus(7, 2), (std::vector<uint32_t>{1, 0, 1}));
  EXPECT_EQ(Field::default_modulus(13, 1), (std::vector<uint32_t>{0, 1}));
}

TEST(FieldTest, NineElementExample) {
  auto f = Field::of_order(9);
  const Fq x{3};  // coefficient vector (0, 1)
  EXPECT_EQ(f->mul(x, x).v, 2u);  // x^2 = -1
  EXPECT_EQ(f->trace(x), 0u);
  EXPECT_EQ(f->trace(f->one()), 2u);
  EXPECT_EQ(f->quadratic_char(f->minus_one()), 1);
  ASSERT_TRUE(f->sqrt_minus_one().has_value());
}

TEST(FieldTest, RejectsBadOrders) {
  EXPECT_THROW(Field::of_order(8), Error);
  EXPECT_THROW(Field::of_order(2), Error);
  EXPECT_THROW(Field::of_order(15), Error);
  EXPECT_THROW(Field::of_order(uint64_t{3} * 1024 * 1024), Error);
  try {
    Field::of_order(12);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kInvalidField);
  }
}

TEST(FieldTest, ReducibleModulusRejected) {
  // x^2 + 2 = (x+1)(x+2) over F_3.
  EXPECT_THROW(Field::make(3, 2, {2, 0, 1}), Error);
}

TEST(FieldTest, DivisionByZero) {
  auto f = Field::of_order(7);
  try {
    f->inv(f->zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDivisionByZero);
  }
}

TEST(FieldTest, AxiomsExhaustive) {
  for (uint64_t q : {3, 5, 9, 25, 27}) {
    auto f = Field::of_order(q);
    for (uint32_t a = 0; a < q; ++a) {
      const Fq av{a};
      EXPECT_EQ(f->add(av, f->neg(av)), f->zero());
      if (a) {
        EXPECT_EQ(f->mul(av, f->inv(av)), f->one());
      }
      for (uint32_t b = 0; b < q; ++b) {
        const Fq bv{b};
        EXPECT_EQ(f->add(av, bv), f->add(bv, av));
        EXPECT_EQ(f->mul(av, bv), f->mul(bv, av));
        for (uint32_t c = 0; c < q; c += 2) {
          const Fq cv{c};
          EXPECT_EQ(f->mul(av, f->add(bv, cv)),
                    f->add(f->mul(av, bv), f->mul(av, cv)));
        }
      }
    }
  }
}

TEST(FieldTest, TraceAndCharacterAgreeWithDefinitions) {
  for (uint64_t q : {3, 9, 25, 27, 49, 81, 121, 125}) {
    auto f = Field::of_order(q);
    for (uint32_t a = 0; a < q; ++a) {
      const Fq av{a};
      EXPECT_EQ(Fq{f->trace(av)}, f->trace_by_frobenius(av)) << q << " " << a;
      EXPECT_EQ(f->quadratic_char(av), f->quadratic_char_by_euler(av));
    }
  }
}

TEST(FieldTest, TraceIsLinearAndBalanced) {
  auto f = Field::of_order(27);
  std::vector<int> hits(3, 0);
  for (uint32_t a = 0; a < 27; ++a) {
    ++hits[f->trace(Fq{a})];
    for (uint32_t b = 0; b < 27; ++b) {
      EXPECT_EQ(f->trace(f->add(Fq{a}, Fq{b})),
                (f->trace(Fq{a}) + f->trace(Fq{b})) % 3);
    }
  }
  EXPECT_EQ(hits, (std::vector<int>{9, 9, 9}));
}

TEST(FieldTest, SubfieldOfEvenDegree) {
  auto f = Field::of_order(81);
  auto sub = f->subfield(2);
  EXPECT_EQ(sub.size(), 9u);
  std::set<Fq> s(sub.begin(), sub.end());
  for (Fq a : sub) {
    for (Fq b : sub) {
      EXPECT_TRUE(s.count(f->add(a, b)));
      EXPECT_TRUE(s.count(f->mul(a, b)));
    }
  }
}

TEST(FieldTest, SqrtMinusOneExistsIffQIsOneModFour) {
  for (uint64_t q : {3, 5, 7, 9, 11, 13, 25, 27, 49}) {
    auto f = Field::of_order(q);
    auto r = f->sqrt_minus_one();
    EXPECT_EQ(r.has_value(), q % 4 == 1) << q;
    if (r) EXPECT_EQ(f->square(*r), f->minus_one());
  }
}

TEST(CyclotomicTest, ZetaRelation) {
  CycNum s(5);
  for (int k = 0; k < 5; ++k) s += CycNum::zeta_power(5, k);
  EXPECT_TRUE(s.is_zero());
  auto z = CycNum::zeta_power(7, 3);
  EXPECT_EQ(z * z.conj(), CycNum::rational(7, 1));
  EXPECT_EQ(z * CycNum::zeta_power(7, 4), CycNum::rational(7, 1));
}

TEST(CyclotomicTest, IntegralAndRationalAgree) {
  CycInt a(5), b(5);
  a.add_zeta(1, 3);
  a.add_zeta(4, -2);
  b.add_zeta(2, 1);
  b.add_zeta(0, 7);
  const CycNum prod = (a * b).to_cycnum(1);
  EXPECT_EQ(prod, a.to_cycnum(1) * b.to_cycnum(1));
  EXPECT_NEAR(std::abs(prod.to_complex() - a.to_complex() * b.to_complex()),
              0.0, 1e-9);
  CycInt c = CycInt::constant(5, 4);
  c.add_zeta(1, 2);
  c.add_zeta(2, 2);
  c.add_zeta(3, 2);
  c.add_zeta(4, 2);
  EXPECT_TRUE(c.is_rational());
  EXPECT_EQ(c.rational_value(), 2);
}

TEST(CyclotomicTest, OverflowDetected) {
  CycInt a = CycInt::constant(3, int64_t{1} << 40);
  a.add_zeta(1, int64_t{1} << 40);
  try {
    CycInt b = a * a;
    (void)b;
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kOverflow);
  }
}

TEST(GaussSumTest, OracleValues) {
  struct Case {
    uint64_t q;
    std::complex<double> g;
  };
  for (const Case& c : {Case{3, {0, std::sqrt(3.0)}}, Case{5, {std::sqrt(5.0), 0}},
                        Case{9, {3, 0}}, Case{7, {0, std::sqrt(7.0)}}}) {
    auto f = Field::of_order(c.q);
    EXPECT_NEAR(std::abs(gauss_sum(*f, f->one()).to_complex() - c.g), 0, 1e-9);
    EXPECT_NEAR(std::abs(gauss_sum_float(*f, f->one()) - c.g), 0, 1e-9);
  }
}

TEST(GaussSumTest, SquareAndClosedForm) {
  for (uint64_t q : {3, 5, 7, 9, 11, 13, 25, 27, 49, 81, 121, 125, 343}) {
    auto f = Field::of_order(q);
    const CycNum g = gauss_sum(*f, f->one());
    const CycNum sq = g * g;
    ASSERT_TRUE(sq.is_rational()) << q;
    EXPECT_EQ(sq.rational_value(),
              mpq_class(f->quadratic_char(f->minus_one()) *
                        static_cast<long>(q)));
    EXPECT_NEAR(std::abs(g.to_complex() - gauss_sum_closed_form(*f)), 0,
                1e-8 * q)
        << q;
    // G_a = psi(a) G_1
    for (uint32_t a = 1; a < q; a += 3) {
      CycNum ga = gauss_sum(*f, Fq{a});
      EXPECT_EQ(ga, g * mpq_class(f->quadratic_char(Fq{a})));
    }
  }
}

}  // namespace
}  // namespace fqlab
