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
#include <vector>

#include "fqlab/distlab.h"
#include "fqlab/error.h"
#include "fqlab/kstar.h"
#include "fqlab/rng.h"
#include "fqlab/spheres.h"
#include "fqlab/sumset.h"
#include "gtest/gtest.h"

namespace fqlab {
namespace {

Grid grid_of(uint64_t q, uint32_t d) { return Grid(Field::of_order(q), d); }

PointSet random_set(const Grid& grid, uint64_t size, uint64_t seed) {
  CounterRng rng(seed);
  return PointSet::from_indices(
      grid, rng.sample_without_replacement(grid.size(), size));
}

PointSet two_points() {
  Grid g = grid_of(3, 2);
  return PointSet::from_points(
      g, std::vector<GridPoint>{{Fq{0}, Fq{0}}, {Fq{1}, Fq{0}}});
}

PointSet isotropic_line(uint64_t q) {
  Grid g = grid_of(q, 2);
  const Field& f = g.field();
  const Fq i = *f.sqrt_minus_one();
  std::vector<GridPoint> pts;
  for (uint32_t t = 0; t < q; ++t) pts.push_back({Fq{t}, f.mul(i, Fq{t})});
  return PointSet::from_points(g, pts);
}

TEST(NuTest, TwoPoints) {
  const CountTable t = nu(two_points());
  EXPECT_EQ(t.counts, (std::vector<uint64_t>{2, 2, 0}));
  EXPECT_EQ(distance_set(two_points()), (std::vector<Fq>{Fq{0}, Fq{1}}));
}

TEST(NuTest, FullGridAndLine) {
  for (uint64_t q : {3, 5, 7}) {
    EXPECT_EQ(distance_set(PointSet::full(grid_of(q, 2))).size(), q);
  }
  const PointSet z = isotropic_line(5);
  EXPECT_EQ(distance_set(z), (std::vector<Fq>{Fq{0}}));
  EXPECT_THROW(nu(PointSet(grid_of(3, 2))), Error);
}

TEST(NuTest, MassOnRandomSets) {
  for (uint64_t q : {3, 5, 9}) {
    for (uint32_t d : {2u, 3u}) {
      Grid g = grid_of(q, d);
      PointSet e = random_set(g, g.size() / 4 + 1, q + d);
      EXPECT_EQ(nu(e).total(), e.size() * e.size());
      for (size_t i = 0; i < e.size(); i += 3) {
        EXPECT_EQ(pinned_nu(e, e.coords(i)).total(), e.size());
        EXPECT_EQ(eta(e, e.coords(i)).total(), e.size());
      }
    }
  }
}

TEST(SpectralTest, NuFromSpectrum) {
  EXPECT_TRUE(spectral_nu_check(two_points(), Mode::kExact).exact_zero);
  EXPECT_TRUE(
      spectral_nu_check(PointSet::full(grid_of(3, 2)), Mode::kExact).exact_zero);
  for (uint64_t seed = 0; seed < 5; ++seed) {
    PointSet e = random_set(grid_of(5, 2), 4 + 3 * seed, seed);
    auto exact = spectral_nu_check(e, Mode::kExact);
    EXPECT_TRUE(exact.exact_zero);
    EXPECT_EQ(exact.max_abs, 0.0);
    EXPECT_LT(spectral_nu_check(e, Mode::kFloat).max_abs, 1e-9);
  }
  PointSet e3 = random_set(grid_of(3, 3), 10, 1);
  EXPECT_TRUE(spectral_nu_check(e3, Mode::kExact).exact_zero);
}

TEST(NuEnergyIdentityTest, AnchoredCases) {
  IdentityCheck c = nu_energy_identity(two_points());
  EXPECT_EQ(c.lhs, 8);
  EXPECT_TRUE(c.holds());
  IdentityCheck full = nu_energy_identity(PointSet::full(grid_of(3, 2)));
  EXPECT_EQ(full.lhs, 2673);
  EXPECT_TRUE(full.holds());
  EXPECT_THROW(nu_energy_identity(PointSet::full(grid_of(3, 3))), Error);
}

TEST(NuEnergyIdentityTest, RandomSets) {
  for (uint64_t q : {3, 5, 7, 9, 11, 13}) {
    Grid g = grid_of(q, 2);
    CounterRng rng(q);
    for (int i = 0; i < 10; ++i) {
      PointSet e = random_set(g, 1 + rng.uniform(g.size()), rng.next());
      EXPECT_TRUE(nu_energy_identity(e).holds()) << q;
    }
  }
}

TEST(NuZeroTest, ClosedForm) {
  IdentityCheck line = nu_zero_closed_form(isotropic_line(5));
  EXPECT_EQ(line.lhs, 25);
  EXPECT_TRUE(line.holds());
  Grid g5 = grid_of(5, 2);
  IdentityCheck one =
      nu_zero_closed_form(PointSet::from_indices(g5, std::vector<uint64_t>{0}));
  EXPECT_EQ(one.lhs, 1);
  EXPECT_TRUE(one.holds());
  for (uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_TRUE(
        nu_zero_closed_form(random_set(grid_of(13, 2), 40, seed)).holds());
    EXPECT_TRUE(nu_zero_closed_form(random_set(grid_of(9, 2), 20, seed)).holds());
  }
  try {
    nu_zero_closed_form(PointSet::full(grid_of(7, 2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kWrongFieldClass);
  }
}

TEST(PlanarDistanceTest, Epsilon) {
  EXPECT_NEAR(planar_distance_epsilon(13), 0.296008, 1e-6);
  EXPECT_NEAR(planar_distance_epsilon(17), 0.315192, 1e-6);
  EXPECT_NEAR(planar_distance_epsilon(25), 0.334616, 1e-6);
  EXPECT_NEAR(planar_distance_epsilon(29), 0.340124, 1e-6);
  EXPECT_NEAR(planar_distance_epsilon(1u << 20), 1.0 / (1.0 + std::sqrt(3.0)), 1e-4);
}

TEST(PlanarDistanceTest, RandomSetsAtSeven) {
  Grid g = grid_of(7, 2);
  EXPECT_EQ(ceil_power(7, 4, 3), 14u);
  for (uint64_t seed = 0; seed < 100; ++seed) {
    Verdict v = planar_distance_check(random_set(g, 14, seed));
    EXPECT_EQ(v.status, Status::kPass);
    EXPECT_GT(v.lhs.approx, 7 / (1 + std::sqrt(3.0)));
  }
}

TEST(PlanarDistanceTest, SkippedCases) {
  EXPECT_EQ(planar_distance_check(random_set(grid_of(7, 2), 13, 1)).status,
            Status::kSkipped);
  EXPECT_EQ(planar_distance_check(PointSet::full(grid_of(9, 2))).status,
            Status::kSkipped);
  EXPECT_EQ(planar_distance_check(PointSet::full(grid_of(13, 2))).status, Status::kPass);
}

TEST(CeilPowerTest, ExactCubes) {
  EXPECT_EQ(ceil_power(27, 4, 3), 81u);
  EXPECT_EQ(ceil_power(5, 3, 2), 12u);
  EXPECT_EQ(ceil_power(9, 3, 2), 27u);
  EXPECT_EQ(ceil_power(5, 2, 3), 3u);
  EXPECT_EQ(ceil_power(8, 2, 3), 4u);
}

TEST(PinnedTest, Examples) {
  PointSet full = PointSet::full(grid_of(3, 2));
  EXPECT_EQ(pinned_distance_set(full, GridPoint{Fq{0}, Fq{0}}).size(), 3u);
  PointSet z = isotropic_line(5);
  for (size_t i = 0; i < z.size(); ++i) {
    EXPECT_EQ(pinned_distance_set(z, z.coords(i)), (std::vector<Fq>{Fq{0}}));
  }
  Grid g = grid_of(5, 2);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    PointSet e = random_set(g, 12, seed);
    Verdict v = pinned_distance_mean_check(e);
    EXPECT_EQ(v.status, Status::kPass);
    EXPECT_GT(*v.lhs.exact, mpq_class(5, 2));
  }
  EXPECT_EQ(pinned_distance_mean_check(random_set(g, 11, 0)).status,
            Status::kSkipped);
}

TEST(PinnedTest, StatisticsAndWitnesses) {
  Grid g = grid_of(7, 2);
  PointSet e = random_set(g, 20, 9);
  PinStatistics st = pin_statistics(e, mpq_class(7, 2));
  EXPECT_EQ(st.pins, 20u);
  uint64_t total = 0;
  uint64_t above = 0;
  for (size_t i = 0; i < e.size(); ++i) {
    const uint64_t s = pinned_distance_set(e, e.coords(i)).size();
    total += s;
    above += 2 * s > 7;
  }
  EXPECT_EQ(st.image_total, total);
  EXPECT_EQ(st.above, above);
  EXPECT_EQ(st.witnesses.size(), above);
  EXPECT_EQ(st.mean, mpq_class(total, 20));
}

TEST(PinnedTest, SecondMoment) {
  EXPECT_EQ(pinned_second_moment(PointSet::full(grid_of(3, 2))), 297);
  EXPECT_EQ(pinned_second_moment(PointSet::full(grid_of(5, 2))), 3625);
  Verdict v = pinned_second_moment_check(PointSet::full(grid_of(3, 2)));
  EXPECT_EQ(v.status, Status::kPass);
  EXPECT_EQ(*v.rhs.exact, 324);
  Verdict one = pinned_second_moment_check(
      PointSet::from_indices(grid_of(7, 3), std::vector<uint64_t>{5}));
  EXPECT_EQ(one.status, Status::kPass);
  EXPECT_EQ(*one.lhs.exact, 1);
  for (uint64_t seed = 0; seed < 5; ++seed) {
    PointSet e = random_set(grid_of(7, 3), 50, seed);
    EXPECT_EQ(pinned_second_moment_check(e).status, Status::kPass);
    EXPECT_EQ(dot_second_moment_check(e).status, Status::kPass);
  }
}

TEST(DotTest, HyperplaneCounts) {
  Grid g = grid_of(5, 3);
  PointSet full = PointSet::full(g);
  const GridPoint y = {Fq{1}, Fq{3}, Fq{0}};
  EXPECT_EQ(eta(full, y).counts, std::vector<uint64_t>(5, 25));
  EXPECT_EQ(pinned_dot_set(full, GridPoint(3)), (std::vector<Fq>{Fq{0}}));
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Verdict v = pinned_dot_mean_check(random_set(grid_of(5, 2), 12, seed));
    EXPECT_EQ(v.status, Status::kPass);
  }
}

TEST(DotTest, TransformIdentity) {
  for (uint64_t q : {3, 5, 9}) {
    Grid g = grid_of(q, 2);
    PointSet e = random_set(g, g.size() / 3, q);
    const SpectralTable e_hat = dft(GridFunction::indicator(e, Mode::kExact));
    for (uint64_t y = 0; y < g.size(); y += 2) {
      EXPECT_TRUE(eta_transform_identity(e, e_hat, g.decode(y)));
    }
  }
}

TEST(SliceTest, FullGridAndProduct) {
  Grid g = grid_of(5, 3);
  PointSet full = PointSet::full(g);
  PinStatistics st;
  Verdict v = slice_pinned_check(full, Fq{2}, PinKind::kDistance, &st);
  EXPECT_EQ(v.status, Status::kPass);
  EXPECT_EQ(st.pins, 25u);
  EXPECT_EQ(st.mean, 5);

  Grid g2 = grid_of(5, 2);
  std::vector<GridPoint> pts;
  for (uint32_t a = 0; a < 4; ++a) {
    for (uint32_t b = 0; b < 4; ++b) pts.push_back({Fq{a}, Fq{b}});
  }
  PointSet e = PointSet::from_points(g2, pts);
  EXPECT_EQ(slice(e, Fq{1}).size(), 4u);
  Verdict dv = slice_pinned_check(e, Fq{1}, PinKind::kDistance, &st);
  EXPECT_EQ(dv.status, Status::kPass);
  EXPECT_EQ(st.mean, 5);  // 20 / 4
  Verdict pv = slice_pinned_check(e, Fq{1}, PinKind::kDot, &st);
  EXPECT_EQ(pv.status, Status::kPass);
  EXPECT_EQ(st.mean, mpq_class(19, 4));
  EXPECT_THROW(slice_pinned_check(e, Fq{0}, PinKind::kDot), Error);
  try {
    slice(PointSet(g2), Fq{1});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::kZSliceEmpty);
  }
}

TEST(SliceTest, SmallProductSkipped) {
  Grid g = grid_of(7, 2);
  PointSet e = PointSet::from_points(
      g, std::vector<GridPoint>{{Fq{0}, Fq{0}}, {Fq{1}, Fq{1}}});
  EXPECT_EQ(slice_pinned_check(e, Fq{1}, PinKind::kDistance).status,
            Status::kSkipped);
}

TEST(KStarTest, KOneIsPinned) {
  Grid g = grid_of(5, 2);
  PointSet e = random_set(g, 9, 2);
  for (size_t i = 0; i < e.size(); ++i) {
    KStarTable t = kstar_nu(e, std::vector<GridPoint>{e.point(i)},
                            PinKind::kDistance);
    const CountTable c = pinned_nu(e, e.coords(i));
    EXPECT_EQ(t.size(), c.support_size());
    EXPECT_EQ(t.total(), e.size());
    for (Fq s : c.support()) EXPECT_EQ(t.count(std::vector<Fq>{s}), c[s]);
  }
  EXPECT_EQ(kstar_second_moment(e, 1, PinKind::kDistance).lhs,
            pinned_second_moment(e));
  EXPECT_EQ(kstar_second_moment(e, 1, PinKind::kDot).lhs, dot_second_moment(e));
}

TEST(KStarTest, OracleMoments) {
  const PointSet two = two_points();
  const int64_t two_lhs[] = {4, 8, 16};
  for (uint32_t k = 1; k <= 3; ++k) {
    EXPECT_EQ(kstar_second_moment(two, k, PinKind::kDistance).lhs, two_lhs[k - 1]);
  }
  EXPECT_NEAR(kstar_second_moment(two, 2, PinKind::kDistance).ratio, 0.211765,
              1e-6);
  const PointSet full = PointSet::full(grid_of(3, 2));
  const int64_t lhs[] = {297, 1377, 8505};
  const int64_t rhs[] = {324, 1458, 8748};
  for (uint32_t k = 1; k <= 3; ++k) {
    KStarMoment m = kstar_second_moment(full, k, PinKind::kDistance);
    EXPECT_EQ(m.lhs, lhs[k - 1]);
    EXPECT_EQ(m.reference, rhs[k - 1]);
  }
}

TEST(KStarTest, PairRouteAgrees) {
  for (uint64_t q : {3, 5, 7}) {
    PointSet e = random_set(grid_of(q, 2), q + 3, q);
    for (uint32_t k = 1; k <= 3; ++k) {
      for (PinKind kind : {PinKind::kDistance, PinKind::kDot}) {
        EXPECT_EQ(kstar_second_moment(e, k, kind).lhs,
                  kstar_second_moment_by_pairs(e, k, kind));
      }
    }
  }
}

TEST(KStarTest, MeanImage) {
  PointSet full = PointSet::full(grid_of(3, 2));
  KStarMean m = kstar_mean_image(full, 2, PinKind::kDistance, false);
  EXPECT_EQ(m.mean, mpq_class(17, 3));  // 459 / 81
  EXPECT_EQ(m.tuples, 81u);
  KStarMean m1 = kstar_mean_image(full, 1, PinKind::kDistance, false);
  EXPECT_EQ(m1.mean, 3);

  Grid g = grid_of(5, 3);
  PointSet unit = sphere_points(g, Fq{1}).points;
  EXPECT_EQ(unit.size(), 30u);
  EXPECT_EQ(kstar_mean_image(unit, 1, PinKind::kDistance, true).mean, 5);
  EXPECT_EQ(kstar_mean_image(unit, 1, PinKind::kDot, true).mean, 5);
  EXPECT_THROW(kstar_mean_image(full, 1, PinKind::kDistance, true), Error);
}

TEST(KStarTest, SamplingBeyondCap) {
  PointSet e = random_set(grid_of(7, 2), 30, 1);
  Caps tight;
  tight.tuples = 1000;
  EXPECT_THROW(kstar_mean_image(e, 2, PinKind::kDistance, false, tight), Error);
  Sampling s{true, 77, 200};
  KStarMean a = kstar_mean_image(e, 2, PinKind::kDistance, false, tight, s);
  KStarMean b = kstar_mean_image(e, 2, PinKind::kDistance, false, tight, s);
  EXPECT_TRUE(a.sampled);
  EXPECT_EQ(a.tuples, 200u);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_THROW(kstar_second_moment(e, 3, PinKind::kDistance, tight), Error);
}

TEST(SumsetTest, Examples) {
  auto f = Field::of_order(5);
  const FqSet a = {Fq{1}, Fq{2}};
  EXPECT_EQ(product_set(*f, a, a), (FqSet{Fq{1}, Fq{2}, Fq{4}}));
  EXPECT_EQ(product_sumset(*f, a, 2).size(), 5u);
  const FqSet s = linear_sumset(*f, a, std::vector<Fq>{Fq{1}}, Fq{1});
  EXPECT_EQ(s, (FqSet{Fq{2}, Fq{3}, Fq{4}}));
  for (uint64_t q : {5, 7, 9, 11, 13}) {
    auto g = Field::of_order(q);
    FqSet units;
    for (uint32_t x = 1; x < q; ++x) units.push_back(Fq{x});
    EXPECT_EQ(product_sumset(*g, units, 2).size(), q);
  }
  EXPECT_THROW(product_sumset(*f, FqSet{}, 2), Error);
}

TEST(SumsetTest, Scan) {
  auto f = Field::of_order(5);
  const FqSet a = {Fq{1}, Fq{2}};
  SumProductScan s = sum_product_scan(*f, a, 2, Fq{1});
  EXPECT_EQ(s.tuples, 2u);
  // 1A + A = {2,3,4}; 2A + A = {3,4,0,1}.
  EXPECT_EQ(s.above, 2u);
  EXPECT_THROW(sum_product_scan(*f, a, 2, Fq{0}), Error);
  Caps tight;
  tight.tuples = 3;
  auto g = Field::of_order(13);
  FqSet big;
  for (uint32_t x = 1; x < 9; ++x) big.push_back(Fq{x});
  EXPECT_THROW(sum_product_scan(*g, big, 3, Fq{1}, tight), Error);
  SumProductScan sampled =
      sum_product_scan(*g, big, 3, Fq{1}, tight, Sampling{true, 5, 40});
  EXPECT_TRUE(sampled.sampled);
  EXPECT_EQ(sampled.tuples, 40u);
}

}  // namespace
}  // namespace fqlab
