// Copyright 2026 The symplecta Authors
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


#include <gtest/gtest.h>

#include "symplecta/suites.hpp"

using namespace symplecta;

namespace {

bool all_finite(const NormReport& rep) {
  for (const auto& r : rep.rows)
    if (!std::isfinite(r.value)) return false;
  return true;
}

}  // namespace

TEST(BesselKernel, ValueAtOriginAndMass) {
  EXPECT_NEAR(bessel_kernel(1.5, 0.0), 0.83462684167407, 1e-12);
  EXPECT_NEAR(bessel_kernel(1.5, 1e-8), bessel_kernel(1.5, 0.0), 1e-3);
  // The kernel is the inverse transform of <z>^{-t}, so its integral is 1.
  double mass = 0.0, dx = 1e-4;
  for (double x = dx / 2; x < 40.0; x += dx) mass += 2.0 * bessel_kernel(1.5, x) * dx;
  EXPECT_NEAR(mass, 1.0, 1e-3);
  EXPECT_GT(bessel_kernel(1.5, 0.5), bessel_kernel(1.5, 1.0));
}

TEST(FreezeAndTrack, ConstantWorstAndDrift) {
  auto t = freeze_and_track([](int N, int k) { return (k + 1) * (N == 64 ? 1.05 : 1.0); }, 3, 48, 64, 2.0);
  EXPECT_DOUBLE_EQ(t.constant, 2.1);
  EXPECT_DOUBLE_EQ(t.worst, 3.15);
  EXPECT_NEAR(t.drift, 0.05, 1e-15);
  auto rows = track_rows("thm-x", "ratio", 1.0, 1.0, t, 0.1);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_FALSE(rows[0].pass);
  EXPECT_TRUE(rows[1].pass);
  EXPECT_EQ(rows[1].label(), "thm-x:ratio-drift");
}

TEST(BesselPotential, OrderZeroIsLebesgue) {
  Grid g = make_grid(1, 32);
  GridFunction a = sample_symbol(gaussian_family(1, 5)[0], g);
  EXPECT_DOUBLE_EQ(bessel_potential_norm(a, 0.0, 1.0), lebesgue_norm(a, 1.0));
  EXPECT_GT(bessel_potential_norm(a, 2.0, 2.0), lebesgue_norm(a, 2.0));
}

TEST(VerifyCore, DegenerateTNamesWitness) {
  auto rep = verify_core_suite(make_space(1).J, 16, 1);
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_FALSE(rep.rows[0].pass);
  EXPECT_EQ(rep.rows[0].label(), "prop-gate:nondegeneracy-witness=[0;1]");
}

TEST(VerifyCore, WeylPasses) {
  auto rep = verify_core_suite(0.5 * Mat::Identity(2, 2), 32, 3);
  EXPECT_EQ(rep.rows.size(), 12u);
  for (const auto& r : rep.rows) EXPECT_TRUE(r.pass) << r.label() << " " << r.value;
}

TEST(KatoSuite, WeylPasses) {
  auto rep = kato_suite(0.5 * Mat::Identity(2, 2), 32, 4, 20);
  EXPECT_EQ(rep.rows.size(), 11u);
  for (const auto& r : rep.rows) EXPECT_TRUE(r.pass) << r.label() << " " << r.value;
}

TEST(N15Suite, ExplicitBoundsHoldOnScaledLattice) {
  auto rep = n15_suite(context_for(Mat::Identity(2, 2), 32), 5, 20);
  EXPECT_EQ(rep.rows.size(), 6u);
  for (const auto& r : rep.rows) EXPECT_TRUE(r.pass) << r.label() << " " << r.value;
  for (const auto& r : rep.rows)
    if (r.anchor == "thm-n15-b" || r.anchor == "thm-n15-a") EXPECT_LE(r.ratio, 1.0);
}

TEST(NormsSuite, AllRowsPass) {
  auto rep = norms_suite(6);
  EXPECT_EQ(rep.rows.size(), 5u);
  for (const auto& r : rep.rows) EXPECT_TRUE(r.pass) << r.label() << " " << r.value;
}

TEST(BoundSuite, SmallGridShape) {
  BoundSettings s;
  s.coarse_N = 24;
  s.fine_N = 32;
  s.family_size = 3;
  auto rep = bound_suite({{"weyl", 0.5 * Mat::Identity(2, 2)}}, s);
  EXPECT_EQ(rep.rows.size(), 14u);
  EXPECT_TRUE(all_finite(rep));
  const NormRow& n7 = rep.rows[0];
  EXPECT_EQ(n7.label(), "thm-n7:schatten-over-modulation[weyl]");
  EXPECT_NEAR(n7.ratio, 0.5, 0.05);
  // The L^2 ratio is a pure constant: ||Op(a)||_2 = (2 pi)^{-1/2} ||a||_2 at S = I.
  const NormRow& l2 = rep.rows[12];
  EXPECT_EQ(l2.label(), "thm-10-interp:schatten-over-sobolev[weyl]");
  EXPECT_NEAR(l2.value, 1.0 / std::sqrt(2.0 * kPi), 1e-10);
}

TEST(Witness, Formatting) { EXPECT_EQ(witness_text(Vec::Unit(2, 1)), "[0;1]"); }
