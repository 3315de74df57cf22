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

#include "symplecta/families.hpp"
#include "symplecta/spaces.hpp"

using namespace symplecta;

namespace {

GridFunction gaussian(const Grid& g, double var = 1.0) {
  SymbolSpec s;
  s.covariance = var * Mat::Identity(g.dim, g.dim);
  return sample_symbol(s, g);
}

std::vector<GridFunction> family(const Grid& g, int count, std::uint64_t seed) {
  std::vector<GridFunction> out;
  for (const auto& s : gaussian_family(count, seed, g.dim)) out.push_back(sample_symbol(s, g));
  return out;
}

double gaussian_oracle(int d, double p, double q) {
  auto f = [&](double r) { return std::isinf(r) ? 1.0 : std::pow(4.0 * kPi / r, d / (2.0 * r)); };
  return std::pow(2.0, -d / 2.0) * f(p) * f(q);
}

Mat M1(double a) { return Mat::Constant(1, 1, a); }

}  // namespace

TEST(Fourier, RoundTripAndGaussian) {
  Grid g = make_box(1, 64);
  GridFunction u = gaussian(g);
  GridFunction F = fourier(u);
  for (std::int64_t i = 0; i < F.size(); ++i) {
    double z = coords(g, i)[0];
    EXPECT_NEAR(std::abs(F[i] - std::sqrt(2 * kPi) * std::exp(-z * z / 2)), 0.0, 1e-12);
  }
  EXPECT_LT(l2_distance(inverse_fourier(F), u), 1e-13);
}

TEST(ModulationNorm, ZeroFunction) {
  Grid g = make_box(1, 32);
  EXPECT_EQ(modulation_norm(zeros(g), gaussian_window(1), 1, 1), 0.0);
}

TEST(ModulationNorm, ZeroWindowRejected) {
  Grid g = make_box(1, 32);
  WindowSpec w = gaussian_window(1);
  w.symbol.amplitude = 0.0;
  EXPECT_THROW(modulation_norm(gaussian(g), w, 1, 1), ArgumentError);
  w = gaussian_window(1);
  w.symbol.kind = SymbolKind::polynomial_gaussian;
  EXPECT_THROW(modulation_norm(gaussian(g), w, 1, 1), ArgumentError);
}

TEST(ModulationNorm, GaussianOracle) {
  Grid g = make_box(1, 64);
  GridFunction u = gaussian(g);
  for (double p : {1.0, 2.0, 3.0, kInf})
    for (double q : {1.0, 2.0, kInf}) {
      double v = modulation_norm(u, gaussian_window(1), p, q);
      EXPECT_NEAR(v / gaussian_oracle(1, p, q), 1.0, 0.01) << p << " " << q;
    }
}

TEST(ModulationNorm, ParsevalShortcutMatchesDirectSum) {
  Grid g = make_box(1, 32);
  GridFunction u = family(g, 1, 3)[0];
  double fast = modulation_norm(u, gaussian_window(1), 2, 2);
  double direct = modulation_norm(u, gaussian_window(1), 2.0 + 1e-12, 2);
  EXPECT_NEAR(fast / direct, 1.0, 1e-9);
}

TEST(ModulationNorm, L2RatioConstant) {
  Grid g = make_box(1, 64);
  auto fam = family(g, 20, 11);
  std::vector<double> r;
  for (const auto& u : fam) r.push_back(modulation_norm(u, gaussian_window(1), 2, 2) / lebesgue_norm(u, 2));
  for (double v : r) EXPECT_NEAR(v / r[0], 1.0, 1e-6);
}

TEST(ModulationNorm, WindowIndependenceAndNesting) {
  Grid g = make_box(1, 64);
  auto fam = family(g, 10, 5);
  WindowSpec w1 = gaussian_window(1, 1.0), w2 = gaussian_window(1, 2.0);
  double lo = 1e300, hi = 0.0;
  for (const auto& u : fam) {
    double r = modulation_norm(u, w1, 1, 1) / modulation_norm(u, w2, 1, 1);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
    double inf = modulation_norm(u, w1, kInf, kInf);
    double mid = modulation_norm(u, w1, 2, 2);
    double one = modulation_norm(u, w1, 1, 1);
    EXPECT_LE(inf, 2.0 * mid);
    EXPECT_LE(mid, 2.0 * one);
  }
  EXPECT_GT(lo, 0.25);
  EXPECT_LT(hi, 4.0);
}

TEST(Chirp, InverseAndSupport) {
  Grid g = make_box(2, 32);
  GridFunction u = family(g, 1, 9)[0];
  GridFunction v = chirp_TA(M1(0.7), u);
  EXPECT_LT(l2_distance(chirp_TA(M1(-0.7), v), u), 1e-10 * lebesgue_norm(u, 2));
  EXPECT_NEAR(lebesgue_norm(v, 2), lebesgue_norm(u, 2), 1e-12);
  GridFunction U = fourier(u), V = fourier(v);
  double peak = 0.0;
  for (auto x : U.values) peak = std::max(peak, std::abs(x));
  for (std::int64_t i = 0; i < U.size(); ++i) EXPECT_NEAR(std::abs(U[i]), std::abs(V[i]), 1e-12 * peak);
  Grid g1 = make_box(1, 64);
  GridFunction w = chirp_TA(M1(1.0), gaussian(g1));
  GridFunction W = fourier(w), G = fourier(gaussian(g1));
  for (std::int64_t i = 0; i < W.size(); ++i) EXPECT_EQ(std::abs(W[i]) > 1e-12, std::abs(G[i]) > 1e-12);
}

TEST(Chirp, RejectsBadMatrices) {
  Grid g = make_box(2, 16);
  Mat A(2, 2);
  A << 1, 2, 0, 1;
  EXPECT_THROW(chirp_TA(A, gaussian(g)), ArgumentError);
  EXPECT_THROW(chirp_TA(M1(0.0), gaussian(g)), ArgumentError);
}

TEST(Chirp, ModulationBoundedness) {
  Grid g = make_box(1, 64);
  auto fam = family(g, 10, 21);
  WindowSpec w = gaussian_window(1);
  double C = 0.0;
  for (size_t k = 0; k < fam.size(); ++k) {
    double r = modulation_norm(chirp_TA(M1(1.0), fam[k]), w, 1, 1) / modulation_norm(fam[k], w, 1, 1);
    if (k == 0) C = 2.0 * r;
    EXPECT_LE(r, C);
  }
}

TEST(Dilation, IdentityAndBoundShape) {
  Grid g = make_box(1, 64);
  GridFunction u = family(g, 1, 2)[0];
  DilationResult r = dilation_ratio(u, M1(1.0), gaussian_window(1), kInf, 1);
  EXPECT_NEAR(r.measured, 1.0, 1e-12);
  EXPECT_NEAR(r.bound_shape, 2.0, 1e-15);
  r = dilation_ratio(u, M1(2.0), gaussian_window(1), kInf, 1);
  EXPECT_NEAR(r.bound_shape, 3.0, 1e-15);
  r = dilation_ratio(u, M1(2.0), gaussian_window(1), 1, 1);
  EXPECT_NEAR(r.bound_shape, 1.5, 1e-15);
  r = dilation_ratio(u, M1(2.0), gaussian_window(1), 1, kInf);
  EXPECT_NEAR(r.bound_shape, 0.75, 1e-15);
  EXPECT_THROW(dilation_ratio(u, M1(0.0), gaussian_window(1), 1, 1), ArgumentError);
}

TEST(Dilation, FamilyRatiosBounded) {
  Grid g1 = make_box(1, 64);
  auto fam1 = family(g1, 4, 31);
  double worst = 0.0;
  for (const auto& u : fam1)
    for (double l : {0.5, 2.0}) {
      auto r = dilation_ratio(u, M1(l), gaussian_window(1), kInf, 1);
      worst = std::max(worst, r.measured / r.bound_shape);
    }
  Grid g2 = make_box(2, 48);
  auto fam2 = family(g2, 2, 32);
  Mat D(2, 2), Sh(2, 2);
  D << 2, 0, 0, 0.5;
  Sh << 1, 1, 0, 1;
  for (const auto& u : fam2)
    for (const Mat& l : {D, Sh}) {
      auto r = dilation_ratio(u, l, gaussian_window(2), kInf, 1);
      worst = std::max(worst, r.measured / r.bound_shape);
    }
  EXPECT_TRUE(std::isfinite(worst));
  EXPECT_LT(worst, 1.0);
}

TEST(Weight, ModeratenessConstants) {
  WeightSpec k = make_checked_weight({{1, 2.0}, {1, -1.5}});
  EXPECT_NEAR(k.C(), std::pow(2.0, 1.75), 1e-15);
  EXPECT_NEAR(k.Npow(), 3.5, 1e-15);
  Rng rng(1);
  EXPECT_LE(moderate_check(k, 10000, rng, 10.0), 1.0);
  Vec x(2);
  x << 1.0, 2.0;
  EXPECT_NEAR(weight_value(k, x), 2.0 * std::pow(5.0, -0.75), 1e-14);
  EXPECT_THROW(make_weight({}), ArgumentError);
  EXPECT_THROW(make_weight({{1, 1.0}}, -1.0), ArgumentError);
}

TEST(Sobolev, TrivialWeight) {
  Grid g = make_box(1, 64);
  GridFunction u = family(g, 1, 4)[0];
  WeightSpec one = make_weight({{1, 0.0}});
  for (double p : {1.0, 2.0, kInf}) EXPECT_NEAR(sobolev_k_norm(u, one, p), lebesgue_norm(u, p), 1e-12);
}

TEST(Sobolev, SecondOrderOracle) {
  Grid g = make_box(1, 64);
  WeightSpec k = make_weight({{1, 2.0}});
  EXPECT_NEAR(sobolev_k_norm(gaussian(g), k, 2), std::sqrt(2.75 * std::sqrt(kPi)), 1e-6);
  EXPECT_NEAR(sobolev_k_norm(gaussian(g), k, kInf), 2.0, 1e-6);
}

TEST(Sobolev, AnisotropicMatchesProductWeight) {
  Grid g = make_box(2, 32);
  GridFunction u = family(g, 1, 6)[0];
  WeightSpec k = make_weight({{1, 1.0}, {1, 2.0}});
  GridFunction F = fourier(u);
  for (std::int64_t i = 0; i < F.size(); ++i) {
    Vec z = coords(g, i);
    F[i] *= std::sqrt(1 + z[0] * z[0]) * (1 + z[1] * z[1]);
  }
  EXPECT_NEAR(sobolev_k_norm(u, k, 3.0), lebesgue_norm(inverse_fourier(F), 3.0), 1e-12);
}

TEST(Embedding, InverseWeightClosedForm) {
  EXPECT_NEAR(inverse_weight_norm(make_weight({{1, 2.0}}), 1), kPi, 1e-14);
  EXPECT_NEAR(inverse_weight_norm(make_weight({{2, 2.0}}), 2), std::sqrt(kPi), 1e-14);
  EXPECT_NEAR(inverse_weight_norm(make_weight({{1, 2.0}}, 10.0), kInf), 0.1, 1e-15);
}

TEST(Embedding, PreconditionNamesSubspace) {
  Grid g = make_box(1, 64);
  try {
    embedding_bound(make_weight({{1, 0.5}}), gaussian_window(1), 1, g);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.subspace(), 1);
  }
  try {
    inverse_weight_norm(make_weight({{1, 2.0}, {2, 1.5}}), 1);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.subspace(), 2);
  }
}

TEST(Embedding, JetDerivativesOfInverseWeight) {
  WeightSpec k = make_weight({{1, 2.0}});
  MultiIndexSet set(1, 2);
  Vec x = Vec::Constant(1, 0.7);
  Jet j = inverse_weight_jet(k, set, x);
  double s = 1 + 0.49;
  EXPECT_NEAR(j.derivative(0), 1 / s, 1e-15);
  EXPECT_NEAR(j.derivative(1), -2 * 0.7 / (s * s), 1e-14);
  EXPECT_NEAR(j.derivative(2), (6 * 0.49 - 2) / (s * s * s), 1e-14);
}

TEST(Embedding, BoundDominatesFamily) {
  Grid g = make_box(1, 64);
  WeightSpec k = make_weight({{1, 2.0}});
  WindowSpec w = gaussian_window(1);
  EmbeddingBound b = embedding_bound(k, w, 1, g);
  EXPECT_EQ(b.r, 1);
  EXPECT_NEAR(b.prefactor, 0.5, 1e-14);
  for (const auto& u : family(g, 20, 41)) {
    double lhs = modulation_norm(u, w, kInf, 1);
    double rhs = b.bound * sobolev_k_norm(u, k, kInf);
    EXPECT_LE(lhs, rhs);
  }
  EmbeddingBound b10 = embedding_bound(make_weight({{1, 2.0}}, 10.0), w, 1, g);
  EXPECT_NEAR(b10.bound, b.bound / 10.0, 1e-12 * b.bound);
}

TEST(Seminorms, JapaneseBracketPower) {
  Grid g = make_box(1, 128);
  for (double m : {-2.0, 1.0, 3.0}) {
    GridFunction a = sample(g, [&](const Vec& x) { return cplx(std::pow(japanese(x), m)); });
    auto s = symbol_class_seminorms(a, m, 4);
    ASSERT_EQ(s.size(), 5u);
    EXPECT_NEAR(s[0].value, 1.0, 0.02);
    for (const auto& e : s) EXPECT_TRUE(std::isfinite(e.value));
  }
}

TEST(Seminorms, GaussianInEveryClass) {
  Grid g = make_box(2, 32);
  GridFunction a = gaussian(g);
  for (double m : {-3.0, 0.0, 3.0})
    for (const auto& e : symbol_class_seminorms(a, m, 2)) EXPECT_TRUE(std::isfinite(e.value));
  EXPECT_EQ(symbol_class_seminorms(a, 0, 2).size(), 6u);
  EXPECT_THROW(symbol_class_seminorms(a, 0, 5), ArgumentError);
}

TEST(Seminorms, DerivativeLowersOrder) {
  Grid g = make_box(1, 128);
  const double m = 1.0;
  GridFunction a = sample(g, [](const Vec& x) { return cplx(std::exp(-x[0] * x[0] / 2)); });
  GridFunction da = sample(g, [](const Vec& x) { return cplx(-x[0] * std::exp(-x[0] * x[0] / 2)); });
  double s1 = symbol_class_seminorms(a, m, 1)[1].value;
  double s0 = symbol_class_seminorms(da, m - 1, 0)[0].value;
  EXPECT_NEAR(s1 / s0, 1.0, 1e-3);
}
