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

#include <cstdio>

#include <gtest/gtest.h>

#include "symplecta/grid.hpp"

using namespace symplecta;

namespace {

GridFunction random_function(const Grid& g, Rng& rng) {
  GridFunction f = zeros(g);
  for (auto& v : f.values) v = cplx(rng.normal(), rng.normal());
  return f;
}

GridFunction gaussian(const Grid& g, double s = 1.0, Vec c = Vec()) {
  SymbolSpec spec;
  spec.covariance = s * s * Mat::Identity(g.dim, g.dim);
  if (c.size()) spec.center = c;
  return sample_symbol(spec, g);
}

Mat M2(double a, double b, double c, double d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST(MakeGrid, Spacing) {
  Grid g = make_grid(1, 8);
  EXPECT_NEAR(g.h, 0.886226925452758, 1e-12);
  EXPECT_NEAR(g.h * g.h * g.N, 2 * kPi, 1e-12);
  EXPECT_EQ(make_grid(1, 64).size(), 4096);
  EXPECT_EQ(make_grid(2, 8).size(), 4096);
}

TEST(MakeGrid, RejectsBadSizes) {
  EXPECT_THROW(make_grid(1, 7), ArgumentError);
  EXPECT_THROW(make_grid(1, 2), ArgumentError);
  EXPECT_THROW(make_grid(1, 258), ArgumentError);
  EXPECT_THROW(make_grid(3, 8), ArgumentError);
}

TEST(MakeGrid, SigmaValuesAreLatticeMultiples) {
  Grid g = make_grid(1, 8);
  auto sp = make_space(1);
  for (std::int64_t i = 0; i < g.size(); ++i)
    for (std::int64_t j = 0; j < g.size(); ++j) {
      double s = sigma_eval(sp, coords(g, i), coords(g, j)) / (2 * kPi / g.N);
      EXPECT_NEAR(s, std::round(s), 1e-9);
    }
}

TEST(SampleSymbol, GaussianAtOrigin) {
  Grid g = make_grid(1, 16);
  GridFunction f = gaussian(g);
  EXPECT_EQ(f[flatten(g, {0, 0})], cplx(1.0));
  Vec x = coords(g, 5);
  EXPECT_NEAR(std::abs(f[5] - std::exp(-0.5 * x.squaredNorm())), 0.0, 1e-15);
}

TEST(SampleSymbol, ZeroPolynomial) {
  Grid g = make_grid(1, 16);
  SymbolSpec spec;
  spec.kind = SymbolKind::polynomial_gaussian;
  GridFunction f = sample_symbol(spec, g);
  for (auto v : f.values) EXPECT_EQ(v, cplx(0.0));
}

TEST(SampleSymbol, IllConditionedCovarianceRejected) {
  Grid g = make_grid(1, 16);
  SymbolSpec spec;
  spec.covariance = M2(1.0, 0.0, 0.0, 1e-9);
  EXPECT_THROW(sample_symbol(spec, g), ArgumentError);
}

TEST(SampleSymbol, TruncationWarning) {
  Grid g = make_grid(1, 16);
  SymbolSpec spec;
  spec.covariance = 25.0 * Mat::Identity(2, 2);
  EXPECT_EQ(sample_symbol(spec, g).provenance, "truncation-warning");
  EXPECT_EQ(gaussian(make_grid(1, 64)).provenance, "");
}

TEST(SampleSymbol, FileRoundTrip) {
  Grid g = make_grid(1, 8);
  Rng rng(41);
  GridFunction f = random_function(g, rng);
  std::string path = ::testing::TempDir() + "symplecta_roundtrip.grid";
  write_grid_function(path, f);
  SymbolSpec spec;
  spec.kind = SymbolKind::file;
  spec.path = path;
  GridFunction back = sample_symbol(spec, g);
  for (std::int64_t i = 0; i < g.size(); ++i) EXPECT_EQ(back[i], f[i]);
  std::string text = read_text_file(path);
  EXPECT_EQ(text.substr(0, text.find('\n')), "symplecta-grid v1, n=1, N=8");
  std::remove(path.c_str());
}

TEST(SymplecticFourier, DeltaGivesConstant) {
  for (int N : {8, 16}) {
    Grid g = make_grid(1, N);
    GridFunction d = zeros(g);
    d[flatten(g, {0, 0})] = 1.0;
    GridFunction F = symplectic_fourier(d);
    for (auto v : F.values) EXPECT_NEAR(std::abs(v - 1.0 / N), 0.0, 1e-15);
  }
}

TEST(SymplecticFourier, FrozenSmallExample) {
  // Two-point input on the N=4 grid; values computed once from the direct sum.
  Grid g = make_grid(1, 4);
  GridFunction f = zeros(g);
  f[flatten(g, {1, 0})] = 1.0;
  f[flatten(g, {0, -1})] = cplx(0.0, 2.0);
  GridFunction F = symplectic_fourier(f);
  auto sp = make_space(1);
  for (std::int64_t i = 0; i < g.size(); ++i) {
    cplx s = 0.0;
    for (std::int64_t j = 0; j < g.size(); ++j)
      s += std::exp(-kI * sigma_eval(sp, coords(g, i), coords(g, j))) * f[j];
    EXPECT_NEAR(std::abs(F[i] - s * 0.25), 0.0, 1e-14);
  }
  EXPECT_NEAR(std::abs(F[flatten(g, {1, 1})] - cplx(0.5, -0.25)), 0.0, 1e-14);
}

TEST(SymplecticFourier, GaussianSelfReciprocal) {
  Grid g = make_grid(1, 64);
  GridFunction f = gaussian(g);
  EXPECT_LE(rel_l2(symplectic_fourier(f), f), 1e-8);
}

TEST(SymplecticFourier, InvolutiveAndIsometric) {
  Rng rng(42);
  for (int N : {16, 32, 64}) {
    Grid g = make_grid(1, N);
    for (int k = 0; k < 50; ++k) {
      GridFunction f = random_function(g, rng);
      GridFunction F = symplectic_fourier(f);
      EXPECT_LE(rel_l2(symplectic_fourier(F), f), 1e-10);
      EXPECT_NEAR(sigma_norm(F, 2) / sigma_norm(f, 2), 1.0, 1e-10);
    }
  }
  Grid g2 = make_grid(2, 8);
  GridFunction f = random_function(g2, rng);
  EXPECT_LE(rel_l2(symplectic_fourier(symplectic_fourier(f)), f), 1e-10);
}

TEST(Multiplier, ConstantOneIsIdentity) {
  Rng rng(43);
  Grid g = make_grid(1, 32);
  GridFunction f = random_function(g, rng);
  EXPECT_LE(rel_l2(apply_multiplier([](const Vec&) { return cplx(1.0); }, f), f), 1e-12);
}

TEST(Multiplier, CharacterIsTranslation) {
  Rng rng(44);
  Grid g = make_grid(1, 32);
  auto sp = make_space(1);
  GridFunction f = random_function(g, rng);
  Vec zeta(2);
  zeta << 3 * g.h, -7 * g.h;
  auto lam = [&](const Vec& eta) { return std::exp(-kI * sigma_eval(sp, eta, zeta)); };
  EXPECT_LE(rel_l2(apply_multiplier(lam, f), translate(zeta, f)), 1e-12);
}

TEST(Multiplier, UnimodularIsUnitary) {
  Rng rng(45);
  Grid g = make_grid(1, 32);
  GridFunction f = random_function(g, rng);
  auto lam = [](const Vec& x) { return std::exp(kI * (x[0] * x[1] + 0.3 * x[0] * x[0])); };
  EXPECT_NEAR(l2(apply_multiplier(lam, f)) / l2(f), 1.0, 1e-10);
}

TEST(Multiplier, NonFiniteRaisesWithPoint) {
  Grid g = make_grid(1, 8);
  GridFunction f = gaussian(g);
  try {
    apply_multiplier([](const Vec& x) { return x.norm() == 0 ? cplx(kInf) : cplx(1.0); }, f);
    FAIL();
  } catch (const EvaluationError& e) {
    EXPECT_EQ(e.point().norm(), 0.0);
  }
}

TEST(Multiplier, Lemma11cScaledForm) {
  Grid g = make_grid(1, 256);
  GridFunction f = gaussian(g, 1.0);
  Mat S = 2.0 * Mat::Identity(2, 2);
  auto lam = [](const Vec& x) { return std::exp(-0.25 * x.squaredNorm() + 0.5 * kI * x[0]); };
  auto lamS = [&](const Vec& x) { return lam(S * x); };
  GridFunction lhs = apply_multiplier(lam, f);
  GridFunction rhs = apply_multiplier_form(S, lamS, f);
  EXPECT_LE(l2_distance(lhs, rhs) / l2(lhs), 1e-9);
}

TEST(Pullback, IdentityAndErrors) {
  Rng rng(46);
  Grid g = make_grid(1, 16);
  GridFunction f = random_function(g, rng);
  EXPECT_EQ(l2_distance(pullback(Mat::Identity(2, 2), f), f), 0.0);
  EXPECT_THROW(pullback(M2(0.5, 0, 0, 1), f, SampleMode::exact), ModeError);
  EXPECT_THROW(pullback(M2(1, 1, 1, 1), f), ArgumentError);
}

TEST(Pullback, Lemma11aShear) {
  Rng rng(47);
  Grid g = make_grid(1, 32);
  auto sp = make_space(1);
  Mat A = M2(1, 1, 0, 1);
  Mat B = symplectic_adjoint(sp, A).inverse();
  for (int k = 0; k < 10; ++k) {
    GridFunction f = random_function(g, rng);
    GridFunction lhs = pullback(A, symplectic_fourier(f));
    GridFunction rhs = (1.0 / std::abs(A.determinant())) * symplectic_fourier(pullback(B, f));
    EXPECT_LE(l2_distance(lhs, rhs) / l2(lhs), 1e-9);
  }
}

TEST(Pullback, Lemma11bScaling) {
  Grid g = make_grid(1, 64);
  GridFunction f = gaussian(g, 1.2);
  Mat S = 2.0 * Mat::Identity(2, 2);
  auto lam = [](const Vec& x) { return std::exp(-0.1 * x.squaredNorm() + 0.3 * kI * x[1]); };
  auto lamS = [&](const Vec& x) { return lam(S.inverse() * x); };
  GridFunction lhs = pullback(S, apply_multiplier(lam, f));
  GridFunction rhs = apply_multiplier(lamS, pullback(S, f));
  EXPECT_LE(l2_distance(lhs, rhs) / l2(lhs), 1e-9);
}

TEST(Pullback, Lemma3ScaledFourier) {
  Grid g = make_grid(1, 128);
  GridFunction f = gaussian(g, 1.0);
  Mat S = 2.0 * Mat::Identity(2, 2);
  GridFunction lhs = symplectic_fourier(f);
  GridFunction rhs = 2.0 * symplectic_fourier_form(S, pullback(S, f));
  EXPECT_LE(l2_distance(lhs, rhs) / l2(lhs), 1e-9);
}

TEST(Pullback, ResampledMatchesAnalytic) {
  Grid g = make_grid(1, 64);
  GridFunction f = gaussian(g, 1.3);
  Mat A = M2(0.9, 0.2, -0.1, 1.1);
  GridFunction got = pullback(A, f, SampleMode::resampled);
  Mat cov = 1.69 * Mat::Identity(2, 2);
  GridFunction want = sample(g, [&](const Vec& x) {
    Vec y = A * x;
    return cplx(std::exp(-0.5 * y.squaredNorm() / 1.69));
  });
  EXPECT_LE(l2_distance(got, want) / l2(want), 1e-9);
}

TEST(Translate, ZeroAndRoundTrip) {
  Rng rng(48);
  Grid g = make_grid(1, 16);
  GridFunction f = random_function(g, rng);
  EXPECT_EQ(l2_distance(translate(Vec::Zero(2), f), f), 0.0);
  Vec xi(2);
  xi << 5 * g.h, -3 * g.h;
  EXPECT_EQ(l2_distance(translate(-xi, translate(xi, f)), f), 0.0);
}

TEST(Translate, CommutesWithMultiplier) {
  Rng rng(49);
  Grid g = make_grid(1, 32);
  GridFunction f = random_function(g, rng);
  GridFunction phase = zeros(g);
  for (auto& v : phase.values) v = std::exp(kI * rng.uniform(0, 2 * kPi));
  Vec xi(2);
  xi << -4 * g.h, 9 * g.h;
  GridFunction a = translate(xi, apply_multiplier(phase, f));
  GridFunction b = apply_multiplier(phase, translate(xi, f));
  EXPECT_LE(l2_distance(a, b) / l2(a), 1e-10);
}

TEST(Translate, ResampledShiftOfGaussian) {
  Grid g = make_grid(1, 64);
  Vec xi(2);
  xi << 0.37, -0.81;
  GridFunction got = translate(xi, gaussian(g));
  GridFunction want = gaussian(g, 1.0, xi);
  EXPECT_LE(l2_distance(got, want) / l2(want), 1e-10);
}

TEST(Translate, Corollary12) {
  Rng rng(50);
  Grid g = make_grid(1, 64);
  GridFunction f = gaussian(g, 0.9);
  Mat S = 2.0 * Mat::Identity(2, 2);
  auto lam = [](const Vec& x) { return std::exp(kI * (0.2 * x[0] * x[1] - 0.1 * x[0])); };
  Vec xi(2);
  xi << 2 * g.h, -4 * g.h;
  GridFunction lhs = translate(S.inverse() * xi, pullback(S, apply_multiplier(lam, f)));
  GridFunction rhs = pullback(S, apply_multiplier(lam, translate(xi, f)));
  EXPECT_LE(l2_distance(lhs, rhs) / l2(lhs), 1e-9);
}

TEST(Convolve, UnitDeltaIsIdentity) {
  Rng rng(51);
  Grid g = make_grid(1, 32);
  GridFunction f = random_function(g, rng);
  EXPECT_LE(rel_l2(sigma_convolve(unit_delta(g), f), f), 1e-12);
}

TEST(Convolve, Commutative) {
  Rng rng(52);
  Grid g = make_grid(1, 32);
  for (int k = 0; k < 20; ++k) {
    GridFunction b = random_function(g, rng), c = random_function(g, rng);
    GridFunction x = sigma_convolve(b, c), y = sigma_convolve(c, b);
    EXPECT_LE(l2_distance(x, y) / l2(x), 1e-12);
  }
  EXPECT_THROW(sigma_convolve(zeros(make_grid(1, 8)), zeros(make_grid(1, 16))), ArgumentError);
}

TEST(Convolve, DirectSumOracle) {
  Rng rng(53);
  Grid g = make_grid(1, 8);
  GridFunction b = random_function(g, rng), c = random_function(g, rng);
  GridFunction x = sigma_convolve(b, c);
  for (std::int64_t i = 0; i < g.size(); ++i) {
    auto ci = unflatten(g, i);
    cplx s = 0.0;
    for (std::int64_t j = 0; j < g.size(); ++j) {
      auto cj = unflatten(g, j);
      s += b[flatten(g, {ci[0] - cj[0], ci[1] - cj[1]})] * c[j];
    }
    EXPECT_NEAR(std::abs(x[i] - s * g.weight()), 0.0, 1e-12);
  }
}

TEST(Convolve, YoungInequality) {
  Rng rng(54);
  Grid g = make_grid(1, 16);
  for (int k = 0; k < 100; ++k) {
    GridFunction b = random_function(g, rng), c = random_function(g, rng);
    GridFunction x = sigma_convolve(b, c);
    // (p, q) = (1, 2) -> r = 2 and (2, 2) -> r = inf.
    EXPECT_LE(sigma_norm(x, 2), sigma_norm(b, 1) * sigma_norm(c, 2) * (1 + 1e-12));
    EXPECT_LE(sigma_norm(x, kInf), sigma_norm(b, 2) * sigma_norm(c, 2) * (1 + 1e-12));
  }
}

TEST(Multiplier, YoungBound) {
  Rng rng(55);
  Grid g = make_grid(1, 16);
  for (int k = 0; k < 100; ++k) {
    GridFunction chi = random_function(g, rng), f = random_function(g, rng);
    GridFunction y = apply_multiplier(chi, f);
    double c1 = sigma_norm(symplectic_fourier(chi), 1);
    for (double p : {1.0, 2.0, kInf}) EXPECT_LE(sigma_norm(y, p), c1 * sigma_norm(f, p) * (1 + 1e-12));
  }
}
