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


#pragma once

#include <functional>
#include <map>

#include "symplecta/katoschatten.hpp"

namespace symplecta {

struct BoundSettings {
  int coarse_N = 48;
  int fine_N = 64;
  int family_size = 10;
  std::uint64_t seed = 2024;
  double freeze_factor = 2.0;
  double drift = 0.10;
  double cordes_drift = 0.05;
  double cordes_t = 1.5;
  double mu = 1.25;
  double sobolev_s = 2.5;
  int n15_N = 32;
  int n15_trials = 100;
};

struct NamedT {
  std::string name;
  Mat T;
};

inline std::vector<NamedT> named_suite_T() {
  std::vector<NamedT> out;
  auto Ts = suite_T();
  auto names = suite_T_names();
  for (std::size_t i = 0; i < Ts.size(); ++i) out.push_back({names[i], Ts[i]});
  return out;
}

inline RepContext context_for(const Mat& T, int N) {
  const int n = static_cast<int>(T.rows()) / 2;
  return build_rep_context(make_space(n), T, make_config(n, N));
}

// Ratios r[k] at the coarse and fine grids for every family member.  Member 0 is
// the calibration symbol; the frozen constant is freeze_factor times its fine ratio.
struct FrozenTrack {
  std::vector<double> coarse, fine;
  double constant = 0.0;
  double worst = 0.0;
  double drift = 0.0;
};

inline FrozenTrack freeze_and_track(const std::function<double(int N, int k)>& ratio, int members, int coarse_N,
                                    int fine_N, double factor) {
  FrozenTrack t;
  for (int k = 0; k < members; ++k) {
    t.coarse.push_back(ratio(coarse_N, k));
    t.fine.push_back(ratio(fine_N, k));
  }
  t.constant = factor * t.fine[0];
  for (int k = 0; k < members; ++k) {
    t.worst = std::max({t.worst, t.coarse[k], t.fine[k]});
    t.drift = std::max(t.drift, std::abs(t.fine[k] / t.coarse[k] - 1.0));
  }
  return t;
}

inline std::vector<NormRow> track_rows(const std::string& anchor, const std::string& quantity, double p, double q,
                                       const FrozenTrack& t, double drift_bound) {
  bool finite = std::isfinite(t.worst) && std::isfinite(t.drift);
  return {make_row(anchor, quantity, p, q, t.worst, t.constant, finite && t.worst <= t.constant),
          make_row(anchor, quantity + "-drift", p, q, t.drift, drift_bound, finite && t.drift <= drift_bound)};
}

// Bessel potential kernel of order t on R: the inverse Fourier transform of <z>^{-t}.
inline double bessel_kernel(double t, double x) {
  const double nu = 0.5 * (t - 1.0);
  const double r = std::abs(x);
  if (r < 1e-300) return std::tgamma(nu) / (2.0 * std::sqrt(kPi) * std::tgamma(nu + 0.5));
  return std::pow(0.5 * r, nu) * std::cyl_bessel_k(nu, r) / (std::sqrt(kPi) * std::tgamma(0.5 * t));
}

inline GridFunction cordes_symbol(const Grid& g, double t) {
  return sample(g, [&](const Vec& z) {
    double v = 1.0;
    for (int a = 0; a < z.size(); ++a) v *= bessel_kernel(t, z[a]);
    return cplx(v);
  });
}

inline double bessel_potential_norm(const GridFunction& a, double s, double p) {
  if (s == 0.0) return lebesgue_norm(a, p);
  return lebesgue_norm(fourier_multiplier([&](const Vec& z) { return cplx(std::pow(japanese(z), s)); }, a), p);
}

inline std::vector<GridFunction> calibration_family(const Grid& g, const BoundSettings& s) {
  std::vector<GridFunction> out;
  for (const auto& spec : gaussian_family(s.family_size, s.seed, g.dim)) out.push_back(sample_symbol(spec, g));
  return out;
}

// Freeze-and-track rows for the Schatten/modulation ratio, the Cordes trace norm,
// Lambda^w stability and the Sobolev bounds, one block per T.
inline NormReport bound_suite(const std::vector<NamedT>& Ts, const BoundSettings& s) {
  NormReport rep;
  const int n = static_cast<int>(Ts.at(0).T.rows()) / 2;
  const WindowSpec window = gaussian_window(2 * n);
  std::map<int, std::vector<GridFunction>> family;
  for (int N : {s.coarse_N, s.fine_N}) family[N] = calibration_family(make_grid(n, N), s);
  std::map<std::tuple<int, int, double>, double> mod_cache;
  auto mod = [&](int N, int k, double p) {
    auto key = std::make_tuple(N, k, p);
    auto it = mod_cache.find(key);
    if (it != mod_cache.end()) return it->second;
    return mod_cache[key] = modulation_norm(family[N][k], window, p, 1.0);
  };
  for (const auto& [name, T] : Ts) {
    std::map<int, RepContext> ctx;
    std::map<int, std::vector<CMat>> ops;
    for (int N : {s.coarse_N, s.fine_N}) {
      ctx.emplace(N, context_for(T, N));
      for (const auto& a : family[N]) ops[N].push_back(quantize_T(ctx.at(N), a).entries);
    }
    const std::string tag = "[" + name + "]";
    for (double p : {1.0, 2.0}) {
      auto t = freeze_and_track([&](int N, int k) { return schatten_norm(ops[N][k], p).norm / mod(N, k, p); },
                                s.family_size, s.coarse_N, s.fine_N, s.freeze_factor);
      rep.append(track_rows("thm-n7", "schatten-over-modulation" + tag, p, 1.0, t, s.drift));
    }
    {
      std::map<int, double> trace;
      for (int N : {s.coarse_N, s.fine_N})
        trace[N] = schatten_norm(quantize_T(ctx.at(N), cordes_symbol(make_grid(n, N), s.cordes_t)).entries, 1.0).norm;
      double drift = std::abs(trace[s.fine_N] / trace[s.coarse_N] - 1.0);
      bool finite = std::isfinite(trace[s.fine_N]) && std::isfinite(drift);
      rep.rows.push_back(make_row("cor-n13", "cordes-trace-norm" + tag, 1.0, std::nan(""), trace[s.fine_N], kInf, finite));
      rep.rows.push_back(
          make_row("cor-n13", "cordes-trace-norm-drift" + tag, 1.0, std::nan(""), drift, s.cordes_drift, finite && drift <= s.cordes_drift));
    }
    {
      auto t = freeze_and_track(
          [&](int N, int k) {
            return modulation_norm(lambda_transform(ctx.at(N), family[N][k]), window, 2.0, 1.0) / mod(N, k, 2.0);
          },
          s.family_size, s.coarse_N, s.fine_N, s.freeze_factor);
      rep.append(track_rows("thm-lambda-w", "modulation-ratio" + tag, 2.0, 1.0, t, s.drift));
    }
    {
      auto t = freeze_and_track(
          [&](int N, int k) {
            return schatten_norm(ops[N][k], kInf).norm / bessel_potential_norm(family[N][k], s.sobolev_s, kInf);
          },
          s.family_size, s.coarse_N, s.fine_N, s.freeze_factor);
      rep.append(track_rows("thm-10-a", "operator-over-sobolev" + tag, kInf, std::nan(""), t, s.drift));
    }
    for (double p : {1.0, 2.0}) {
      const double order = 2.0 * s.mu * n * std::abs(1.0 - 2.0 / p);
      auto t = freeze_and_track(
          [&](int N, int k) { return schatten_norm(ops[N][k], p).norm / bessel_potential_norm(family[N][k], order, p); },
          s.family_size, s.coarse_N, s.fine_N, s.freeze_factor);
      rep.append(track_rows("thm-10-interp", "schatten-over-sobolev" + tag, p, std::nan(""), t, s.drift));
    }
  }
  return rep;
}

struct Tolerances {
  double cocycle = 1e-12;
  double fourier = 1e-10;
  double self_reciprocal = 1e-8;
  double theorem_n4 = 1e-7;
  double route = 1e-7;
  double orthogonality = 0.01;
  double recover = 1e-7;
  double kato = 1e-6;
  double scalar = 0.01;
  double positivity = 1e-9;
  double majorization = 1e-8;
  double chirp = 1e-10;
};

inline std::string witness_text(const Vec& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? ";" : "") + fmt_short(v[i]);
  return out + "]";
}

inline GridFunction constant_function(const Grid& g, cplx v) {
  GridFunction f = zeros(g);
  for (auto& x : f.values) x = v;
  return f;
}

inline GridFunction random_function(const Grid& g, Rng& rng) {
  GridFunction f = zeros(g);
  for (auto& x : f.values) x = cplx(rng.normal(), rng.normal());
  return f;
}

inline NormRow residual_row(const std::string& anchor, const std::string& quantity, double value, double tol) {
  return make_row(anchor, quantity, std::nan(""), std::nan(""), value, tol, std::isfinite(value) && value <= tol);
}

// Verdict of the symmetry test: a degenerate gate must return a witness xi with
// omega(xi, .) = omega(., xi); a nondegenerate one must separate every basis vector.
inline bool dichotomy_agrees(const SymplecticSpace& sp, const Mat& T, Rng& rng) {
  auto gate = nondegeneracy_gate(sp, T);
  auto mc = make_multiplier(sp, T);
  const int d = sp.dim();
  if (!gate.nondegenerate) {
    for (int i = 0; i < 20; ++i)
      if (symmetry_defect(mc, *gate.kernel_witness, rng.normal_vec(d)) > 1e-10) return false;
    return true;
  }
  for (int i = 0; i < d; ++i) {
    Vec x = Vec::Unit(d, i);
    if (symmetry_defect(mc, x, separating_partner(mc, x)) <= 0.1) return false;
  }
  return true;
}

// Cocycle algebra, the nondegeneracy dichotomy, the symplectic Fourier transform and
// the quantization routes for one T on an N grid.  A degenerate T yields a single
// failing gate row naming the kernel witness.
inline NormReport verify_core_suite(const Mat& T, int N, std::uint64_t seed, const Tolerances& tol = {}) {
  NormReport rep;
  const int n = static_cast<int>(T.rows()) / 2;
  auto sp = make_space(n);
  auto gate = nondegeneracy_gate(sp, T);
  if (!gate.nondegenerate) {
    rep.rows.push_back(make_row("prop-gate", "nondegeneracy-witness=" + witness_text(*gate.kernel_witness),
                                std::nan(""), std::nan(""), std::abs(gate.detS), 0.0, false));
    return rep;
  }
  rep.rows.push_back(make_row("prop-gate", "nondegeneracy-det-S", std::nan(""), std::nan(""), gate.detS, 0.0, true));
  Rng rng(seed);
  const int d = 2 * n;
  {
    std::vector<Mat> Ts{T};
    for (int k = 0; k < 10; ++k) Ts.push_back(rng.normal_mat(d, d));
    double cyc = 0.0, norm = 0.0, cob = 0.0;
    for (const Mat& Tk : Ts) {
      auto mc = make_multiplier(sp, Tk);
      std::vector<std::pair<Vec, Vec>> pairs;
      for (int i = 0; i < 1000; ++i) {
        Vec a = rng.normal_vec(d), b = rng.normal_vec(d), c = rng.normal_vec(d);
        cyc = std::max(cyc, cocycle_residual(mc, a, b, c));
        norm = std::max(norm, std::abs(omega_tilde(mc, a, Vec(-a)) - 1.0));
        pairs.emplace_back(a, b);
      }
      cob = std::max(cob, coboundary_residual(mc, pairs));
    }
    rep.rows.push_back(residual_row("lem-cocycle", "cocycle-equation", cyc, tol.cocycle));
    rep.rows.push_back(residual_row("lem-cocycle", "normalization", norm, tol.cocycle));
    rep.rows.push_back(residual_row("lem-cocycle", "coboundary", cob, tol.cocycle));
  }
  {
    int mismatches = 0;
    for (int k = 0; k < 20; ++k) {
      Mat Tk = rng.normal_mat(d, d);
      if (k % 2 == 1) Tk -= 0.5 * (Tk + symplectic_adjoint(sp, Tk));
      if (!dichotomy_agrees(sp, Tk, rng)) ++mismatches;
    }
    rep.rows.push_back(residual_row("rem-dichotomy", "gate-vs-symmetry-mismatches", mismatches, 0.0));
  }
  {
    double inv = 0.0, iso = 0.0;
    for (int Nf : {16, 32, 64}) {
      Grid g = make_grid(n, Nf);
      for (int k = 0; k < 50; ++k) {
        GridFunction f = random_function(g, rng);
        GridFunction F = symplectic_fourier(f);
        inv = std::max(inv, rel_l2(symplectic_fourier(F), f));
        iso = std::max(iso, std::abs(sigma_norm(F, 2) / sigma_norm(f, 2) - 1.0));
      }
    }
    SymbolSpec gs;
    gs.covariance = Mat::Identity(d, d);
    GridFunction gauss = sample_symbol(gs, make_grid(n, 64));
    rep.rows.push_back(residual_row("prop-fourier", "involution", inv, tol.fourier));
    rep.rows.push_back(residual_row("prop-fourier", "isometry", iso, tol.fourier));
    rep.rows.push_back(residual_row("prop-fourier", "gaussian-self-reciprocity", rel_l2(symplectic_fourier(gauss), gauss),
                                    tol.self_reciprocal));
  }
  auto ctx = context_for(T, N);
  const Grid g = ctx.config.phase();
  auto fam = gaussian_family(10, seed, d);
  {
    double n4 = 0.0, rec = 0.0;
    for (const auto& spec : fam) {
      GridFunction a = sample_symbol(spec, g);
      OperatorMatrix A = quantize_T(ctx, a);
      n4 = std::max(n4, rel_frobenius(quantize_weyl(ctx, lambda_transform(ctx, a)).entries, A.entries));
      rec = std::max(rec, rel_l2(recover_symbol(ctx, A), a));
    }
    rep.rows.push_back(residual_row("thm-n4", "weyl-symbol-agreement", n4, tol.theorem_n4));
    rep.rows.push_back(residual_row("prop-bijective", "recover-round-trip", rec, tol.recover));
  }
  if (n == 1) {
    GridFunction a = sample_symbol(fam[2], g);
    double worst = 0.0;
    for (auto [th, ta] : std::vector<std::pair<double, double>>{{0.5, 0.5}, {1.0, 0.0}, {0.3, 0.7}}) {
      Mat Tk = Mat::Zero(2, 2);
      Tk(0, 0) = ta;
      Tk(1, 1) = th;
      auto c = build_rep_context(sp, Tk, ctx.config);
      CMat K = quantize_theta_tau_kernel(Mat::Constant(1, 1, th), Mat::Constant(1, 1, ta), a).entries;
      worst = std::max(worst, rel_frobenius(K, quantize_T(c, a).entries));
    }
    rep.rows.push_back(residual_row("prop-synthesis", "kernel-vs-fourier-route", worst, tol.route));
  }
  {
    Vec c(n), k(n);
    c.setConstant(0.4);
    k.setConstant(-0.6);
    CVec phiv = gaussian_state(ctx.config, 1.0), psiv = gaussian_state(ctx.config, 1.3, c, k);
    double target = std::sqrt(ctx.detS) * std::pow(state_norm(ctx.config, phiv) * state_norm(ctx.config, psiv), 2);
    double got = orthogonality_integral(ctx, phiv, psiv);
    rep.rows.push_back(residual_row("lem-orthogonality", "relative-defect", std::abs(got / target - 1.0), tol.orthogonality));
  }
  return rep;
}

// Operator calculus statements and explicit Schatten bounds for b{G}.
inline NormReport n15_suite(const RepContext& ctx, std::uint64_t seed, int trials = 100, const Tolerances& tol = {}) {
  NormReport rep;
  const Grid g = ctx.config.phase();
  const int d = g.dim;
  const int M = static_cast<int>(ctx.config.M);
  auto narrow = [&](int k, std::uint64_t s) { return sample_symbol(gaussian_family(k + 1, s, d, 0.65)[k], g); };
  Rng rng(seed);
  {
    CVec v = rng.complex_vec(M);
    CMat G = v * v.adjoint();
    CMat one = kato_synthesis(ctx, PhaseFn([](const Vec&) { return cplx(1.0); }), {G, ""}).entries;
    CMat target = std::sqrt(ctx.detS) * G.trace() * CMat::Identity(M, M);
    rep.rows.push_back(residual_row("thm-n15-ii", "scalar-synthesis", rel_frobenius(one, target), tol.scalar));
    GridFunction b = narrow(0, seed + 61);
    for (auto& x : b.values) x = std::norm(x);
    CMat P = kato_synthesis(ctx, b, {G, ""}).entries;
    Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (P + P.adjoint()), Eigen::EigenvaluesOnly);
    double neg = std::max(0.0, -es.eigenvalues().minCoeff()) / std::max(P.norm(), 1e-300);
    rep.rows.push_back(residual_row("thm-n15-i", "positivity-negative-part", neg, tol.positivity));
  }
  {
    CMat X = rng.complex_mat(M, 2), Y = rng.complex_mat(M, 2);
    CMat G = X * Y.adjoint();
    auto [absG, absGs] = polar_absolutes(G);
    GridFunction b1 = kato_weights(ctx, narrow(0, seed + 71)), b2 = kato_weights(ctx, narrow(1, seed + 71));
    GridFunction prod = pointwise(b1, b2), m1 = zeros(g), m2 = zeros(g);
    for (std::int64_t i = 0; i < prod.size(); ++i) {
      m1[i] = std::norm(b1[i]);
      m2[i] = std::norm(b2[i]);
    }
    double r = majorization_residual(kato_synthesis_lattice(ctx, prod, G), kato_synthesis_lattice(ctx, m1, absGs),
                                     kato_synthesis_lattice(ctx, m2, absG), 500, rng);
    rep.rows.push_back(residual_row("thm-n15-iii", "product-majorization", r, tol.majorization));
  }
  // Explicit bounds: worst measured/bound ratio over random (b, G) per exponent.
  struct Worst {
    double value = 0.0, bound = 1.0, ratio = -1.0;
    bool ok = true;
  };
  std::map<double, Worst> worst;
  for (int t = 0; t < trials; ++t) {
    const int rank = 1 + t % 3;
    GridFunction b = (rng.uniform(0.2, 3.0) * cplx(1.0)) * narrow(t % 10, seed + 100 + t);
    CMat G = rng.complex_mat(M, rank) * rng.complex_mat(rank, M);
    const double g1 = schatten_norm(G, 1.0).norm;
    CMat B = kato_synthesis(ctx, b, {G, ""}).entries;
    auto sv = schatten_norm(B, 1.0).singular_values;
    for (double p : {1.0, 2.0, kInf}) {
      double e = std::isinf(p) ? 0.5 : 0.5 * (1.0 - 1.0 / p);
      double bound = std::pow(ctx.detS, e) * kato_lp_norm(ctx, b, p) * g1;
      double measured = 0.0;
      if (std::isinf(p)) {
        measured = sv.front();
      } else {
        for (double x : sv) measured += std::pow(x / sv.front(), p);
        measured = sv.front() * std::pow(measured, 1.0 / p);
      }
      Worst& w = worst[p];
      w.ok = w.ok && measured <= bound * (1.0 + 1e-12);
      if (measured / bound > w.ratio) w = {measured, bound, measured / bound, w.ok};
    }
  }
  for (double p : {1.0, 2.0, kInf}) {
    const Worst& w = worst[p];
    rep.rows.push_back(make_row(std::isinf(p) ? "thm-n15-a" : "thm-n15-b", "synthesis-schatten-bound", p, std::nan(""),
                                w.value, w.bound, w.ok));
  }
  return rep;
}

// Kato's identity and its multiplier and matrix-coefficient variants, followed by
// the n15 rows.
inline NormReport kato_suite(const Mat& T, int N, std::uint64_t seed, int trials = 100, const Tolerances& tol = {}) {
  NormReport rep;
  auto ctx = context_for(T, N);
  const Grid g = ctx.config.phase();
  const int d = g.dim;
  auto narrow = [&](int k, std::uint64_t s) { return sample_symbol(gaussian_family(k + 1, s, d, 0.65)[k], g); };
  {
    double direct = 0.0, swapped = 0.0;
    for (int k = 0; k < 6; ++k) {
      auto r = kato_identity_residual(ctx, narrow(k, seed + 31), narrow(k, seed + 32));
      direct = std::max(direct, r.direct);
      swapped = std::max(swapped, r.swapped);
    }
    rep.rows.push_back(residual_row("thm-n14-a", "kato-identity", direct, tol.kato));
    rep.rows.push_back(residual_row("thm-n14-a", "kato-identity-swapped", swapped, tol.kato));
  }
  {
    GridFunction b = narrow(0, seed + 41), c = narrow(1, seed + 41);
    double chirp = multiplier_identity_residual(ctx, b, c, [&](const Vec& x) { return lambda_phase(ctx, x); });
    Vec zeta = Vec::Zero(d);
    zeta[0] = 2 * g.h;
    zeta[d - 1] = -g.h;
    double shift = multiplier_identity_residual(
        ctx, b, c, [&](const Vec& x) { return std::exp(-kI * sigma_eval(ctx.space, x, zeta)); });
    rep.rows.push_back(residual_row("eq-k2", "multiplier-identity-chirp", chirp, tol.kato));
    rep.rows.push_back(residual_row("eq-k2", "multiplier-identity-translation", shift, tol.kato));
  }
  {
    Vec c0 = Vec::Constant(ctx.config.n, 0.3), k0 = Vec::Constant(ctx.config.n, -0.2);
    CVec f = gaussian_state(ctx.config), h = gaussian_state(ctx.config, 1.2, c0, k0);
    rep.rows.push_back(residual_row("eq-k1", "matrix-coefficient", translation_covariance_residual(ctx, narrow(0, seed + 51), f, h),
                                    tol.kato));
  }
  rep.append(n15_suite(ctx, seed, trials, tol).rows);
  return rep;
}

// Embedding, dilation and chirp checks on Lebesgue boxes.
inline NormReport norms_suite(std::uint64_t seed, const Tolerances& tol = {}) {
  NormReport rep;
  Grid g1 = make_box(1, 64);
  WindowSpec w1 = gaussian_window(1);
  std::vector<GridFunction> fam;
  for (const auto& spec : gaussian_family(20, seed, 1)) fam.push_back(sample_symbol(spec, g1));
  {
    WeightSpec k = make_weight({{1, 2.0}});
    EmbeddingBound b = embedding_bound(k, w1, 1.0, g1);
    double worst = 0.0, value = 0.0, bound = 1.0;
    bool ok = true;
    for (const auto& u : fam) {
      double lhs = modulation_norm(u, w1, kInf, 1.0), rhs = b.bound * sobolev_k_norm(u, k, kInf);
      ok = ok && lhs <= rhs;
      if (lhs / rhs > worst) {
        worst = lhs / rhs;
        value = lhs;
        bound = rhs;
      }
    }
    rep.rows.push_back(make_row("thm-n10", "embedding-bound", kInf, 1.0, value, bound, ok));
    bool rejected = false;
    try {
      embedding_bound(make_weight({{1, 0.5}}), w1, 1.0, g1);
    } catch (const PreconditionError&) {
      rejected = true;
    }
    rep.rows.push_back(make_row("thm-n10", "precondition-qt-le-dim-rejected", kInf, 1.0, rejected ? 1.0 : 0.0, 1.0, rejected));
  }
  {
    // One frozen constant over the dilation family and the chirp family.
    std::vector<double> ratios;
    for (int k = 0; k < 4; ++k)
      for (double l : {0.5, 2.0}) {
        auto r = dilation_ratio(fam[k], Mat::Constant(1, 1, l), w1, kInf, 1.0);
        ratios.push_back(r.measured / r.bound_shape);
      }
    Grid g2 = make_box(2, 48);
    Mat D(2, 2), Sh(2, 2);
    D << 2, 0, 0, 0.5;
    Sh << 1, 1, 0, 1;
    for (const auto& spec : gaussian_family(2, seed + 1, 2)) {
      GridFunction u = sample_symbol(spec, g2);
      for (const Mat& l : {D, Sh}) {
        auto r = dilation_ratio(u, l, gaussian_window(2), kInf, 1.0);
        ratios.push_back(r.measured / r.bound_shape);
      }
    }
    for (int k = 0; k < 10; ++k)
      for (double a : {0.5, 1.0, 2.0})
        ratios.push_back(modulation_norm(chirp_TA(Mat::Constant(1, 1, a), fam[k]), w1, 1.0, 1.0) /
                         modulation_norm(fam[k], w1, 1.0, 1.0));
    const double constant = 2.0 * ratios.front();
    const double top = *std::max_element(ratios.begin(), ratios.end());
    rep.rows.push_back(make_row("thm-n5-n6", "frozen-family-ratio", std::nan(""), std::nan(""), top, constant,
                                std::isfinite(top) && top <= constant));
  }
  {
    double inv = 0.0;
    bool support = true;
    for (int k = 0; k < 10; ++k)
      for (double a : {0.5, 1.0, 2.0}) {
        Mat A = Mat::Constant(1, 1, a);
        GridFunction v = chirp_TA(A, fam[k]);
        inv = std::max(inv, rel_l2(chirp_TA(Mat(-A), v), fam[k]));
        GridFunction U = fourier(fam[k]), V = fourier(v);
        for (std::int64_t i = 0; i < U.size(); ++i) support = support && ((U[i] == 0.0) == (V[i] == 0.0));
      }
    rep.rows.push_back(residual_row("thm-n5", "chirp-inverse", inv, tol.chirp));
    rep.rows.push_back(make_row("thm-n5", "fourier-support-preserved", std::nan(""), std::nan(""), support ? 1.0 : 0.0, 1.0, support));
  }
  return rep;
}

}  // namespace symplecta
