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

#include <map>
#include <memory>
#include <mutex>

#include "symplecta/cocycle.hpp"
#include "symplecta/grid.hpp"

namespace symplecta {

// Configuration-space grid: the discretized L^2(V) with M = N^n states.
struct ConfigGrid {
  int n = 1;
  int N = 32;
  double h = 0.0;
  std::int64_t M = 0;

  Grid box() const { return make_box(n, N); }
  Grid phase() const { return make_grid(n, N); }
};

inline ConfigGrid make_config(int n, int N) {
  Grid g = make_grid(n, N);
  return {n, N, g.h, ipow(N, n)};
}

inline ConfigGrid config_of(const Grid& phase) { return make_config(phase.n(), phase.N); }

// <u, v> = h^n sum conj(u_j) v_j.
inline cplx inner(const ConfigGrid& cfg, const CVec& u, const CVec& v) {
  return u.dot(v) * std::pow(cfg.h, cfg.n);
}

inline double state_norm(const ConfigGrid& cfg, const CVec& u) { return std::sqrt(inner(cfg, u, u).real()); }

// Gaussian state e^{-|x - c|^2 / (2 s^2) + i <k, x>} sampled on the configuration grid.
inline CVec gaussian_state(const ConfigGrid& cfg, double s = 1.0, const Vec& c = Vec(), const Vec& k = Vec()) {
  Grid b = cfg.box();
  CVec v(cfg.M);
  for (std::int64_t j = 0; j < cfg.M; ++j) {
    Vec x = coords(b, j);
    Vec d = c.size() ? Vec(x - c) : x;
    double ph = k.size() ? k.dot(x) : 0.0;
    v[j] = std::exp(-0.5 * d.squaredNorm() / (s * s) + kI * ph);
  }
  return v;
}

// A lattice Weyl operator acts as (W v)_j = phase_j v_{src_j}.
struct Monomial {
  std::vector<std::int64_t> src;
  std::vector<cplx> phase;

  CMat dense() const {
    const auto M = static_cast<Eigen::Index>(src.size());
    CMat A = CMat::Zero(M, M);
    for (Eigen::Index j = 0; j < M; ++j) A(j, src[j]) = phase[j];
    return A;
  }
};

inline bool lattice_coords(double h, const Vec& v, std::vector<long>& out, double tol = 1e-9) {
  out.resize(v.size());
  for (Eigen::Index a = 0; a < v.size(); ++a) {
    double t = v[a] / h;
    double r = std::round(t);
    if (std::abs(t - r) > tol) return false;
    out[a] = static_cast<long>(r);
  }
  return true;
}

// Standard Weyl operator at xi = (y, p) for a lattice translation y = h m:
// (W v)(x) = e^{i <x - y/2, p>} v(x - y).
inline Monomial weyl_monomial(const ConfigGrid& cfg, const std::vector<long>& m, const Vec& p) {
  Grid b = cfg.box();
  Monomial w;
  w.src.resize(cfg.M);
  w.phase.resize(cfg.M);
  std::vector<long> l;
  bool lattice_p = lattice_coords(cfg.h, p, l);
  std::vector<int> src(cfg.n);
  for (std::int64_t j = 0; j < cfg.M; ++j) {
    auto c = unflatten(b, j);
    double angle = 0.0;
    if (lattice_p) {
      long long num = 0;
      const long long twoN = 2LL * cfg.N;
      for (int a = 0; a < cfg.n; ++a) num += ((2LL * c[a] - m[a]) * l[a]) % twoN;
      num = ((num % twoN) + twoN) % twoN;
      angle = 2.0 * kPi * static_cast<double>(num) / static_cast<double>(twoN);
    } else {
      for (int a = 0; a < cfg.n; ++a) angle += (cfg.h * c[a] - 0.5 * cfg.h * m[a]) * p[a];
    }
    for (int a = 0; a < cfg.n; ++a) src[a] = static_cast<int>(c[a] - m[a]);
    w.src[j] = flatten(b, src);
    w.phase[j] = std::polar(1.0, angle);
  }
  return w;
}

// Dirichlet-type kernel sum_{l=-N/2}^{N/2-1} e^{2 pi i l t / N}.
inline cplx dirichlet(double t, int N) {
  cplx s = 0.0;
  for (int l = -N / 2; l < N / 2; ++l) s += std::exp(kI * (2.0 * kPi * l * t / N));
  return s;
}

inline CMat weyl_standard(const ConfigGrid& cfg, const Vec& xi) {
  if (xi.size() != 2 * cfg.n) throw ArgumentError("phase-space point has wrong size");
  Vec y = xi.head(cfg.n), p = xi.tail(cfg.n);
  std::vector<long> m;
  if (lattice_coords(cfg.h, y, m)) return weyl_monomial(cfg, m, p).dense();
  // Off-lattice translation: M_{p/2} B_y M_{p/2}, B_y the band-limited shift.
  Grid b = cfg.box();
  std::vector<std::vector<cplx>> D(cfg.n, std::vector<cplx>(2 * cfg.N));
  for (int a = 0; a < cfg.n; ++a)
    for (int d = -cfg.N; d < cfg.N; ++d) D[a][d + cfg.N] = dirichlet(d - y[a] / cfg.h, cfg.N) / double(cfg.N);
  std::vector<cplx> half(cfg.M);
  std::vector<std::vector<int>> idx(cfg.M);
  for (std::int64_t j = 0; j < cfg.M; ++j) {
    idx[j] = unflatten(b, j);
    half[j] = std::exp(0.5 * kI * coords(b, j).dot(p));
  }
  CMat A(cfg.M, cfg.M);
  for (std::int64_t j = 0; j < cfg.M; ++j)
    for (std::int64_t k = 0; k < cfg.M; ++k) {
      cplx v = half[j] * half[k];
      for (int a = 0; a < cfg.n; ++a) v *= D[a][idx[j][a] - idx[k][a] + cfg.N];
      A(j, k) = v;
    }
  return A;
}

struct RepContext {
  SymplecticSpace space;
  Mat T, S, phi;
  double detS = 0.0;
  ConfigGrid config;

  struct Cache {
    std::mutex lock;
    std::map<std::vector<long long>, std::shared_ptr<const CMat>> entries;
  };
  std::shared_ptr<Cache> cache = std::make_shared<Cache>();

  MultiplierContext multiplier() const { return {space, T, S}; }
};

inline RepContext build_rep_context(const SymplecticSpace& sp, const Mat& T, const ConfigGrid& cfg) {
  check_map(sp, T);
  if (sp.n != cfg.n) throw ArgumentError("configuration grid does not match the symplectic space");
  GateResult gate = nondegeneracy_gate(sp, T);
  if (!gate.nondegenerate)
    throw GateError("T + T^sigma is singular; kernel witness " + format_vec(*gate.kernel_witness),
                    *gate.kernel_witness);
  RepContext ctx;
  ctx.space = sp;
  ctx.T = T;
  ctx.S = gate.S;
  ctx.detS = gate.detS;
  ctx.phi = factor_sigma_symmetric(sp, gate.S);
  ctx.config = cfg;
  if (max_abs(ctx.phi.transpose() * sp.J * ctx.phi - sp.J * ctx.S) > 1e-9)
    throw ArgumentError("normalizing map does not satisfy phi^T J phi = J S");
  return ctx;
}

inline std::vector<long long> cache_key(const Vec& xi) {
  std::vector<long long> k(xi.size());
  for (Eigen::Index a = 0; a < xi.size(); ++a) k[a] = std::llround(xi[a] * 1e12);
  return k;
}

// W~_{sigma,T}(xi) = W~_std(phi xi).
inline std::shared_ptr<const CMat> weyl_tilde_shared(const RepContext& ctx, const Vec& xi) {
  auto key = cache_key(xi);
  {
    std::lock_guard<std::mutex> g(ctx.cache->lock);
    auto it = ctx.cache->entries.find(key);
    if (it != ctx.cache->entries.end()) return it->second;
  }
  auto U = std::make_shared<const CMat>(weyl_standard(ctx.config, ctx.phi * xi));
  std::lock_guard<std::mutex> g(ctx.cache->lock);
  return ctx.cache->entries.emplace(std::move(key), U).first->second;
}

inline CMat weyl_tilde(const RepContext& ctx, const Vec& xi) { return *weyl_tilde_shared(ctx, xi); }

inline cplx lambda_phase(const RepContext& ctx, const Vec& xi) {
  return std::exp(-0.5 * kI * sigma_eval(ctx.space, xi, ctx.T * xi));
}

inline CMat weyl_W(const RepContext& ctx, const Vec& xi) { return lambda_phase(ctx, xi) * weyl_tilde(ctx, xi); }

inline CMat u_conjugator(const RepContext& ctx, const Vec& xi) {
  return weyl_tilde(ctx, ctx.S.partialPivLu().solve(xi));
}

inline CMat field_generator(const RepContext& ctx, const Vec& xi, double t_step) {
  if (!(t_step > 0.0 && t_step <= 1e-3)) throw ArgumentError("t_step must lie in (0, 1e-3]");
  CMat A = weyl_standard(ctx.config, ctx.phi * (t_step * xi));
  CMat B = weyl_standard(ctx.config, ctx.phi * (-t_step * xi));
  return (A - B) / (2.0 * kI * t_step);
}

// Ambiguity function xi -> <phi_v, W_{sigma,T}(xi) psi_v> on the phase grid.
inline GridFunction matrix_coefficient(const RepContext& ctx, const CVec& phiv, const CVec& psiv) {
  Grid g = ctx.config.phase();
  if (phiv.size() != ctx.config.M || psiv.size() != ctx.config.M)
    throw ArgumentError("state vectors do not match the configuration grid");
  GridFunction out = zeros(g);
  for (std::int64_t i = 0; i < g.size(); ++i) {
    Vec xi = coords(g, i);
    CVec w = weyl_standard(ctx.config, ctx.phi * xi) * psiv;
    out[i] = lambda_phase(ctx, xi) * inner(ctx.config, phiv, w);
  }
  return out;
}

// W~_std(zeta) v without forming the matrix when the translation is on the lattice.
inline CVec weyl_apply(const ConfigGrid& cfg, const Vec& zeta, const CVec& v) {
  std::vector<long> m;
  if (!lattice_coords(cfg.h, Vec(zeta.head(cfg.n)), m)) return weyl_standard(cfg, zeta) * v;
  Monomial w = weyl_monomial(cfg, m, zeta.tail(cfg.n));
  CVec out(v.size());
  for (Eigen::Index j = 0; j < v.size(); ++j) out[j] = w.phase[j] * v[w.src[j]];
  return out;
}

// sum_xi |<phi_v, U(xi) psi_v>|^2 w over the phase grid.
inline double orthogonality_integral(const RepContext& ctx, const CVec& phiv, const CVec& psiv) {
  Grid g = ctx.config.phase();
  Mat A = ctx.phi * ctx.S.inverse();
  double s = 0.0;
  for (std::int64_t i = 0; i < g.size(); ++i)
    s += std::norm(inner(ctx.config, phiv, weyl_apply(ctx.config, A * coords(g, i), psiv)));
  return s * g.weight();
}

inline double unitarity_defect(const CMat& U) {
  return max_abs(CMat(U.adjoint() * U) - CMat::Identity(U.rows(), U.cols()));
}

}  // namespace symplecta
