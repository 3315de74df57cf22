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

#include <cmath>

#include "symplecta/calculus.hpp"
#include "symplecta/families.hpp"
#include "symplecta/report.hpp"
#include "symplecta/spaces.hpp"

namespace symplecta {

struct SchattenReport {
  double p = 1.0;
  double norm = 0.0;
  std::vector<double> singular_values;
};

inline SchattenReport schatten_norm(const CMat& A, double p) {
  if (!(p >= 1.0)) throw ArgumentError("Schatten exponent must satisfy 1 <= p <= inf");
  if (!A.allFinite()) throw ArgumentError("operator has non-finite entries");
  SchattenReport r;
  r.p = p;
  Eigen::JacobiSVD<CMat> svd(A);
  const Vec& s = svd.singularValues();
  r.singular_values.assign(s.data(), s.data() + s.size());
  if (s.size() == 0) return r;
  if (std::isinf(p)) {
    r.norm = s[0];
  } else {
    // Scale by s_1 so large p cannot overflow.
    double s1 = s[0], acc = 0.0;
    if (s1 == 0.0) return r;
    for (Eigen::Index i = 0; i < s.size(); ++i) acc += std::pow(s[i] / s1, p);
    r.norm = s1 * std::pow(acc, 1.0 / p);
  }
  return r;
}

inline SchattenReport schatten_norm(const OperatorMatrix& A, double p) { return schatten_norm(A.entries, p); }

// |G| = (G*G)^{1/2} and |G*| = (GG*)^{1/2} from one singular value decomposition.
inline std::pair<CMat, CMat> polar_absolutes(const CMat& G) {
  Eigen::JacobiSVD<CMat> svd(G, Eigen::ComputeFullU | Eigen::ComputeFullV);
  CVec s = svd.singularValues().cast<cplx>();
  CMat absG = svd.matrixV() * s.asDiagonal() * svd.matrixV().adjoint();
  CMat absGs = svd.matrixU() * s.asDiagonal() * svd.matrixU().adjoint();
  return {absG, absGs};
}

// b{G} = int b(xi) U(xi) G U(-xi) d^sigma xi with U(xi) = W~_std(phi S^{-1} xi).  The sum
// runs over the lattice zeta = phi S^{-1} xi, where xi = phi^sigma zeta and
// d^sigma xi = (det S)^{1/2} d^sigma zeta.  `bz` holds b(phi^sigma zeta) on the phase grid.
inline CMat kato_synthesis_lattice(const RepContext& ctx, const GridFunction& bz, const CMat& G) {
  check_symbol_grid(ctx, bz);
  const ConfigGrid& cfg = ctx.config;
  if (G.rows() != cfg.M || G.cols() != cfg.M) throw ArgumentError("G does not match the configuration grid");
  const Grid& g = bz.grid;
  const double scale = std::sqrt(ctx.detS) * g.weight();
  CMat out = CMat::Zero(cfg.M, cfg.M);
  std::vector<long> m;
  for (std::int64_t i = 0; i < g.size(); ++i) {
    if (bz[i] == cplx(0.0)) continue;
    Vec zeta = coords(g, i);
    lattice_coords(cfg.h, Vec(zeta.head(cfg.n)), m);
    Monomial w = weyl_monomial(cfg, m, zeta.tail(cfg.n));
    const cplx c = bz[i] * scale;
    for (std::int64_t j = 0; j < cfg.M; ++j) {
      const cplx pj = c * w.phase[j];
      const std::int64_t sj = w.src[j];
      for (std::int64_t k = 0; k < cfg.M; ++k) out(j, k) += pj * std::conj(w.phase[k]) * G(sj, w.src[k]);
    }
  }
  return out;
}

// b o phi^sigma, the weights of the lattice form.
inline GridFunction kato_weights(const RepContext& ctx, const GridFunction& b) {
  check_symbol_grid(ctx, b);
  return pullback(symplectic_adjoint(ctx.space, ctx.phi), b);
}

// An analytically given b is evaluated at the lattice points themselves.
inline GridFunction kato_weights(const RepContext& ctx, const PhaseFn& b) {
  Grid g = ctx.config.phase();
  Mat A = symplectic_adjoint(ctx.space, ctx.phi);
  return sample(g, [&](const Vec& zeta) { return b(A * zeta); });
}

inline OperatorMatrix kato_synthesis(const RepContext& ctx, const GridFunction& b, const OperatorMatrix& G) {
  return {kato_synthesis_lattice(ctx, kato_weights(ctx, b), G.entries), "kato_synthesis"};
}

inline OperatorMatrix kato_synthesis(const RepContext& ctx, const PhaseFn& b, const OperatorMatrix& G) {
  return {kato_synthesis_lattice(ctx, kato_weights(ctx, b), G.entries), "kato_synthesis"};
}

// ||b||_{L^p(W, d^sigma)} evaluated with the same quadrature as kato_synthesis.
inline double kato_lp_norm(const RepContext& ctx, const GridFunction& b, double p) {
  GridFunction bz = kato_weights(ctx, b);
  return lp_norm(bz, p, std::sqrt(ctx.detS) * bz.grid.weight());
}

struct IdentityResidual {
  double direct = 0.0;
  double swapped = 0.0;
};

// Op(b *_sigma c) against int b U Op(c) U* and int c U Op(b) U*.
inline IdentityResidual kato_identity_residual(const RepContext& ctx, const GridFunction& b, const GridFunction& c) {
  CMat lhs = quantize_T(ctx, sigma_convolve(b, c)).entries;
  CMat r1 = kato_synthesis(ctx, b, quantize_T(ctx, c)).entries;
  CMat r2 = kato_synthesis(ctx, c, quantize_T(ctx, b)).entries;
  return {rel_frobenius(r1, lhs), rel_frobenius(r2, lhs)};
}

// Op(h(D_sigma)(b *_sigma c)) against int b U Op(h(D_sigma) c) U*.
inline double multiplier_identity_residual(const RepContext& ctx, const GridFunction& b, const GridFunction& c,
                                           const PhaseFn& h) {
  CMat lhs = quantize_T(ctx, apply_multiplier(h, sigma_convolve(b, c))).entries;
  CMat rhs = kato_synthesis(ctx, b, quantize_T(ctx, apply_multiplier(h, c))).entries;
  return rel_frobenius(rhs, lhs);
}

// Largest |<phi, U(xi) Op(a) U(-xi) psi> - (a *_sigma w^)(-xi)| relative to the largest
// value, with w(eta) = <phi, W_{sigma,T}(eta) psi>.  The points xi = phi^sigma zeta
// inside the box are those where U(xi) = W~_std(zeta) is a lattice operator.
inline double translation_covariance_residual(const RepContext& ctx, const GridFunction& a, const CVec& phiv,
                                              const CVec& psiv) {
  check_symbol_grid(ctx, a);
  const Grid& g = a.grid;
  const ConfigGrid& cfg = ctx.config;
  CMat A = quantize_T(ctx, a).entries;
  GridFunction conv = sigma_convolve(a, symplectic_fourier(matrix_coefficient(ctx, phiv, psiv)));
  BandLimited rhs(conv);
  Mat Phs = symplectic_adjoint(ctx.space, ctx.phi);
  double err = 0.0, peak = 0.0;
  std::vector<long> m;
  for (std::int64_t i = 0; i < g.size(); ++i) {
    Vec zeta = coords(g, i);
    Vec xi = Phs * zeta;
    if (outside_box(g, Vec(xi / g.h))) continue;
    lattice_coords(cfg.h, Vec(zeta.head(cfg.n)), m);
    CMat U = weyl_monomial(cfg, m, zeta.tail(cfg.n)).dense();
    cplx lhs = inner(cfg, phiv, CVec(U * (A * (U.adjoint() * psiv))));
    // Both sides are periodic on the phase torus, so lattice points wrap.
    std::vector<long> t;
    cplx r;
    if (lattice_coords(g.h, Vec(-xi), t)) {
      std::vector<int> c(t.begin(), t.end());
      r = conv[flatten(g, c)];
    } else {
      r = rhs.at(-xi);
    }
    err = std::max(err, std::abs(lhs - r));
    peak = std::max(peak, std::abs(r));
  }
  return peak > 0.0 ? err / peak : err;
}

inline void check_positive_semidefinite(const CMat& A, const char* name) {
  const double scale = std::max(1.0, A.norm());
  if ((A - A.adjoint()).norm() > 1e-9 * scale) throw ArgumentError(std::string(name) + " is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (A + A.adjoint()), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9 * scale)
    throw ArgumentError(std::string(name) + " is not positive semidefinite");
}

// max over random unit (u, v) of |(u, Tm v)|^2 - (u, A u)(v, B v), clamped at 0 and
// divided by ||A|| ||B||.
inline double majorization_residual(const CMat& Tm, const CMat& A, const CMat& B, int samples, Rng& rng) {
  const auto M = Tm.rows();
  if (Tm.cols() != M || A.rows() != M || A.cols() != M || B.rows() != M || B.cols() != M)
    throw ArgumentError("operators have mismatched sizes");
  check_positive_semidefinite(A, "A");
  check_positive_semidefinite(B, "B");
  const double scale = std::max(A.operatorNorm(), 1e-300) * std::max(B.operatorNorm(), 1e-300);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    CVec u = rng.complex_vec(static_cast<int>(M)), v = rng.complex_vec(static_cast<int>(M));
    u /= u.norm();
    v /= v.norm();
    double lhs = std::norm(u.dot(Tm * v));
    double rhs = u.dot(A * u).real() * v.dot(B * v).real();
    worst = std::max(worst, lhs - rhs);
  }
  return std::max(worst, 0.0) / scale;
}

}  // namespace symplecta
