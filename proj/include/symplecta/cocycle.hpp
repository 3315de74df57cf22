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

#include "symplecta/grid.hpp"
#include "symplecta/symplin.hpp"

namespace symplecta {

struct MultiplierContext {
  SymplecticSpace space;
  Mat T;
  Mat S;
};

inline MultiplierContext make_multiplier(const SymplecticSpace& sp, const Mat& T) {
  check_map(sp, T);
  return {sp, T, T + symplectic_adjoint(sp, T)};
}

inline cplx omega(const MultiplierContext& ctx, const Vec& xi, const Vec& eta) {
  return std::exp(kI * sigma_eval(ctx.space, xi, ctx.T * eta));
}

inline cplx omega_tilde(const MultiplierContext& ctx, const Vec& xi, const Vec& eta) {
  return std::exp(0.5 * kI * sigma_eval(ctx.space, xi, ctx.S * eta));
}

// mu(xi) = e^{(i/2) sigma(xi, T xi)}
inline cplx coboundary(const MultiplierContext& ctx, const Vec& xi) {
  return std::exp(0.5 * kI * sigma_eval(ctx.space, xi, ctx.T * xi));
}

inline double cocycle_residual(const MultiplierContext& ctx, const Vec& a, const Vec& b, const Vec& c) {
  return std::abs(omega(ctx, a, b) * omega(ctx, a + b, c) - omega(ctx, a, b + c) * omega(ctx, b, c));
}

inline double coboundary_residual(const MultiplierContext& ctx,
                                  const std::vector<std::pair<Vec, Vec>>& samples) {
  if (samples.empty()) throw ArgumentError("coboundary check needs at least one sample pair");
  double worst = 0.0;
  for (const auto& [xi, eta] : samples) {
    cplx lhs = omega_tilde(ctx, xi, eta) / omega(ctx, xi, eta);
    cplx rhs = coboundary(ctx, xi) * coboundary(ctx, eta) / coboundary(ctx, xi + eta);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

// Separating partner for xi: eta = (J S)^T xi makes sigma(xi, S eta) = |(J S)^T xi|^2,
// then eta is rescaled so that this phase gap equals 0.5.
inline Vec separating_partner(const MultiplierContext& ctx, const Vec& xi) {
  Vec eta = (ctx.space.J * ctx.S).transpose() * xi;
  double gap = sigma_eval(ctx.space, xi, ctx.S * eta);
  if (gap <= 0.0) return Vec::Zero(xi.size());
  return eta * (0.5 / gap);
}

inline double symmetry_defect(const MultiplierContext& ctx, const Vec& xi, const Vec& eta) {
  return std::abs(omega(ctx, xi, eta) - omega(ctx, eta, xi));
}

// (R(xi) f)(eta) = omega(eta, xi) f(eta + xi) on a phase grid, periodic indices.
inline GridFunction regular_representation(const MultiplierContext& ctx, const Vec& xi,
                                           const GridFunction& f) {
  const Grid& g = f.grid;
  if (xi.size() != g.dim || g.dim != ctx.space.dim()) throw ArgumentError("dimension mismatch");
  Vec t = xi / g.h;
  std::vector<int> m(g.dim);
  for (int a = 0; a < g.dim; ++a) {
    if (std::abs(t[a] - std::round(t[a])) > 1e-12)
      throw ArgumentError("xi is not a grid point; use the resampled translate instead");
    m[a] = static_cast<int>(std::lround(t[a]));
  }
  GridFunction out = zeros(g);
  std::vector<int> src(g.dim);
  for (std::int64_t i = 0; i < g.size(); ++i) {
    auto c = unflatten(g, i);
    for (int a = 0; a < g.dim; ++a) src[a] = c[a] + m[a];
    out[i] = omega(ctx, coords(g, i), xi) * f[flatten(g, src)];
  }
  return out;
}

}  // namespace symplecta
