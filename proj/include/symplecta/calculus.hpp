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

#include "symplecta/weylrep.hpp"

namespace symplecta {

struct OperatorMatrix {
  CMat entries;
  std::string provenance;

  Eigen::Index dim() const { return entries.rows(); }
};

inline std::string operator_text(const OperatorMatrix& A) {
  std::string out = "symplecta-op v1, M=" + std::to_string(A.dim()) + "\n";
  for (Eigen::Index j = 0; j < A.dim(); ++j)
    for (Eigen::Index k = 0; k < A.dim(); ++k) out += complex_row(A.entries(j, k)) + "\n";
  return out;
}

inline void write_operator(const std::string& path, const OperatorMatrix& A) { write_text_file(path, operator_text(A)); }

inline OperatorMatrix parse_operator(const std::string& body) {
  auto lines = split_lines(body);
  if (lines.empty() || lines[0].rfind("symplecta-op v1, M=", 0) != 0)
    throw ArgumentError("missing operator header");
  long M = std::stol(lines[0].substr(19));
  if (M <= 0 || static_cast<long>(lines.size()) != 1 + M * M)
    throw ArgumentError("operator file has " + std::to_string(lines.size() - 1) + " rows, expected M^2");
  OperatorMatrix A{CMat(M, M), "file"};
  for (long j = 0; j < M; ++j)
    for (long k = 0; k < M; ++k) A.entries(j, k) = parse_complex_row(lines[1 + j * M + k]);
  return A;
}

inline OperatorMatrix read_operator(const std::string& path) { return parse_operator(read_text_file(path)); }

inline void check_symbol_grid(const RepContext& ctx, const GridFunction& a) {
  if (a.grid != ctx.config.phase())
    throw ArgumentError("symbol grid (n=" + std::to_string(a.grid.n()) + ", N=" + std::to_string(a.grid.N) +
                        ") does not match the representation context");
}

// sum_zeta c(zeta) W~_std(A zeta) over the phase lattice.  Integer A takes the
// monomial path; any other map falls back to dense matrices.
inline CMat weyl_synthesis(const ConfigGrid& cfg, const Mat& A, const GridFunction& c) {
  const Grid& g = c.grid;
  CMat out = CMat::Zero(cfg.M, cfg.M);
  const bool lattice = is_integer_matrix(A);
  for (std::int64_t i = 0; i < g.size(); ++i) {
    if (c[i] == cplx(0.0)) continue;
    Vec eta = A * coords(g, i);
    if (lattice) {
      std::vector<long> m;
      lattice_coords(cfg.h, Vec(eta.head(cfg.n)), m);
      Monomial w = weyl_monomial(cfg, m, eta.tail(cfg.n));
      for (std::int64_t j = 0; j < cfg.M; ++j) out(j, w.src[j]) += c[i] * w.phase[j];
    } else {
      out += c[i] * weyl_standard(cfg, eta);
    }
  }
  return out;
}

// Op_{sigma,T}(a) = int F_sigma(a)(xi) W_{sigma,T}(xi) d^sigma xi, discretized on
// the lattice zeta = phi xi where W~_std is sampled, so that
// Op = sum_zeta (lambda F_sigma a)(phi^{-1} zeta) W~_std(zeta) w / |det phi|.
// Unimodular lattice phi reduces this to the plain sum over xi.
inline OperatorMatrix quantize_T(const RepContext& ctx, const GridFunction& a) {
  check_symbol_grid(ctx, a);
  GridFunction c = symplectic_fourier(a);
  for (std::int64_t i = 0; i < c.size(); ++i) c[i] *= lambda_phase(ctx, coords(a.grid, i));
  const double w = a.grid.weight() / std::abs(ctx.phi.determinant());
  GridFunction z = pullback(ctx.phi.inverse(), c);
  for (auto& v : z.values) v *= w;
  return {weyl_synthesis(ctx.config, Mat::Identity(a.grid.dim, a.grid.dim), z),
          z.provenance == "resampled" ? "quantize_T;resampled" : "quantize_T"};
}

// Standard Weyl quantization on (W, sigma): sum_zeta F_sigma(b)(zeta) W~_std(zeta) w.
inline OperatorMatrix quantize_standard(const ConfigGrid& cfg, const GridFunction& b) {
  GridFunction c = symplectic_fourier(b);
  const double w = b.grid.weight();
  for (auto& v : c.values) v *= w;
  return {weyl_synthesis(cfg, Mat::Identity(2 * cfg.n, 2 * cfg.n), c), "quantize_standard"};
}

// Op^w~(b) for (W, sigma_S): substituting zeta = phi xi turns the sum over
// F_{sigma_S}(b)(xi) W~(xi) (det S)^{1/2} d^sigma xi into the standard calculus
// applied to b o phi^{-1}.
inline OperatorMatrix quantize_weyl(const RepContext& ctx, const GridFunction& b) {
  check_symbol_grid(ctx, b);
  GridFunction c = pullback(ctx.phi.inverse(), b);
  OperatorMatrix A = quantize_standard(ctx.config, c);
  A.provenance = c.provenance == "resampled" ? "quantize_weyl;resampled" : "quantize_weyl";
  return A;
}

// a^w = (lambda(D_sigma) a) o S with lambda(xi) = e^{-(i/2) sigma(xi, T xi)}.
inline GridFunction lambda_transform(const RepContext& ctx, const GridFunction& a) {
  check_symbol_grid(ctx, a);
  GridFunction m = apply_multiplier([&](const Vec& x) { return lambda_phase(ctx, x); }, a);
  GridFunction out = pullback(ctx.S, m);
  if (out.provenance == "resampled") out.provenance = "resampled-warning";
  return out;
}

inline GridFunction inverse_lambda_transform(const RepContext& ctx, const GridFunction& b) {
  check_symbol_grid(ctx, b);
  GridFunction m = pullback(ctx.S.inverse(), b);
  GridFunction out = apply_multiplier([&](const Vec& x) { return std::conj(lambda_phase(ctx, x)); }, m);
  if (m.provenance == "resampled") out.provenance = "resampled-warning";
  return out;
}

// Kernel route: A[j, k] = K(theta x_j + tau x_k, x_j - x_k) h^n with K the
// partial inverse Fourier transform of a along p, interpolated in x.
inline OperatorMatrix quantize_theta_tau_kernel(const Mat& theta, const Mat& tau, const GridFunction& a) {
  const int n = a.grid.n();
  if (theta.rows() != n || theta.cols() != n || tau.rows() != n || tau.cols() != n)
    throw ArgumentError("theta and tau must be n x n");
  Mat sum = theta + tau;
  Eigen::JacobiSVD<Mat> svd(sum, Eigen::ComputeFullV);
  const Vec& sv = svd.singularValues();
  if (sv[n - 1] <= 1e-10 * std::max(1.0, sv[0]))
    throw GateError("theta + tau is singular", svd.matrixV().col(n - 1));
  ConfigGrid cfg = config_of(a.grid);
  const int N = cfg.N;
  const std::int64_t M = cfg.M;
  // Khat(x, z) = N^{-n} sum_d e^{2 pi i z.d / N} a(x, d), then DFT along x.
  std::vector<cplx> buf = a.values;
  std::vector<int> paxes, xaxes;
  for (int q = 0; q < n; ++q) {
    xaxes.push_back(q);
    paxes.push_back(n + q);
  }
  centered_dft(buf, 2 * n, N, paxes, +1);
  centered_dft(buf, 2 * n, N, xaxes, -1);
  const double scale = std::pow(static_cast<double>(N), -2.0 * n);
  for (auto& v : buf) v *= scale;
  Grid box = cfg.box();
  std::vector<std::vector<int>> idx(M);
  for (std::int64_t j = 0; j < M; ++j) idx[j] = unflatten(box, j);
  CMat A(M, M);
  std::vector<std::vector<cplx>> E(n, std::vector<cplx>(N));
  std::vector<int> zc(n);
  for (std::int64_t j = 0; j < M; ++j)
    for (std::int64_t k = 0; k < M; ++k) {
      for (int q = 0; q < n; ++q) zc[q] = wrap_index(idx[j][q] - idx[k][q], N);
      Vec X(n);
      for (int q = 0; q < n; ++q) {
        double s = 0.0;
        for (int r = 0; r < n; ++r) s += theta(q, r) * idx[j][r] + tau(q, r) * (idx[j][r] - zc[r]);
        X[q] = s;
      }
      for (int q = 0; q < n; ++q)
        for (int l = 0; l < N; ++l) E[q][l] = std::exp(kI * (2.0 * kPi * (l - N / 2) * X[q] / N));
      // buf index: (l_1..l_n, z_1..z_n) in row-major order.
      std::int64_t zoff = 0;
      for (int q = 0; q < n; ++q) zoff = zoff * N + (zc[q] + N / 2);
      cplx s = 0.0;
      if (n == 1) {
        for (int l = 0; l < N; ++l) s += buf[l * N + zoff] * E[0][l];
      } else {
        for (int l0 = 0; l0 < N; ++l0) {
          cplx r = 0.0;
          for (int l1 = 0; l1 < N; ++l1) r += buf[(static_cast<std::int64_t>(l0) * N + l1) * M + zoff] * E[1][l1];
          s += r * E[0][l0];
        }
      }
      A(j, k) = s;
    }
  return {A, "kernel"};
}

// Inverts quantize_T: F_sigma(b o phi^{-1})(zeta) = Tr(W~_std(zeta)^* A) on the
// lattice, then b = (.) o phi and a = inverse_lambda_transform(b).
inline GridFunction recover_weyl_symbol(const RepContext& ctx, const OperatorMatrix& A) {
  const ConfigGrid& cfg = ctx.config;
  if (A.dim() != cfg.M || A.entries.cols() != cfg.M)
    throw ArgumentError("operator dimension does not match the representation context");
  Grid g = cfg.phase();
  GridFunction Fc = zeros(g);
  for (std::int64_t i = 0; i < g.size(); ++i) {
    Vec zeta = coords(g, i);
    std::vector<long> m;
    lattice_coords(cfg.h, Vec(zeta.head(cfg.n)), m);
    Monomial w = weyl_monomial(cfg, m, zeta.tail(cfg.n));
    cplx s = 0.0;
    for (std::int64_t j = 0; j < cfg.M; ++j) s += std::conj(w.phase[j]) * A.entries(j, w.src[j]);
    Fc[i] = s;
  }
  GridFunction c = symplectic_fourier(Fc);
  return pullback(ctx.phi, c);
}

inline GridFunction recover_symbol(const RepContext& ctx, const OperatorMatrix& A) {
  return inverse_lambda_transform(ctx, recover_weyl_symbol(ctx, A));
}

}  // namespace symplecta
