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

#include <numeric>
#include <thread>

#include "symplecta/grid.hpp"
#include "symplecta/jet.hpp"

namespace symplecta {

// Functions on R^d sampled on make_box(d, N) carry Lebesgue weight h^d; the
// frequency grid coincides with the spatial one (spacing 2 pi / (N h) = h).

// u^(zeta) = h^d sum_x e^{-i <x, zeta>} u(x).
inline GridFunction fourier(const GridFunction& u) {
  GridFunction F = u;
  centered_dft_all(F.values, u.grid.dim, u.grid.N, -1);
  const double s = u.grid.lebesgue();
  for (auto& v : F.values) v *= s;
  F.provenance.clear();
  return F;
}

// u(x) = (2 pi)^{-d} h^d sum_zeta e^{i <x, zeta>} u^(zeta).
inline GridFunction inverse_fourier(const GridFunction& F) {
  GridFunction u = F;
  centered_dft_all(u.values, F.grid.dim, F.grid.N, +1);
  const double s = F.grid.lebesgue() * std::pow(2.0 * kPi, -F.grid.dim);
  for (auto& v : u.values) v *= s;
  u.provenance.clear();
  return u;
}

inline GridFunction fourier_multiplier(const PhaseFn& m, const GridFunction& u) {
  GridFunction F = fourier(u);
  for (std::int64_t i = 0; i < F.size(); ++i) F[i] *= m(coords(F.grid, i));
  return inverse_fourier(F);
}

inline double lebesgue_norm(const GridFunction& u, double p) { return lp_norm(u, p, u.grid.lebesgue()); }

inline double weighted_power_norm(const std::vector<double>& a, double p, double weight) {
  if (std::isinf(p)) return a.empty() ? 0.0 : *std::max_element(a.begin(), a.end());
  double s = 0.0;
  for (double v : a) s += std::pow(v, p);
  return std::pow(s * weight, 1.0 / p);
}

inline void check_exponent(double p) {
  if (!(p >= 1.0)) throw ArgumentError("exponent must satisfy 1 <= p <= inf");
}

struct WindowSpec {
  SymbolSpec symbol;
};

inline WindowSpec gaussian_window(int d, double variance = 1.0) {
  WindowSpec w;
  w.symbol.covariance = variance * Mat::Identity(d, d);
  return w;
}

inline PhaseFn window_function(const WindowSpec& w, int d) {
  if (w.symbol.kind != SymbolKind::gaussian && w.symbol.kind != SymbolKind::hermite_gaussian)
    throw ArgumentError("windows must be Gaussian or Hermite-Gaussian");
  if (w.symbol.amplitude == 0.0) throw ArgumentError("window is zero");
  return symbol_function(w.symbol, d);
}

// |||u|||_{M^{p,q}, chi} = || xi -> || chi(D - xi) u ||_{L^p} ||_{L^q}.
inline double modulation_norm(const GridFunction& u, const WindowSpec& window, double p, double q) {
  check_exponent(p);
  check_exponent(q);
  const Grid& g = u.grid;
  PhaseFn chi = window_function(window, g.dim);
  // chi(zeta_i - zeta_k) depends only on the unwrapped index difference.
  const int span = 2 * g.N - 1;
  const std::int64_t nd = ipow(span, g.dim);
  std::vector<cplx> table(nd);
  double chimax = 0.0;
  for (std::int64_t t = 0; t < nd; ++t) {
    Vec z(g.dim);
    std::int64_t rest = t;
    for (int a = g.dim - 1; a >= 0; --a) {
      z[a] = g.h * static_cast<double>(rest % span - (g.N - 1));
      rest /= span;
    }
    table[t] = chi(z);
    chimax = std::max(chimax, std::abs(table[t]));
  }
  if (chimax == 0.0) throw ArgumentError("window is zero on the grid");
  std::vector<std::vector<int>> idx(g.size());
  for (std::int64_t i = 0; i < g.size(); ++i) {
    idx[i].resize(g.dim);
    std::int64_t rest = i;
    for (int a = g.dim - 1; a >= 0; --a) {
      idx[i][a] = static_cast<int>(rest % g.N);
      rest /= g.N;
    }
  }
  GridFunction U = fourier(u);
  double umax = 0.0;
  for (auto v : U.values) umax = std::max(umax, std::abs(v));
  std::vector<double> slice(g.size(), 0.0);
  if (umax == 0.0) return 0.0;
  const double cut = 1e-15 * umax * chimax;
  auto work = [&](std::int64_t k0, std::int64_t stride) {
    GridFunction m = zeros(g);
    for (std::int64_t k = k0; k < g.size(); k += stride) {
      double mmax = 0.0;
      for (std::int64_t i = 0; i < g.size(); ++i) {
        std::int64_t t = 0;
        for (int a = 0; a < g.dim; ++a) t = t * span + (idx[i][a] - idx[k][a] + g.N - 1);
        m[i] = table[t] * U[i];
        mmax = std::max(mmax, std::abs(m[i]));
      }
      if (mmax <= cut) continue;
      if (p == 2.0) {
        double s = 0.0;
        for (auto v : m.values) s += std::norm(v);
        slice[k] = std::sqrt(s * g.lebesgue() * std::pow(2.0 * kPi, -g.dim));
      } else {
        slice[k] = lebesgue_norm(inverse_fourier(m), p);
      }
    }
  };
  const std::int64_t threads =
      g.size() < 256 ? 1 : std::max<std::int64_t>(1, std::min<std::int64_t>(8, std::thread::hardware_concurrency()));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::int64_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  return weighted_power_norm(slice, q, g.lebesgue());
}

// T_A acts on the last n axes through the Fourier multiplier e^{-i <A^{-1} zeta, zeta> / 2}.
inline GridFunction chirp_TA(const Mat& A, const GridFunction& u) {
  const Grid& g = u.grid;
  const int n = static_cast<int>(A.rows());
  if (A.cols() != n || n < 1 || n > g.dim) throw ArgumentError("chirp matrix has wrong size");
  if (max_abs(A - A.transpose()) > 1e-12) throw ArgumentError("chirp matrix is not symmetric");
  Eigen::JacobiSVD<Mat> svd(A);
  if (svd.singularValues()[n - 1] <= 1e-12 * std::max(1.0, svd.singularValues()[0]))
    throw ArgumentError("chirp matrix is singular");
  Mat Ainv = A.inverse();
  std::vector<int> axes;
  for (int a = g.dim - n; a < g.dim; ++a) axes.push_back(a);
  GridFunction out = u;
  centered_dft(out.values, g.dim, g.N, axes, -1);
  for (std::int64_t i = 0; i < out.size(); ++i) {
    Vec z = coords(g, i).tail(n);
    out[i] *= std::exp(-0.5 * kI * z.dot(Ainv * z));
  }
  centered_dft(out.values, g.dim, g.N, axes, +1);
  const double s = std::pow(static_cast<double>(g.N), -n);
  for (auto& v : out.values) v *= s;
  out.provenance.clear();
  return out;
}

struct DilationResult {
  double measured = 0.0;
  double bound_shape = 0.0;
};

inline double conjugate_exponent(double q) {
  if (std::isinf(q)) return 1.0;
  if (q == 1.0) return kInf;
  return q / (q - 1.0);
}

inline DilationResult dilation_ratio(const GridFunction& u, const Mat& lambda, const WindowSpec& window, double p,
                                     double q) {
  const int d = u.grid.dim;
  if (lambda.rows() != d || lambda.cols() != d) throw ArgumentError("dilation has wrong size");
  double det = lambda.determinant();
  if (std::abs(det) <= 1e-12) throw ArgumentError("dilation is singular");
  GridFunction ul = pullback(lambda, u, SampleMode::resampled);
  DilationResult r;
  r.measured = modulation_norm(ul, window, p, q) / modulation_norm(u, window, p, q);
  double e = -(std::isinf(p) ? 0.0 : 1.0 / p) - 1.0 / conjugate_exponent(q);
  Eigen::JacobiSVD<Mat> svd(lambda);
  r.bound_shape = std::pow(std::abs(det), e) * std::pow(1.0 + svd.singularValues()[0], d);
  return r;
}

// k(xi) = scale * prod_j <Pr_j xi>^{t_j} over consecutive coordinate blocks.
struct WeightSpec {
  std::vector<std::pair<int, double>> blocks;
  double scale = 1.0;

  int dim() const {
    int d = 0;
    for (auto& b : blocks) d += b.first;
    return d;
  }
  // k(xi + eta) <= C <xi>^N k(eta), from Peetre's inequality per block.
  double C() const {
    double c = 1.0;
    for (auto& b : blocks) c *= std::pow(2.0, std::abs(b.second) / 2.0);
    return c;
  }
  double Npow() const {
    double s = 0.0;
    for (auto& b : blocks) s += std::abs(b.second);
    return s;
  }
};

inline WeightSpec make_weight(std::vector<std::pair<int, double>> blocks, double scale = 1.0) {
  if (blocks.empty()) throw ArgumentError("weight needs at least one block");
  for (auto& b : blocks)
    if (b.first < 1) throw ArgumentError("weight block dimension must be positive");
  if (!(scale > 0.0)) throw ArgumentError("weight scale must be positive");
  return {std::move(blocks), scale};
}

inline double weight_value(const WeightSpec& k, const Vec& xi);
inline double moderate_check(const WeightSpec& k, int samples, Rng& rng, double spread);

// Builds the weight and confirms its moderateness constants on 10^4 samples.
inline WeightSpec make_checked_weight(std::vector<std::pair<int, double>> blocks, double scale = 1.0) {
  WeightSpec k = make_weight(std::move(blocks), scale);
  Rng rng(0x5eedULL);
  double worst = moderate_check(k, 10000, rng, 10.0);
  if (worst > 1.0 + 1e-12) throw ArgumentError("weight violates its moderateness constants");
  return k;
}

inline double japanese(const Vec& x) { return std::sqrt(1.0 + x.squaredNorm()); }

inline double weight_value(const WeightSpec& k, const Vec& xi) {
  double v = k.scale;
  int off = 0;
  for (auto& b : k.blocks) {
    v *= std::pow(japanese(xi.segment(off, b.first)), b.second);
    off += b.first;
  }
  return v;
}

// Largest observed k(xi + eta) / (C <xi>^N k(eta)) over random pairs; <= 1 confirms
// the cached moderateness constants.
inline double moderate_check(const WeightSpec& k, int samples, Rng& rng, double spread) {
  const int d = k.dim();
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    Vec xi(d), eta(d);
    for (int a = 0; a < d; ++a) {
      xi[a] = spread * rng.normal();
      eta[a] = spread * rng.normal();
    }
    double r = weight_value(k, xi + eta) / (k.C() * std::pow(japanese(xi), k.Npow()) * weight_value(k, eta));
    worst = std::max(worst, r);
  }
  return worst;
}

inline double sobolev_k_norm(const GridFunction& u, const WeightSpec& k, double p) {
  check_exponent(p);
  if (k.dim() != u.grid.dim) throw ArgumentError("weight dimension does not match the grid");
  return lebesgue_norm(fourier_multiplier([&](const Vec& z) { return cplx(weight_value(k, z)); }, u), p);
}

// ||1/k||_{L^q(R^d)} in closed form: prod_j (pi^{n_j/2} Gamma(q t_j/2 - n_j/2) / Gamma(q t_j/2))^{1/q} / scale.
inline double inverse_weight_norm(const WeightSpec& k, double q) {
  check_exponent(q);
  double v = 1.0 / k.scale;
  for (size_t j = 0; j < k.blocks.size(); ++j) {
    auto [nj, tj] = k.blocks[j];
    if (std::isinf(q)) {
      if (tj < 0.0)
        throw PreconditionError("1/k is unbounded on subspace " + std::to_string(j + 1), static_cast<int>(j + 1));
      continue;
    }
    if (!(q * tj > nj))
      throw PreconditionError("1/k is not in L^q: q t_" + std::to_string(j + 1) + " <= dim V_" + std::to_string(j + 1),
                              static_cast<int>(j + 1));
    double a = q * tj / 2.0;
    double I = std::pow(kPi, nj / 2.0) * std::exp(std::lgamma(a - nj / 2.0) - std::lgamma(a));
    v *= std::pow(I, 1.0 / q);
  }
  return v;
}

// Jet of 1/k at xi, truncated at total degree K.
inline Jet inverse_weight_jet(const WeightSpec& k, const MultiIndexSet& set, const Vec& xi) {
  Jet r(&set, 1.0 / k.scale);
  int off = 0;
  for (auto& b : k.blocks) {
    Jet s(&set, 1.0);
    for (int a = off; a < off + b.first; ++a) {
      Jet x = Jet::variable(&set, a, xi[a]);
      s = s + x * x;
    }
    r = r * s.pow(-b.second / 2.0);
    off += b.first;
  }
  return r;
}

struct EmbeddingBound {
  double bound = 0.0;
  double prefactor = 0.0;      // (2 pi)^{-d} ||<.>^{-2r}||_{L^1}
  double window_sum = 0.0;     // sum_alpha C_alpha ||M_k d^alpha chi||_{L^1}
  double inverse_weight = 0.0; // ||1/k||_{L^q}
  int r = 0;
};

// Explicit constant of the embedding H^k_p -> M^{p,q}.  The window integrals are
// grid sums on `g`; D_delta = sup |d^delta(1/k)| k is taken over a 4x refined grid.
inline EmbeddingBound embedding_bound(const WeightSpec& k, const WindowSpec& window, double q, const Grid& g) {
  const int d = k.dim();
  if (g.dim != d) throw ArgumentError("window grid does not match the weight dimension");
  EmbeddingBound out;
  out.inverse_weight = inverse_weight_norm(k, q);
  const int r = d / 2 + 1, K = 2 * r;
  out.r = r;
  out.prefactor = std::pow(2.0 * kPi, -d) * std::pow(kPi, d / 2.0) * std::exp(std::lgamma(r - d / 2.0) - std::lgamma(r));
  MultiIndexSet set(d, K);
  const int M = set.size();
  // D_delta over the refined grid.
  std::vector<double> D(M, 0.0);
  const int Nf = 4 * g.N;
  const double hf = g.h / 4.0;
  const std::int64_t total = ipow(Nf, d);
  for (std::int64_t f = 0; f < total; ++f) {
    Vec xi(d);
    std::int64_t rest = f;
    for (int a = d - 1; a >= 0; --a) {
      xi[a] = hf * (static_cast<double>(rest % Nf) - Nf / 2);
      rest /= Nf;
    }
    Jet j = inverse_weight_jet(k, set, xi);
    double kv = weight_value(k, xi);
    for (int i = 0; i < M; ++i) D[i] = std::max(D[i], std::abs(j.derivative(i)) * kv);
  }
  // (1 - Laplacian)^r = sum_beta c_beta d^beta.
  std::vector<double> c(M, 0.0);
  auto factorial = [](int v) {
    double f = 1.0;
    for (int i = 2; i <= v; ++i) f *= i;
    return f;
  };
  for (int i = 0; i < M; ++i) {
    const auto& beta = set[i];
    bool even = true;
    int m = 0;
    double multi = 1.0;
    for (int v : beta) {
      if (v % 2) even = false;
      m += v / 2;
      multi *= factorial(v / 2);
    }
    if (!even || m > r) continue;
    c[i] = (factorial(r) / (factorial(m) * factorial(r - m))) * (m % 2 ? -1.0 : 1.0) * factorial(m) / multi;
  }
  auto binom = [&](const std::vector<int>& b, const std::vector<int>& a) {
    double v = 1.0;
    for (size_t q2 = 0; q2 < b.size(); ++q2) v *= factorial(b[q2]) / (factorial(a[q2]) * factorial(b[q2] - a[q2]));
    return v;
  };
  // Spectral derivatives of the window on g.
  PhaseFn chi = window_function(window, d);
  GridFunction w = sample(g, chi);
  GridFunction W = fourier(w);
  const double Cm = k.C(), Nm = k.Npow();
  double total_sum = 0.0;
  for (int ia = 0; ia < M; ++ia) {
    const auto& alpha = set[ia];
    double Ca = 0.0;
    for (int ib = 0; ib < M; ++ib) {
      const auto& beta = set[ib];
      bool ge = true;
      std::vector<int> diff(d);
      for (int q2 = 0; q2 < d; ++q2) {
        diff[q2] = beta[q2] - alpha[q2];
        if (diff[q2] < 0) ge = false;
      }
      if (!ge || c[ib] == 0.0) continue;
      Ca += std::abs(c[ib]) * binom(beta, alpha) * D[set.index(diff)];
    }
    if (Ca == 0.0) continue;
    GridFunction dW = W;
    for (std::int64_t i = 0; i < dW.size(); ++i) {
      Vec x = coords(g, i);
      cplx f = 1.0;
      for (int q2 = 0; q2 < d; ++q2) f *= std::pow(kI * x[q2], alpha[q2]);
      dW[i] *= f;
    }
    GridFunction dchi = inverse_fourier(dW);
    double s = 0.0;
    for (std::int64_t i = 0; i < dchi.size(); ++i)
      s += Cm * std::pow(japanese(coords(g, i)), Nm) * std::abs(dchi[i]);
    total_sum += Ca * s * g.lebesgue();
  }
  out.window_sum = total_sum;
  out.bound = out.prefactor * out.window_sum * out.inverse_weight;
  return out;
}

struct SeminormEntry {
  std::vector<int> alpha;
  double value = 0.0;
};

// |a|_{m, alpha} = sup_x <x>^{-m + |alpha|} |d^alpha a(x)| with fourth-order central
// differences, evaluated where the stencil stays inside the box.
inline std::vector<SeminormEntry> symbol_class_seminorms(const GridFunction& a, double m, int max_order) {
  if (max_order < 0 || max_order > 4) throw ArgumentError("max_order must lie in [0, 4]");
  const Grid& g = a.grid;
  const int d = g.dim, N = g.N;
  MultiIndexSet set(d, max_order);
  std::vector<SeminormEntry> out;
  auto diff_axis = [&](const std::vector<cplx>& f, int axis, std::vector<bool>& valid) {
    std::vector<cplx> r(f.size(), 0.0);
    const std::int64_t stride = ipow(N, d - 1 - axis);
    std::vector<bool> nv(f.size(), false);
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(f.size()); ++i) {
      int c = static_cast<int>((i / stride) % N);
      if (c < 2 || c > N - 3) continue;
      bool ok = valid[i - 2 * stride] && valid[i - stride] && valid[i + stride] && valid[i + 2 * stride];
      if (!ok) continue;
      r[i] = (-f[i + 2 * stride] + 8.0 * f[i + stride] - 8.0 * f[i - stride] + f[i - 2 * stride]) / (12.0 * g.h);
      nv[i] = true;
    }
    valid = nv;
    return r;
  };
  for (int ia = 0; ia < set.size(); ++ia) {
    const auto& alpha = set[ia];
    std::vector<cplx> f = a.values;
    std::vector<bool> valid(f.size(), true);
    int order = 0;
    for (int axis = 0; axis < d; ++axis)
      for (int k = 0; k < alpha[axis]; ++k) {
        f = diff_axis(f, axis, valid);
        ++order;
      }
    double sup = 0.0;
    for (std::int64_t i = 0; i < a.size(); ++i)
      if (valid[i]) sup = std::max(sup, std::pow(japanese(coords(g, i)), -m + order) * std::abs(f[i]));
    out.push_back({alpha, sup});
  }
  return out;
}

}  // namespace symplecta
