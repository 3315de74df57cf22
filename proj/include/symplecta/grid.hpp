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

#include <memory>
#include <functional>

#include "symplecta/fft.hpp"
#include "symplecta/io.hpp"
#include "symplecta/symplin.hpp"

namespace symplecta {

// Uniform self-dual grid on R^dim with spacing h = sqrt(2 pi / N) and axis
// indices c in [-N/2, N/2).  Phase grids have dim = 2n.
struct Grid {
  int dim = 2;
  int N = 32;
  double h = 0.0;

  int n() const { return dim / 2; }
  std::int64_t size() const { return ipow(N, dim); }
  // d^sigma weight per point for phase grids, (2 pi)^{-dim/2} h^dim = N^{-dim/2}.
  double weight() const { return std::pow(static_cast<double>(N), -0.5 * dim); }
  double lebesgue() const { return std::pow(h, dim); }
  bool operator==(const Grid& o) const { return dim == o.dim && N == o.N; }
  bool operator!=(const Grid& o) const { return !(*this == o); }
};

inline Grid make_box(int d, int N) {
  if (d < 1 || d > 4) throw ArgumentError("grid dimension must be in [1, 4]");
  if (N % 2 != 0 || N < 4 || N > 256)
    throw ArgumentError("N must be even with 4 <= N <= 256, got " + std::to_string(N));
  Grid g{d, N, std::sqrt(2.0 * kPi / N)};
  if (std::abs(g.h * g.h * N - 2.0 * kPi) > 1e-12) throw ArgumentError("grid is not self-dual");
  return g;
}

inline Grid make_grid(int n, int N) {
  if (n != 1 && n != 2) throw ArgumentError("phase grids support n in {1, 2}");
  return make_box(2 * n, N);
}

inline int wrap_index(long c, int N) {
  long m = ((c + N / 2) % N + N) % N;
  return static_cast<int>(m - N / 2);
}

inline std::vector<int> unflatten(const Grid& g, std::int64_t flat) {
  std::vector<int> c(g.dim);
  for (int a = g.dim - 1; a >= 0; --a) {
    c[a] = static_cast<int>(flat % g.N) - g.N / 2;
    flat /= g.N;
  }
  return c;
}

inline std::int64_t flatten(const Grid& g, const std::vector<int>& c) {
  std::int64_t f = 0;
  for (int a = 0; a < g.dim; ++a) f = f * g.N + (wrap_index(c[a], g.N) + g.N / 2);
  return f;
}

inline bool in_box(const Grid& g, const std::vector<long>& c) {
  for (long v : c)
    if (v < -g.N / 2 || v >= g.N / 2) return false;
  return true;
}

inline Vec coords(const Grid& g, std::int64_t flat) {
  auto c = unflatten(g, flat);
  Vec v(g.dim);
  for (int a = 0; a < g.dim; ++a) v[a] = g.h * c[a];
  return v;
}

struct GridFunction {
  Grid grid;
  std::vector<cplx> values;
  std::string provenance;

  std::int64_t size() const { return static_cast<std::int64_t>(values.size()); }
  cplx& operator[](std::int64_t i) { return values[i]; }
  const cplx& operator[](std::int64_t i) const { return values[i]; }
};

using PhaseFn = std::function<cplx(const Vec&)>;

inline GridFunction zeros(const Grid& g) { return {g, std::vector<cplx>(g.size(), 0.0), ""}; }

inline GridFunction sample(const Grid& g, const PhaseFn& f) {
  GridFunction out = zeros(g);
  for (std::int64_t i = 0; i < g.size(); ++i) {
    Vec x = coords(g, i);
    cplx v = f(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw EvaluationError("non-finite value at " + format_vec(x), x);
    out[i] = v;
  }
  return out;
}

inline void check_same_grid(const GridFunction& a, const GridFunction& b) {
  if (a.grid != b.grid) throw ArgumentError("grid mismatch");
}

inline GridFunction operator+(const GridFunction& a, const GridFunction& b) {
  check_same_grid(a, b);
  GridFunction r = a;
  for (std::int64_t i = 0; i < r.size(); ++i) r[i] += b[i];
  r.provenance.clear();
  return r;
}

inline GridFunction operator-(const GridFunction& a, const GridFunction& b) {
  check_same_grid(a, b);
  GridFunction r = a;
  for (std::int64_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  r.provenance.clear();
  return r;
}

inline GridFunction operator*(cplx s, const GridFunction& a) {
  GridFunction r = a;
  for (auto& v : r.values) v *= s;
  r.provenance.clear();
  return r;
}

inline GridFunction pointwise(const GridFunction& a, const GridFunction& b) {
  check_same_grid(a, b);
  GridFunction r = a;
  for (std::int64_t i = 0; i < r.size(); ++i) r[i] *= b[i];
  r.provenance.clear();
  return r;
}

// Weighted L^p norm, sum |f|^p * weight; p = inf gives the max.
inline double lp_norm(const GridFunction& f, double p, double weight) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (auto v : f.values) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (auto v : f.values) s += std::pow(std::abs(v), p);
  return std::pow(s * weight, 1.0 / p);
}

inline double sigma_norm(const GridFunction& f, double p) { return lp_norm(f, p, f.grid.weight()); }

inline double l2_distance(const GridFunction& a, const GridFunction& b) {
  check_same_grid(a, b);
  double s = 0.0;
  for (std::int64_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

inline double l2(const GridFunction& a) {
  double s = 0.0;
  for (auto v : a.values) s += std::norm(v);
  return std::sqrt(s);
}

inline double rel_l2(const GridFunction& a, const GridFunction& b) {
  double d = l2(b);
  return d > 0 ? l2_distance(a, b) / d : l2_distance(a, b);
}

// ---------------------------------------------------------------- symbols

enum class SymbolKind { gaussian, hermite_gaussian, polynomial_gaussian, chirp_gaussian, file };

struct PolyTerm {
  double coeff = 0.0;
  std::vector<int> powers;
};

struct SymbolSpec {
  SymbolKind kind = SymbolKind::gaussian;
  Vec center;
  Mat covariance;
  std::vector<int> hermite;
  std::vector<PolyTerm> poly;
  Mat chirp;
  Vec modulation;
  double amplitude = 1.0;
  std::string path;
};

inline double hermite_phys(int k, double z) {
  double h0 = 1.0, h1 = 2.0 * z;
  if (k == 0) return h0;
  for (int i = 1; i < k; ++i) {
    double h2 = 2.0 * z * h1 - 2.0 * i * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

GridFunction read_grid_function(const std::string& path);

inline PhaseFn symbol_function(const SymbolSpec& spec, int dim) {
  if (spec.kind == SymbolKind::file) throw ArgumentError("file symbols are sampled, not evaluated");
  Vec c = spec.center.size() ? spec.center : Vec::Zero(dim);
  Mat cov = spec.covariance.size() ? spec.covariance : Mat::Identity(dim, dim);
  if (c.size() != dim || cov.rows() != dim || cov.cols() != dim)
    throw ArgumentError("symbol parameters do not match grid dimension " + std::to_string(dim));
  if (max_abs(cov - cov.transpose()) > 1e-12) throw ArgumentError("covariance is not symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> es(cov);
  double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
  if (lo <= 0.0) throw ArgumentError("covariance is not positive definite");
  if (hi / lo > 1e8) throw ArgumentError("covariance is ill-conditioned");
  Mat prec = cov.inverse();
  Mat Linv = Eigen::LLT<Mat>(cov).matrixL().toDenseMatrix().inverse();
  Vec mod = spec.modulation.size() ? spec.modulation : Vec::Zero(dim);
  Mat Q = spec.chirp.size() ? spec.chirp : Mat::Zero(dim, dim);
  if (mod.size() != dim || Q.rows() != dim) throw ArgumentError("modulation/chirp size mismatch");
  SymbolSpec s = spec;
  return [=](const Vec& x) -> cplx {
    Vec y = x - c;
    double g = std::exp(-0.5 * y.dot(prec * y));
    cplx v = s.amplitude * g * std::exp(kI * mod.dot(x));
    switch (s.kind) {
      case SymbolKind::gaussian:
        break;
      case SymbolKind::hermite_gaussian: {
        Vec z = Linv * y;
        for (int a = 0; a < dim && a < static_cast<int>(s.hermite.size()); ++a)
          v *= hermite_phys(s.hermite[a], z[a]);
        break;
      }
      case SymbolKind::polynomial_gaussian: {
        double p = 0.0;
        for (const auto& t : s.poly) {
          double m = t.coeff;
          for (int a = 0; a < dim && a < static_cast<int>(t.powers.size()); ++a)
            m *= std::pow(y[a], t.powers[a]);
          p += m;
        }
        v *= p;
        break;
      }
      case SymbolKind::chirp_gaussian:
        v *= std::exp(0.5 * kI * y.dot(Q * y));
        break;
      case SymbolKind::file:
        break;
    }
    return v;
  };
}

inline GridFunction sample_symbol(const SymbolSpec& spec, const Grid& g) {
  if (spec.kind == SymbolKind::file) {
    GridFunction f = read_grid_function(spec.path);
    if (f.grid != g) throw ArgumentError("file payload does not match the grid");
    return f;
  }
  GridFunction f = sample(g, symbol_function(spec, g.dim));
  double peak = 0.0, edge = 0.0;
  for (std::int64_t i = 0; i < f.size(); ++i) {
    peak = std::max(peak, std::abs(f[i]));
    auto c = unflatten(g, i);
    for (int a = 0; a < g.dim; ++a)
      if (c[a] == -g.N / 2) edge = std::max(edge, std::abs(f[i]));
  }
  if (edge > 1e-12 * std::max(peak, 1e-300)) f.provenance = "truncation-warning";
  return f;
}

inline std::string grid_function_text(const GridFunction& f) {
  std::string out = "symplecta-grid v1, n=" + std::to_string(f.grid.n()) +
                    ", N=" + std::to_string(f.grid.N) + "\n";
  for (auto v : f.values) out += complex_row(v) + "\n";
  return out;
}

inline void write_grid_function(const std::string& path, const GridFunction& f) {
  write_text_file(path, grid_function_text(f));
}

inline GridFunction parse_grid_function(const std::string& body) {
  auto lines = split_lines(body);
  int n = 0, N = 0;
  if (lines.empty() || std::sscanf(lines[0].c_str(), "symplecta-grid v1, n=%d, N=%d", &n, &N) != 2)
    throw ArgumentError("bad grid header");
  Grid g = make_grid(n, N);
  if (static_cast<std::int64_t>(lines.size()) - 1 != g.size())
    throw ArgumentError("grid payload length does not match N^(2n)");
  GridFunction f = zeros(g);
  for (std::int64_t i = 0; i < g.size(); ++i) f[i] = parse_complex_row(lines[i + 1]);
  return f;
}

inline GridFunction read_grid_function(const std::string& path) {
  return parse_grid_function(read_text_file(path));
}

// ------------------------------------------------------- Fourier machinery

inline void check_phase_grid(const Grid& g) {
  if (g.dim % 2 != 0) throw ArgumentError("phase-space operation on an odd-dimensional grid");
}

// (F_sigma f)(xi) = sum_eta e^{-i sigma(xi, eta)} f(eta) w for the standard form.
// With xi = h(a, b), eta = h(c, d) the phase is 2 pi (c.b - a.d) / N, so
// F_sigma f(a, b) = w G(b, -a) with G the centered DFT.
inline GridFunction symplectic_fourier(const GridFunction& f) {
  check_phase_grid(f.grid);
  const Grid& g = f.grid;
  const int n = g.n();
  std::vector<cplx> G = f.values;
  centered_dft_all(G, g.dim, g.N, -1);
  GridFunction out = zeros(g);
  const double w = g.weight();
  std::vector<int> src(g.dim);
  for (std::int64_t i = 0; i < g.size(); ++i) {
    auto c = unflatten(g, i);
    for (int a = 0; a < n; ++a) {
      src[a] = c[n + a];
      src[n + a] = -c[a];
    }
    out[i] = w * G[flatten(g, src)];
  }
  return out;
}

inline GridFunction apply_multiplier(const PhaseFn& lambda, const GridFunction& f) {
  GridFunction F = symplectic_fourier(f);
  for (std::int64_t i = 0; i < F.size(); ++i) {
    Vec x = coords(F.grid, i);
    cplx l = lambda(x);
    if (!std::isfinite(l.real()) || !std::isfinite(l.imag()))
      throw EvaluationError("multiplier is not finite at " + format_vec(x), x);
    F[i] *= l;
  }
  return symplectic_fourier(F);
}

inline GridFunction apply_multiplier(const GridFunction& lambda, const GridFunction& f) {
  check_same_grid(lambda, f);
  GridFunction F = symplectic_fourier(f);
  for (std::int64_t i = 0; i < F.size(); ++i) {
    if (!std::isfinite(lambda[i].real()) || !std::isfinite(lambda[i].imag())) {
      Vec x = coords(F.grid, i);
      throw EvaluationError("multiplier is not finite at " + format_vec(x), x);
    }
    F[i] *= lambda[i];
  }
  return symplectic_fourier(F);
}

// Band-limited (trigonometric) interpolant with frequencies l in [-N/2, N/2):
// f(t) = N^{-d} sum_l F(l) e^{2 pi i l.t / N}, t in index units.
class BandLimited {
 public:
  explicit BandLimited(const GridFunction& f) : grid_(f.grid), coef_(f.values) {
    centered_dft_all(coef_, grid_.dim, grid_.N, -1);
    const double s = std::pow(static_cast<double>(grid_.N), -grid_.dim);
    for (auto& v : coef_) v *= s;
  }

  cplx at_index(const Vec& t) const {
    const int N = grid_.N, d = grid_.dim;
    std::vector<std::vector<cplx>> E(d, std::vector<cplx>(N));
    for (int a = 0; a < d; ++a)
      for (int l = 0; l < N; ++l) E[a][l] = std::exp(kI * (2.0 * kPi * (l - N / 2) * t[a] / N));
    std::vector<cplx> buf = coef_;
    std::int64_t len = static_cast<std::int64_t>(buf.size());
    for (int a = d - 1; a >= 0; --a) {
      len /= N;
      for (std::int64_t p = 0; p < len; ++p) {
        cplx s = 0.0;
        for (int l = 0; l < N; ++l) s += buf[p * N + l] * E[a][l];
        buf[p] = s;
      }
    }
    return buf[0];
  }

  cplx at(const Vec& x) const { return at_index(x / grid_.h); }

 private:
  Grid grid_;
  std::vector<cplx> coef_;
};

enum class SampleMode { exact, resampled, automatic };

inline bool outside_box(const Grid& g, const Vec& t, double tol = 1e-9) {
  for (int a = 0; a < g.dim; ++a)
    if (t[a] < -g.N / 2 - tol || t[a] > g.N / 2 - 1 + tol) return true;
  return false;
}

// A^* f = f o A.  Exact mode requires an integer matrix (grid units); unimodular
// maps wrap periodically, all others are extended by zero outside the box.
// Resampled mode evaluates the band-limited extension at A xi, zero outside the box.
inline GridFunction pullback(const Mat& A, const GridFunction& f, SampleMode mode = SampleMode::automatic) {
  const Grid& g = f.grid;
  if (A.rows() != g.dim || A.cols() != g.dim) throw ArgumentError("pullback map has wrong size");
  double det = A.determinant();
  if (std::abs(det) <= 1e-12 * std::max(1.0, max_abs(A))) throw ArgumentError("pullback map is singular");
  bool lattice = is_integer_matrix(A);
  if (mode == SampleMode::exact && !lattice)
    throw ModeError("exact pullback needs a lattice map; use resampled mode");
  if (mode == SampleMode::automatic) mode = lattice ? SampleMode::exact : SampleMode::resampled;
  GridFunction out = zeros(g);
  if (mode == SampleMode::exact) {
    Eigen::MatrixXi Ai = A.array().round().cast<int>();
    bool unimodular = std::abs(std::abs(det) - 1.0) < 1e-9;
    std::vector<long> src(g.dim);
    std::vector<int> srci(g.dim);
    for (std::int64_t i = 0; i < g.size(); ++i) {
      auto c = unflatten(g, i);
      for (int r = 0; r < g.dim; ++r) {
        long s = 0;
        for (int k = 0; k < g.dim; ++k) s += static_cast<long>(Ai(r, k)) * c[k];
        src[r] = s;
        srci[r] = static_cast<int>(s);
      }
      if (!unimodular && !in_box(g, src)) continue;
      out[i] = f[flatten(g, srci)];
    }
    return out;
  }
  BandLimited bl(f);
  for (std::int64_t i = 0; i < g.size(); ++i) {
    auto c = unflatten(g, i);
    Vec t(g.dim);
    for (int a = 0; a < g.dim; ++a) t[a] = c[a];
    Vec s = A * t;
    if (outside_box(g, s)) continue;
    out[i] = bl.at_index(s);
  }
  out.provenance = "resampled";
  return out;
}

// (tau_xi f)(eta) = f(eta - xi): a cyclic shift for lattice xi, a Fourier
// phase ramp otherwise.
inline GridFunction translate(const Vec& xi, const GridFunction& f) {
  const Grid& g = f.grid;
  if (xi.size() != g.dim) throw ArgumentError("translation vector has wrong size");
  Vec t = xi / g.h;
  bool lattice = true;
  for (int a = 0; a < g.dim; ++a)
    if (std::abs(t[a] - std::round(t[a])) > 1e-12) lattice = false;
  GridFunction out = zeros(g);
  if (lattice) {
    std::vector<int> src(g.dim);
    for (std::int64_t i = 0; i < g.size(); ++i) {
      auto c = unflatten(g, i);
      for (int a = 0; a < g.dim; ++a) src[a] = c[a] - static_cast<int>(std::lround(t[a]));
      out[i] = f[flatten(g, src)];
    }
    return out;
  }
  std::vector<cplx> F = f.values;
  centered_dft_all(F, g.dim, g.N, -1);
  for (std::int64_t i = 0; i < g.size(); ++i) {
    auto l = unflatten(g, i);
    double ph = 0.0;
    for (int a = 0; a < g.dim; ++a) ph -= 2.0 * kPi * l[a] * t[a] / g.N;
    F[i] *= std::exp(kI * ph);
  }
  centered_dft_all(F, g.dim, g.N, +1);
  const double s = std::pow(static_cast<double>(g.N), -g.dim);
  for (std::int64_t i = 0; i < g.size(); ++i) out[i] = F[i] * s;
  out.provenance = "resampled";
  return out;
}

// (b *_sigma c)(xi) = sum_eta b(xi - eta) c(eta) w, periodic.
inline GridFunction sigma_convolve(const GridFunction& b, const GridFunction& c) {
  check_same_grid(b, c);
  const Grid& g = b.grid;
  std::vector<cplx> B = b.values, C = c.values;
  centered_dft_all(B, g.dim, g.N, -1);
  centered_dft_all(C, g.dim, g.N, -1);
  for (size_t i = 0; i < B.size(); ++i) B[i] *= C[i];
  centered_dft_all(B, g.dim, g.N, +1);
  const double s = std::pow(static_cast<double>(g.N), -g.dim) * g.weight();
  GridFunction out = zeros(g);
  for (std::int64_t i = 0; i < g.size(); ++i) out[i] = B[i] * s;
  return out;
}

inline GridFunction unit_delta(const Grid& g) {
  GridFunction d = zeros(g);
  d[flatten(g, std::vector<int>(g.dim, 0))] = 1.0 / g.weight();
  return d;
}

// F_{sigma_S} f(xi) = (det S)^{1/2} (F_sigma f)(S xi), the transform for the
// form sigma_S with measure (det S)^{1/2} d^sigma.
inline GridFunction symplectic_fourier_form(const Mat& S, const GridFunction& f) {
  double det = S.determinant();
  if (det <= 0.0) throw ArgumentError("sigma_S transform needs det S > 0");
  GridFunction F = symplectic_fourier(f);
  GridFunction out = pullback(S, F);
  for (auto& v : out.values) v *= std::sqrt(det);
  return out;
}

// mu(D_{sigma_S}) = F_{sigma_S} M_mu F_{sigma_S}.
inline GridFunction apply_multiplier_form(const Mat& S, const PhaseFn& mu, const GridFunction& f) {
  GridFunction F = symplectic_fourier_form(S, f);
  for (std::int64_t i = 0; i < F.size(); ++i) F[i] *= mu(coords(F.grid, i));
  return symplectic_fourier_form(S, F);
}

// Lookup of a grid function at an arbitrary phase-space point: lattice points
// read the sample, other points use the band-limited extension; zero outside.
inline PhaseFn as_function(const GridFunction& f) {
  auto bl = std::make_shared<BandLimited>(f);
  GridFunction copy = f;
  return [copy, bl](const Vec& x) -> cplx {
    const Grid& g = copy.grid;
    Vec t = x / g.h;
    if (outside_box(g, t)) return 0.0;
    std::vector<int> c(g.dim);
    bool lattice = true;
    for (int a = 0; a < g.dim; ++a) {
      double r = std::round(t[a]);
      if (std::abs(t[a] - r) > 1e-9) lattice = false;
      c[a] = static_cast<int>(r);
    }
    if (lattice) return copy[flatten(g, c)];
    return bl->at_index(t);
  };
}

}  // namespace symplecta
