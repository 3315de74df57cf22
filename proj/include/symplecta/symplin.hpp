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

#include <algorithm>
#include <optional>

#include <unsupported/Eigen/MatrixFunctions>

#include "symplecta/core.hpp"

namespace symplecta {

struct SymplecticSpace {
  int n = 1;
  Mat J;

  int dim() const { return 2 * n; }
};

inline Mat standard_J(int n) {
  Mat J = Mat::Zero(2 * n, 2 * n);
  J.topRightCorner(n, n) = -Mat::Identity(n, n);
  J.bottomLeftCorner(n, n) = Mat::Identity(n, n);
  return J;
}

inline SymplecticSpace make_space(int n) {
  if (n < 1) throw ArgumentError("half-dimension must be positive");
  return {n, standard_J(n)};
}

inline SymplecticSpace make_space(const Mat& J) {
  if (J.rows() != J.cols() || J.rows() % 2 != 0 || J.rows() == 0)
    throw ArgumentError("sigma matrix must be square of even size");
  if (max_abs(J + J.transpose()) != 0.0) throw ArgumentError("sigma matrix is not antisymmetric");
  if (std::abs(J.determinant()) == 0.0) throw ArgumentError("sigma matrix is singular");
  return {static_cast<int>(J.rows() / 2), J};
}

enum class FormKind { antisymmetric, symmetric, inner_product };

struct BilinearForm {
  Mat B;
  FormKind kind;
};

inline BilinearForm make_form(const Mat& B, FormKind kind) {
  if (B.rows() != B.cols()) throw ArgumentError("form matrix must be square");
  if (kind == FormKind::antisymmetric && max_abs(B + B.transpose()) > 1e-12)
    throw ArgumentError("form is not antisymmetric");
  if (kind != FormKind::antisymmetric && max_abs(B - B.transpose()) > 1e-12)
    throw ArgumentError("form is not symmetric");
  if (kind == FormKind::inner_product) {
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (B + B.transpose()));
    if (es.eigenvalues().minCoeff() <= 0.0) throw ArgumentError("form is not positive definite");
  }
  return {B, kind};
}

inline void check_vec(const SymplecticSpace& sp, const Vec& v) {
  if (v.size() != sp.dim())
    throw ArgumentError("vector length " + std::to_string(v.size()) + " does not match 2n = " +
                        std::to_string(sp.dim()));
}

inline void check_map(const SymplecticSpace& sp, const Mat& T) {
  if (T.rows() != sp.dim() || T.cols() != sp.dim())
    throw ArgumentError("linear map must be " + std::to_string(sp.dim()) + "x" +
                        std::to_string(sp.dim()));
}

inline double sigma_eval(const SymplecticSpace& sp, const Vec& xi, const Vec& eta) {
  check_vec(sp, xi);
  check_vec(sp, eta);
  return xi.dot(sp.J * eta);
}

inline Mat symplectic_adjoint(const SymplecticSpace& sp, const Mat& T) {
  check_map(sp, T);
  return sp.J.inverse() * T.transpose() * sp.J;
}

struct GateResult {
  Mat S;
  double detS = 0.0;
  bool nondegenerate = false;
  std::optional<Vec> kernel_witness;
};

inline GateResult nondegeneracy_gate(const SymplecticSpace& sp, const Mat& T) {
  GateResult g;
  g.S = T + symplectic_adjoint(sp, T);
  g.detS = g.S.determinant();
  Eigen::JacobiSVD<Mat> svd(g.S, Eigen::ComputeFullV);
  const Vec& s = svd.singularValues();
  const double smax = s[0], smin = s[s.size() - 1];
  g.nondegenerate = smax > 0.0 && smin > 1e-10 * smax;
  if (!g.nondegenerate) {
    Vec w = svd.matrixV().col(s.size() - 1);
    g.kernel_witness = w / w.norm();
  }
  return g;
}

inline void check_symmetric_basis_input(const Mat& omega) {
  if (omega.rows() != omega.cols() || omega.rows() % 2 != 0)
    throw ArgumentError("form must be square of even size");
  if (max_abs(omega + omega.transpose()) > 1e-12 * std::max(1.0, max_abs(omega)))
    throw ArgumentError("form is not antisymmetric");
}

// Symplectic Gram-Schmidt.  Returns B with B^T Omega B = J_std, columns
// ordered (e_1..e_n, f_1..f_n).  Each step pairs the two remaining vectors
// with the largest |Omega| value and rescales the partner so that
// Omega(e, f) = -1.
inline Mat symplectic_basis(const Mat& omega) {
  check_symmetric_basis_input(omega);
  const int d = static_cast<int>(omega.rows());
  const int n = d / 2;
  Eigen::JacobiSVD<Mat> svd(omega);
  const Vec& s = svd.singularValues();
  if (s[0] == 0.0 || s[d - 1] <= 1e-10 * s[0])
    throw SingularFormError("antisymmetric form is degenerate", s[d - 1]);

  std::vector<Vec> pool;
  for (int i = 0; i < d; ++i) pool.push_back(Vec::Unit(d, i));
  Mat B(d, d);
  for (int step = 0; step < n; ++step) {
    int bi = -1, bj = -1;
    double best = 0.0;
    for (size_t i = 0; i < pool.size(); ++i)
      for (size_t j = 0; j < pool.size(); ++j) {
        double v = std::abs(pool[i].dot(omega * pool[j]));
        if (v > best) {
          best = v;
          bi = static_cast<int>(i);
          bj = static_cast<int>(j);
        }
      }
    if (bi < 0 || best <= 1e-14 * s[0])
      throw SingularFormError("symplectic Gram-Schmidt lost rank", s[d - 1]);
    Vec e = pool[bi];
    Vec f = pool[bj] * (-1.0 / e.dot(omega * pool[bj]));
    B.col(step) = e;
    B.col(n + step) = f;
    std::vector<Vec> rest;
    for (size_t k = 0; k < pool.size(); ++k) {
      if (static_cast<int>(k) == bi || static_cast<int>(k) == bj) continue;
      const Vec& v = pool[k];
      double oe = e.dot(omega * v);
      double of = f.dot(omega * v);
      rest.push_back(v - of * e + oe * f);
    }
    pool = std::move(rest);
  }
  return B;
}

inline bool is_sigma_symmetric(const SymplecticSpace& sp, const Mat& S, double tol = 1e-10) {
  return max_abs(S - symplectic_adjoint(sp, S)) <= tol;
}

// phi with phi^sigma phi = S, built as the inverse of a symplectic basis for sigma_S.
inline Mat factor_sigma_symmetric(const SymplecticSpace& sp, const Mat& S) {
  check_map(sp, S);
  if (!is_sigma_symmetric(sp, S)) throw ArgumentError("S is not sigma-symmetric");
  Eigen::JacobiSVD<Mat> svd(S);
  const Vec& s = svd.singularValues();
  if (s[0] == 0.0 || s[s.size() - 1] <= 1e-10 * s[0]) throw ArgumentError("S is singular");
  Mat omega = sp.J * S;
  omega = 0.5 * (omega - omega.transpose());
  Mat phi = symplectic_basis(omega).inverse();
  // For a non-standard sigma matrix compose with a normal form of sigma itself.
  if (max_abs(sp.J - standard_J(sp.n)) != 0.0) {
    Mat C = symplectic_basis(sp.J);
    phi = C * phi;
  }
  return phi;
}

struct CompatibleStructure {
  Mat Jc;
  BilinearForm gJ;
};

inline CompatibleStructure compatible_from_inner(const SymplecticSpace& sp, const BilinearForm& g) {
  check_map(sp, g.B);
  if (g.kind != FormKind::inner_product) throw ArgumentError("compatible structure needs an inner product");
  Eigen::SelfAdjointEigenSolver<Mat> es(g.B);
  if (es.eigenvalues().minCoeff() <= 0.0) throw ArgumentError("inner product is not positive");
  Mat L = es.operatorSqrt();
  Mat Linv = es.operatorInverseSqrt();
  // sigma(u, v) = g(A u, v)  =>  A = g^{-1} J^T.
  Mat A = g.B.inverse() * sp.J.transpose();
  Mat Ap = L * A * Linv;
  Eigen::SelfAdjointEigenSolver<Mat> es2(Ap.transpose() * Ap);
  Mat Jp = Ap * es2.operatorInverseSqrt();
  Mat Jc = Linv * Jp * L;
  Mat G = sp.J * Jc;
  G = 0.5 * (G + G.transpose());
  return {Jc, BilinearForm{G, FormKind::inner_product}};
}

}  // namespace symplecta
