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
#include <complex>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace symplecta {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline const cplx kI(0.0, 1.0);

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ModeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, Vec point)
      : std::runtime_error(what), point_(std::move(point)) {}
  const Vec& point() const { return point_; }

 private:
  Vec point_;
};

class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, int subspace)
      : std::runtime_error(what), subspace_(subspace) {}
  int subspace() const { return subspace_; }

 private:
  int subspace_;
};

class SingularFormError : public std::runtime_error {
 public:
  SingularFormError(const std::string& what, double smin)
      : std::runtime_error(what), smallest_singular_value_(smin) {}
  double smallest_singular_value() const { return smallest_singular_value_; }

 private:
  double smallest_singular_value_;
};

// Raised when T + T^sigma is not invertible; the witness spans part of its kernel.
class GateError : public std::runtime_error {
 public:
  GateError(const std::string& what, Vec witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const Vec& witness() const { return witness_; }

 private:
  Vec witness_;
};

inline std::string format_vec(const Vec& v) {
  std::ostringstream os;
  os.precision(6);
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() ? static_cast<double>(m.cwiseAbs().maxCoeff()) : 0.0;
}

inline bool is_integer_matrix(const Mat& m, double tol = 1e-12) {
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (std::abs(m.data()[i] - std::round(m.data()[i])) > tol) return false;
  return true;
}

inline double rel_frobenius(const CMat& a, const CMat& b) {
  double den = b.norm();
  double num = (a - b).norm();
  return den > 0 ? num / den : num;
}

// Deterministic generator shared by tests, suites and the CLI.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform(double lo = 0.0, double hi = 1.0) {
    return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(eng_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(eng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  Vec normal_vec(int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = normal();
    return v;
  }
  Mat normal_mat(int r, int c) {
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = normal();
    return m;
  }
  CVec complex_vec(int n) {
    CVec v(n);
    for (int i = 0; i < n; ++i) v[i] = cplx(normal(), normal());
    return v;
  }
  CMat complex_mat(int r, int c) {
    CMat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = cplx(normal(), normal());
    return m;
  }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace symplecta
