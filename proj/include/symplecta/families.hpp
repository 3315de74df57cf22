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

namespace symplecta {

// The five T matrices (n = 1) used throughout the verification suites:
// Weyl, T = I, Kohn-Nirenberg, an anisotropic diagonal, and a non-diagonal map.
inline std::vector<Mat> suite_T() {
  auto m2 = [](double a, double b, double c, double d) {
    Mat m(2, 2);
    m << a, b, c, d;
    return m;
  };
  return {0.5 * Mat::Identity(2, 2), Mat::Identity(2, 2), m2(0, 0, 0, 1), m2(0.3, 0, 0, 0.7),
          m2(0.2, 0.5, -0.3, 0.8)};
}

inline std::vector<std::string> suite_T_names() { return {"weyl", "identity", "kohn-nirenberg", "diag-0.3-0.7", "general"}; }

// Gaussian test family on a phase space of dimension dim: rotated anisotropic
// covariances with variances in [1.6, 1.7], small centers and modulations,
// every third member carrying a first-order Hermite factor
// on a slightly narrower Gaussian.  `scale` multiplies every covariance.
inline std::vector<SymbolSpec> gaussian_family(int count, std::uint64_t seed, int dim = 2, double scale = 1.0) {
  Rng rng(seed);
  std::vector<SymbolSpec> out;
  for (int k = 0; k < count; ++k) {
    SymbolSpec s;
    Mat R = Mat::Identity(dim, dim);
    for (int a = 0; a + 1 < dim; a += 2) {
      double t = rng.uniform(0.0, kPi);
      R(a, a) = std::cos(t);
      R(a, a + 1) = -std::sin(t);
      R(a + 1, a) = std::sin(t);
      R(a + 1, a + 1) = std::cos(t);
    }
    Vec var(dim);
    for (int a = 0; a < dim; ++a) var[a] = rng.uniform(1.6, 1.7);
    s.covariance = R * var.asDiagonal() * R.transpose();
    s.covariance = (0.5 * scale * (s.covariance + s.covariance.transpose())).eval();
    s.center = Vec(dim);
    s.modulation = Vec(dim);
    for (int a = 0; a < dim; ++a) {
      s.center[a] = rng.uniform(-0.1, 0.1);
      s.modulation[a] = rng.uniform(-0.2, 0.2);
    }
    if (k % 3 == 2) {
      s.kind = SymbolKind::hermite_gaussian;
      s.hermite.assign(dim, 0);
      s.hermite[0] = 1;
      s.covariance *= 0.96;
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace symplecta
