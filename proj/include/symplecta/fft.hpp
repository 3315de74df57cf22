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

#include <unsupported/Eigen/FFT>

#include "symplecta/core.hpp"

namespace symplecta {

inline std::int64_t ipow(int base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Centered DFT along the given axes of a row-major N^dim array whose axis
// indices represent c = k - N/2.  sign = -1 computes sum_c e^{-2 pi i c u / N} f(c),
// sign = +1 the conjugate kernel.  No normalization is applied.
inline void centered_dft(std::vector<cplx>& a, int dim, int N, const std::vector<int>& axes,
                         int sign) {
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  std::vector<cplx> in(N), out(N);
  const std::int64_t total = ipow(N, dim);
  const int half = N / 2;
  for (int axis : axes) {
    const std::int64_t stride = ipow(N, dim - 1 - axis);
    const std::int64_t block = stride * N;
    for (std::int64_t outer = 0; outer < total; outer += block) {
      for (std::int64_t inner = 0; inner < stride; ++inner) {
        const std::int64_t base = outer + inner;
        for (int k = 0; k < N; ++k) in[(k + half) % N] = a[base + k * stride];
        if (sign < 0)
          fft.fwd(out, in);
        else
          fft.inv(out, in);
        for (int k = 0; k < N; ++k) a[base + k * stride] = out[(k + half) % N];
      }
    }
  }
}

inline void centered_dft_all(std::vector<cplx>& a, int dim, int N, int sign) {
  std::vector<int> axes(dim);
  for (int i = 0; i < dim; ++i) axes[i] = i;
  centered_dft(a, dim, N, axes, sign);
}

}  // namespace symplecta
