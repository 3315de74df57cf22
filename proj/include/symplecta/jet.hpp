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
#include <vector>

#include "symplecta/core.hpp"

namespace symplecta {

// Multi-indices of total degree <= K in d variables, in graded lexicographic order.
class MultiIndexSet {
 public:
  MultiIndexSet(int d, int K) : d_(d), K_(K) {
    std::vector<int> a(d, 0);
    for (int deg = 0; deg <= K; ++deg) enumerate(a, 0, deg);
    for (size_t i = 0; i < list_.size(); ++i) pos_[list_[i]] = static_cast<int>(i);
    add_.assign(list_.size(), std::vector<int>(list_.size(), -1));
    for (size_t i = 0; i < list_.size(); ++i)
      for (size_t j = 0; j < list_.size(); ++j) {
        std::vector<int> s(d);
        for (int q = 0; q < d; ++q) s[q] = list_[i][q] + list_[j][q];
        auto it = pos_.find(s);
        if (it != pos_.end()) add_[i][j] = it->second;
      }
  }

  int dim() const { return d_; }
  int order() const { return K_; }
  int size() const { return static_cast<int>(list_.size()); }
  const std::vector<int>& operator[](int i) const { return list_[i]; }
  int index(const std::vector<int>& a) const { return pos_.at(a); }
  int sum(int i, int j) const { return add_[i][j]; }

 private:
  void enumerate(std::vector<int>& a, int q, int left) {
    if (q == d_ - 1) {
      a[q] = left;
      list_.push_back(a);
      return;
    }
    for (int v = left; v >= 0; --v) {
      a[q] = v;
      enumerate(a, q + 1, left - v);
    }
  }

  int d_, K_;
  std::vector<std::vector<int>> list_;
  std::map<std::vector<int>, int> pos_;
  std::vector<std::vector<int>> add_;
};

// Truncated Taylor expansion f(x0 + h) = sum_a c_a h^a.
class Jet {
 public:
  Jet(const MultiIndexSet* set, double value) : set_(set), c_(set->size(), 0.0) { c_[0] = value; }

  static Jet variable(const MultiIndexSet* set, int q, double x0) {
    Jet j(set, x0);
    if (set->order() >= 1) {
      std::vector<int> e(set->dim(), 0);
      e[q] = 1;
      j.c_[set->index(e)] = 1.0;
    }
    return j;
  }

  double value() const { return c_[0]; }
  double coeff(int i) const { return c_[i]; }

  // partial^a f(x0) = a! c_a.
  double derivative(int i) const {
    double f = 1.0;
    for (int v : (*set_)[i])
      for (int k = 2; k <= v; ++k) f *= k;
    return f * c_[i];
  }

  Jet operator+(const Jet& o) const {
    Jet r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
  }

  Jet operator*(const Jet& o) const {
    Jet r(set_, 0.0);
    for (int i = 0; i < set_->size(); ++i) {
      if (c_[i] == 0.0) continue;
      for (int j = 0; j < set_->size(); ++j) {
        int k = set_->sum(i, j);
        if (k >= 0) r.c_[k] += c_[i] * o.c_[j];
      }
    }
    return r;
  }

  Jet operator*(double s) const {
    Jet r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
  }

  // f^e for f(x0) > 0 via the binomial series in the nilpotent part.
  Jet pow(double e) const {
    const double f0 = c_[0];
    if (!(f0 > 0.0)) throw ArgumentError("jet power needs a positive base");
    Jet nil = *this;
    nil.c_[0] = 0.0;
    Jet r(set_, std::pow(f0, e));
    Jet term(set_, 1.0);
    double binom = 1.0;
    for (int m = 1; m <= set_->order(); ++m) {
      term = term * nil;
      binom *= (e - (m - 1)) / m;
      r = r + term * (binom * std::pow(f0, e - m));
    }
    return r;
  }

 private:
  const MultiIndexSet* set_;
  std::vector<double> c_;
};

}  // namespace symplecta
