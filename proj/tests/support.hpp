// Copyright 2026 The mspt Authors
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

// Shared fixtures: random physical inputs and brute-force oracles.
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "mspt/mspt.hpp"

namespace mspt::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  Matrix matrix(Eigen::Index r, Eigen::Index c) {
    Matrix m(r, c);
    for (Eigen::Index j = 0; j < c; ++j)
      for (Eigen::Index i = 0; i < r; ++i) m(i, j) = Complex(uniform(), uniform());
    return m;
  }

  Matrix hermitian(Eigen::Index d) {
    const Matrix a = matrix(d, d);
    return 0.5 * (a + a.adjoint());
  }

  // Full-rank state rho = A A^dag / Tr(A A^dag).
  DensityMatrix density(Eigen::Index d) {
    const Matrix a = matrix(d, d);
    const Matrix r = a * a.adjoint();
    return r / r.trace().real();
  }

  // -i[H, .] + sum_k rate_k D[O_k] with `channels` random jump operators.
  Matrix lindbladian(Eigen::Index d, int channels, double h_scale = 1.0, double rate_scale = 0.5) {
    std::vector<Channel> ch;
    for (int k = 0; k < channels; ++k) ch.push_back({rate_scale * uniform(0.1, 1.0), matrix(d, d)});
    return lindblad_liouvillian(h_scale * hermitian(d), ch);
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// e^{-L0 s} L1 e^{L0 s} by two Pade exponentials.
inline Matrix brute_conjugate(const Matrix& l0, const Matrix& l1, double s) {
  return superop_exp_at(l0, -s, ExpMethod::Pade) * l1 * superop_exp_at(l0, s, ExpMethod::Pade);
}

// Composite Gauss-Legendre (5 nodes per panel) of a matrix-valued integrand over [a, b].
template <class F>
Matrix gauss_legendre(F f, double a, double b, int panels) {
  static const double x[5] = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831, 0.9061798459386640};
  static const double w[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889, 0.4786286704993665,
                              0.2369268850561891};
  const double h = (b - a) / panels;
  Matrix sum;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (int k = 0; k < 5; ++k) {
      const Matrix v = f(mid + 0.5 * h * x[k]) * (0.5 * h * w[k]);
      if (sum.size() == 0) sum = v;
      else sum += v;
    }
  }
  return sum;
}

inline DensityMatrix unit(Eigen::Index d, Eigen::Index i, Eigen::Index j) {
  DensityMatrix m = DensityMatrix::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

inline std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(i + 1 == n ? b : a + (b - a) * i / double(n - 1));
  return v;
}

inline jc::Params sc_params() { return {1000.0, 1000.0, 1.0, 0.1, 0.01}; }
inline jc::Params wc_params() { return {1000.0, 1000.0, 0.01, 1.0, 0.01}; }

}  // namespace mspt::testing
