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

#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace mspt {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// D x D matrices (states, operators) and D^2 x D^2 superoperators share one
// dense storage type; helpers below recover the underlying dimension.
using DensityMatrix = Matrix;
using Operator = Matrix;
using SuperOperator = Matrix;

inline constexpr Complex kI{0.0, 1.0};

// Numerical thresholds. Every field can be overridden per scenario.
struct Tolerances {
  double herm = 1e-10;       // max |rho_ij - conj(rho_ji)|
  double trace = 1e-10;      // |Tr rho - 1| for physical inputs
  double psd = 1e-9;         // smallest admissible eigenvalue is -psd
  double spec = 1e-10;       // relative reconstruction residual of V diag V^-1
  double sec = 1e-9;         // relative zero-frequency threshold
  double kappa_max = 1e8;    // eigenvector condition limit
  double comm = 1e-8;        // relative commutator bound for the K ladder
};

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }

}  // namespace mspt
