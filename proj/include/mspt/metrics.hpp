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

#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "mspt/errors.hpp"
#include "mspt/superop.hpp"
#include "mspt/types.hpp"

namespace mspt {

// Half the sum of absolute eigenvalues of rho1 - rho2.
inline double trace_distance(const DensityMatrix& rho1, const DensityMatrix& rho2, double eps_herm = 1e-9) {
  if (rho1.rows() != rho2.rows() || rho1.cols() != rho2.cols() || rho1.rows() != rho1.cols())
    throw DimensionMismatch("trace_distance needs two square matrices of equal size");
  const Matrix diff = rho1 - rho2;
  const double defect = hermiticity_defect(diff);
  if (!(defect <= eps_herm)) throw NonHermitianInput("difference deviates from Hermitian by " + std::to_string(defect));
  const Matrix h = 0.5 * (diff + diff.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

struct Observables {
  std::vector<double> populations;
  struct Coherence {
    Eigen::Index row = 0, col = 0;
    Complex value;
  };
  std::vector<Coherence> coherences;  // upper triangle, row-major
};

inline Observables observables(const DensityMatrix& rho) {
  Observables o;
  for (Eigen::Index i = 0; i < rho.rows(); ++i) o.populations.push_back(rho(i, i).real());
  for (Eigen::Index i = 0; i < rho.rows(); ++i)
    for (Eigen::Index j = i + 1; j < rho.cols(); ++j) o.coherences.push_back({i, j, rho(i, j)});
  return o;
}

// Physical-state checks used for initial conditions.
inline void check_physical(const DensityMatrix& rho, const Tolerances& tol) {
  if (rho.rows() != rho.cols()) throw DimensionMismatch("density matrix is not square");
  const double defect = hermiticity_defect(rho);
  if (!(defect <= tol.herm)) throw NonHermitianInput("density matrix deviates from Hermitian by " + std::to_string(defect));
  const Complex tr = rho.trace();
  if (!(std::abs(tr - 1.0) <= tol.trace))
    throw UnphysicalState("density matrix trace " + std::to_string(tr.real()) + " differs from 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol.psd)
    throw UnphysicalState("density matrix has eigenvalue " + std::to_string(es.eigenvalues().minCoeff()));
}

}  // namespace mspt
