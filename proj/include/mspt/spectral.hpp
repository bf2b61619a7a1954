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

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "mspt/errors.hpp"
#include "mspt/types.hpp"

namespace mspt {

// S = V diag(eigenvalues) V^-1.
struct SpectralDecomposition {
  Vector eigenvalues;
  Matrix right_vectors;
  Matrix left_inverse;
  double condition_estimate = 1.0;
  double residual = 0.0;  // max-abs reconstruction error

  Eigen::Index size() const { return eigenvalues.size(); }

  Matrix to_frame(const Matrix& m) const { return left_inverse * m * right_vectors; }
  Matrix from_frame(const Matrix& m) const { return right_vectors * m * left_inverse; }

  // e^{S t}; identity exactly at t = 0.
  Matrix exp_at(double t) const {
    if (t == 0.0) return identity(size());
    const Vector phases = (eigenvalues * t).array().exp().matrix();
    return right_vectors * phases.asDiagonal() * left_inverse;
  }
};

namespace detail {

inline bool eigen_order(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() < b.imag();
}

// Unit-norm columns with the largest-magnitude entry real and positive.
inline void normalize_columns(Matrix& v) {
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    auto col = v.col(c);
    col.normalize();
    Eigen::Index arg = 0;
    col.cwiseAbs().maxCoeff(&arg);
    const Complex pivot = col(arg);
    if (std::abs(pivot) > 0.0) col *= std::conj(pivot) / std::abs(pivot);
  }
}

}  // namespace detail

// Eigen-decomposition with clustered eigenvalues and SVD-derived eigenspaces,
// which remain orthonormal within each cluster even for exactly degenerate
// generators where inverse iteration is unreliable.
inline SpectralDecomposition spectral_decompose(const Matrix& s, const Tolerances& tol = {}) {
  if (s.rows() != s.cols()) throw DimensionMismatch("spectral_decompose needs a square matrix");
  const Eigen::Index n = s.rows();
  SpectralDecomposition out;
  const double norm = max_abs(s);
  if (n == 0 || norm == 0.0) {
    out.eigenvalues = Vector::Zero(n);
    out.right_vectors = identity(n);
    out.left_inverse = identity(n);
    return out;
  }

  Eigen::ComplexEigenSolver<Matrix> solver(s, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw DefectiveGenerator("eigenvalue iteration did not converge");
  const Vector raw = solver.eigenvalues();
  const double scale = std::max(raw.cwiseAbs().maxCoeff(), norm);
  const double cluster_tol = 1e-9 * scale;

  // Union-find over eigenvalue proximity.
  std::vector<Eigen::Index> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), Eigen::Index{0});
  auto find = [&](Eigen::Index i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (std::abs(raw(i) - raw(j)) <= cluster_tol) parent[find(i)] = find(j);

  struct Cluster {
    Complex mean{0.0, 0.0};
    Eigen::Index count = 0;
  };
  std::vector<Cluster> clusters;
  std::vector<Eigen::Index> root_to_cluster(static_cast<size_t>(n), -1);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto r = find(i);
    if (root_to_cluster[r] < 0) {
      root_to_cluster[r] = static_cast<Eigen::Index>(clusters.size());
      clusters.push_back({});
    }
    auto& c = clusters[root_to_cluster[r]];
    c.mean += raw(i);
    ++c.count;
  }
  // Round-off below the clustering scale is snapped away so that zero modes
  // are exact and the ordering does not depend on noise.
  auto snap = [&](double x) { return std::abs(x) <= cluster_tol ? 0.0 : x; };
  for (auto& c : clusters) {
    c.mean /= static_cast<double>(c.count);
    c.mean = Complex(snap(c.mean.real()), snap(c.mean.imag()));
  }
  std::sort(clusters.begin(), clusters.end(),
            [](const Cluster& a, const Cluster& b) { return detail::eigen_order(a.mean, b.mean); });

  out.eigenvalues.resize(n);
  out.right_vectors.resize(n, n);
  Eigen::Index col = 0;
  for (const auto& c : clusters) {
    Eigen::JacobiSVD<Matrix> svd(s - c.mean * identity(n), Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const Eigen::Index m = c.count;
    if (sv(n - m) > 1e-6 * scale)
      throw DefectiveGenerator("eigenvalue " + std::to_string(c.mean.real()) + "+" + std::to_string(c.mean.imag()) +
                               "i has multiplicity " + std::to_string(m) + " but a deficient eigenspace");
    out.right_vectors.middleCols(col, m) = svd.matrixV().rightCols(m);
    out.eigenvalues.segment(col, m).setConstant(c.mean);
    col += m;
  }
  detail::normalize_columns(out.right_vectors);

  Eigen::JacobiSVD<Matrix> cond_svd(out.right_vectors);
  const auto& csv = cond_svd.singularValues();
  out.condition_estimate = csv(n - 1) > 0.0 ? csv(0) / csv(n - 1) : INFINITY;
  if (!(out.condition_estimate <= tol.kappa_max))
    throw DefectiveGenerator("eigenvector condition estimate " + std::to_string(out.condition_estimate) +
                             " exceeds " + std::to_string(tol.kappa_max));
  out.left_inverse = out.right_vectors.partialPivLu().inverse();
  out.residual = max_abs(out.right_vectors * out.eigenvalues.asDiagonal() * out.left_inverse - s);
  return out;
}

enum class ExpMethod { Auto, Spectral, Pade };

// e^{S t}. Auto tries the eigenbasis and falls back to scaling and squaring.
inline Matrix superop_exp_at(const Matrix& s, double t, ExpMethod method = ExpMethod::Auto,
                             const Tolerances& tol = {}) {
  if (s.rows() != s.cols()) throw DimensionMismatch("exponential of a non-square matrix");
  if (t == 0.0) return identity(s.rows());
  switch (method) {
    case ExpMethod::Pade:
      return (s * t).exp();
    case ExpMethod::Spectral:
      return spectral_decompose(s, tol).exp_at(t);
    case ExpMethod::Auto:
      try {
        return spectral_decompose(s, tol).exp_at(t);
      } catch (const DefectiveGenerator&) {
        return (s * t).exp();
      }
  }
  return (s * t).exp();
}

// e^{-K t} F e^{K t} via entrywise phases e^{(lambda_j - lambda_i) t} in the K eigenbasis.
inline Matrix frame_conjugate(const Matrix& f, const SpectralDecomposition& k, double t) {
  if (f.rows() != k.size() || f.cols() != k.size())
    throw DimensionMismatch("operand is " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                            ", frame has size " + std::to_string(k.size()));
  if (t == 0.0) return f;
  Matrix m = k.to_frame(f);
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) *= std::exp((k.eigenvalues(j) - k.eigenvalues(i)) * t);
  return k.from_frame(m);
}

}  // namespace mspt
