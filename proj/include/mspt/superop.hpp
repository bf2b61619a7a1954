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

#include <cmath>
#include <string>
#include <vector>

#include "mspt/errors.hpp"
#include "mspt/types.hpp"

namespace mspt {

// Column stacking: element (r, c) of a D x D matrix lands at index r + c*D.
inline Vector vectorize(const Matrix& rho) {
  return Eigen::Map<const Vector>(rho.data(), rho.size());
}

inline Eigen::Index perfect_square_root(Eigen::Index n) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(n))));
  if (d * d != n) throw LengthNotSquare("length " + std::to_string(n) + " is not a perfect square");
  return d;
}

inline Matrix devectorize(const Vector& v) {
  const auto d = perfect_square_root(v.size());
  return Eigen::Map<const Matrix>(v.data(), d, d);
}

// Dimension D of the matrices a superoperator acts on.
inline Eigen::Index superop_dim(const Matrix& s) {
  if (s.rows() != s.cols()) throw DimensionMismatch("superoperator is not square");
  return perfect_square_root(s.rows());
}

inline double hermiticity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return max_abs(m - m.adjoint());
}

inline bool is_hermitian(const Matrix& m, double eps) { return hermiticity_defect(m) <= eps; }

// vec(A X B) = (B^T kron A) vec(X).
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Matrix left_multiplier(const Matrix& a) { return kron(identity(a.rows()), a); }
inline Matrix right_multiplier(const Matrix& b) { return kron(b.transpose(), identity(b.rows())); }

// S vec(rho) = vec(-i[H, rho]).
inline Matrix commutator_superop(const Operator& h, double eps_herm = Tolerances{}.herm) {
  if (h.rows() != h.cols()) throw DimensionMismatch("Hamiltonian is not square");
  if (!is_hermitian(h, eps_herm))
    throw NonHermitianInput("Hamiltonian deviates from Hermitian by " + std::to_string(hermiticity_defect(h)));
  return -kI * (left_multiplier(h) - right_multiplier(h));
}

// S vec(rho) = vec(O rho O^dag - {O^dag O, rho}/2).
inline Matrix dissipator_superop(const Operator& o) {
  if (o.rows() != o.cols()) throw DimensionMismatch("jump operator is not square");
  const Matrix odo = o.adjoint() * o;
  return kron(o.conjugate(), o) - 0.5 * (left_multiplier(odo) + right_multiplier(odo));
}

struct Channel {
  double rate = 0.0;
  Operator op;
};

inline Matrix lindblad_liouvillian(const Operator& h, const std::vector<Channel>& channels,
                                   double eps_herm = Tolerances{}.herm) {
  for (const auto& c : channels) {
    if (c.op.rows() != h.rows() || c.op.cols() != h.cols())
      throw DimensionMismatch("jump operator is " + std::to_string(c.op.rows()) + "x" + std::to_string(c.op.cols()) +
                              ", Hamiltonian is " + std::to_string(h.rows()) + "x" + std::to_string(h.cols()));
    if (!(c.rate >= 0.0)) throw NegativeRate("channel rate " + std::to_string(c.rate) + " is negative");
  }
  Matrix l = commutator_superop(h, eps_herm);
  for (const auto& c : channels) l += c.rate * dissipator_superop(c.op);
  return l;
}

// Permutation mapping vec(X) to vec(X^T).
inline Eigen::PermutationMatrix<Eigen::Dynamic> transpose_permutation(Eigen::Index d) {
  Eigen::PermutationMatrix<Eigen::Dynamic> p(d * d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) p.indices()(r + c * d) = static_cast<int>(c + r * d);
  return p;
}

// Zero when S maps Hermitian matrices to Hermitian matrices, i.e. S = P conj(S) P.
inline double hermiticity_preservation_defect(const Matrix& s) {
  const auto p = transpose_permutation(superop_dim(s));
  const Matrix mirrored = p * s.conjugate() * p.transpose();
  return max_abs(s - mirrored);
}

inline Matrix act(const Matrix& s, const Matrix& rho) { return devectorize(s * vectorize(rho)); }

}  // namespace mspt
