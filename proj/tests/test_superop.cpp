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

#include <gtest/gtest.h>

#include "support.hpp"

namespace mspt {
namespace {

using testing::Rng;
using testing::unit;

Operator sigma_z_up() {  // sigma_z |0> = +|0>
  Operator s = Operator::Zero(2, 2);
  s(0, 0) = 1.0;
  s(1, 1) = -1.0;
  return s;
}

// Right-hand side of the resonant JC populations and (1,2) coherence, coded entry by entry.
struct JcRhs {
  double g, kappa, pump;
  Complex d00(const Matrix& r) const { return -pump * r(0, 0) + kappa * r(2, 2); }
  Complex d11(const Matrix& r) const { return -kI * g * (r(2, 1) - r(1, 2)) + pump * r(0, 0); }
  Complex d22(const Matrix& r) const { return -kI * g * (r(1, 2) - r(2, 1)) - kappa * r(2, 2); }
  Complex d12(const Matrix& r) const { return -kI * g * (r(2, 2) - r(1, 1)) - 0.5 * kappa * r(1, 2); }
};

TEST(Vectorize, HalfIdentityStacksDiagonal) {
  const Vector v = vectorize(identity(2) / 2.0);
  ASSERT_EQ(v.size(), 4);
  EXPECT_EQ(v(0), Complex(0.5));
  EXPECT_EQ(v(1), Complex(0.0));
  EXPECT_EQ(v(2), Complex(0.0));
  EXPECT_EQ(v(3), Complex(0.5));
}

TEST(Vectorize, OffDiagonalUnitLandsAtColumnMajorIndex) {
  const Vector v = vectorize(unit(2, 0, 1));
  // (row 0, col 1) -> 0 + 1*2
  for (Eigen::Index k = 0; k < 4; ++k) EXPECT_EQ(v(k), Complex(k == 2 ? 1.0 : 0.0));
}

TEST(Vectorize, RoundTripIsBitIdentical) {
  Rng rng(11);
  const Matrix rho = rng.density(3);
  const Matrix back = devectorize(vectorize(rho));
  EXPECT_TRUE((back.array() == rho.array()).all());
}

TEST(Devectorize, BasisVectors) {
  Vector v = Vector::Zero(4);
  v(0) = 1.0;
  EXPECT_EQ(devectorize(v), unit(2, 0, 0));
  v.setZero();
  v(3) = 1.0;
  EXPECT_EQ(devectorize(v), unit(2, 1, 1));
}

TEST(Devectorize, InverseOfVectorizeOnRandomVectors) {
  Rng rng(12);
  for (int k = 0; k < 10; ++k) {
    const Vector v = rng.matrix(16, 1).col(0);
    EXPECT_TRUE((vectorize(devectorize(v)).array() == v.array()).all());
  }
}

TEST(Devectorize, RejectsNonSquareLength) {
  EXPECT_THROW(devectorize(Vector::Zero(5)), LengthNotSquare);
}

TEST(CommutatorSuperop, EigenoperatorOfHalfSigmaZ) {
  const Matrix s = commutator_superop(0.5 * sigma_z_up());
  // -i (1/2 - (-1/2)) |0><1|
  const Matrix out = act(s, unit(2, 0, 1));
  EXPECT_LT(max_abs(out - (-kI) * unit(2, 0, 1)), 1e-15);
}

TEST(CommutatorSuperop, IdentityCommutes) {
  EXPECT_EQ(max_abs(commutator_superop(identity(3))), 0.0);
}

TEST(CommutatorSuperop, DegenerateBareEnergiesAtResonance) {
  const auto o = jc::operators(testing::sc_params());
  const Matrix rho = unit(3, 1, 2);
  const Matrix direct = -kI * (o.H0 * rho - rho * o.H0);
  EXPECT_EQ(max_abs(direct), 0.0);
  EXPECT_LT(max_abs(act(commutator_superop(o.H0), rho)), 1e-12);
}

TEST(CommutatorSuperop, MatchesDirectCommutator) {
  Rng rng(13);
  const Matrix h = rng.hermitian(4);
  const Matrix rho = rng.matrix(4, 4);
  EXPECT_LT(max_abs(act(commutator_superop(h), rho) - (-kI) * (h * rho - rho * h)), 1e-13);
}

TEST(CommutatorSuperop, RejectsNonHermitian) {
  Operator h = Operator::Zero(2, 2);
  h(0, 1) = 1.0;
  EXPECT_THROW(commutator_superop(h), NonHermitianInput);
}

TEST(DissipatorSuperop, CavityDecayOfOnePhoton) {
  const auto o = jc::operators(testing::sc_params());
  const Matrix out = act(dissipator_superop(o.a), unit(3, 2, 2));
  EXPECT_LT(max_abs(out - (unit(3, 0, 0) - unit(3, 2, 2))), 1e-15);
}

TEST(DissipatorSuperop, PumpAnnihilatesExcitedStateInTruncation) {
  const auto o = jc::operators(testing::sc_params());
  const Matrix rho = unit(3, 1, 1);
  const Operator& sp = o.sigma_plus;
  const Matrix direct = sp * rho * sp.adjoint() - 0.5 * (sp.adjoint() * sp * rho + rho * sp.adjoint() * sp);
  EXPECT_EQ(max_abs(direct), 0.0);
  EXPECT_LT(max_abs(act(dissipator_superop(sp), rho)), 1e-15);
}

TEST(DissipatorSuperop, TraceAnnihilating) {
  Rng rng(14);
  for (int k = 0; k < 20; ++k) {
    const Matrix o = rng.matrix(3, 3);
    const Matrix rho = rng.hermitian(3);
    EXPECT_LE(std::abs(act(dissipator_superop(o), rho).trace()), 1e-12);
  }
}

TEST(LindbladLiouvillian, SingleChannelIsScaledDissipator) {
  const auto o = jc::operators(testing::sc_params());
  const Matrix l = lindblad_liouvillian(Operator::Zero(3, 3), {{0.3, o.a}});
  EXPECT_LT(max_abs(l - 0.3 * dissipator_superop(o.a)), 1e-15);
}

TEST(LindbladLiouvillian, CoherentPartMatchesHandCodedEquations) {
  const auto p = testing::sc_params();
  const auto o = jc::operators(p);
  const Matrix l0 = lindblad_liouvillian(o.H0 + p.g * o.V, {});
  const JcRhs rhs{p.g, 0.0, 0.0};
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j) {
      const Matrix r = unit(3, i, j);
      const Matrix d = act(l0, r);
      EXPECT_LT(std::abs(d(0, 0) - rhs.d00(r)), 1e-12);
      EXPECT_LT(std::abs(d(1, 1) - rhs.d11(r)), 1e-12);
      EXPECT_LT(std::abs(d(2, 2) - rhs.d22(r)), 1e-12);
      EXPECT_LT(std::abs(d(1, 2) - rhs.d12(r)), 1e-12);
    }
}

TEST(LindbladLiouvillian, FullJcReproducesResonantEquations) {
  const auto p = testing::sc_params();
  const Matrix l = jc::liouvillian(p);
  const JcRhs rhs{p.g, p.kappa, p.pump};
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j) {
      const Matrix r = unit(3, i, j);
      const Matrix d = act(l, r);
      EXPECT_LT(std::abs(d(0, 0) - rhs.d00(r)), 1e-12) << i << j;
      EXPECT_LT(std::abs(d(1, 1) - rhs.d11(r)), 1e-12) << i << j;
      EXPECT_LT(std::abs(d(2, 2) - rhs.d22(r)), 1e-12) << i << j;
      EXPECT_LT(std::abs(d(1, 2) - rhs.d12(r)), 1e-12) << i << j;
    }
}

TEST(LindbladLiouvillian, RejectsMismatchedAndNegative) {
  EXPECT_THROW(lindblad_liouvillian(identity(2), {{1.0, identity(3)}}), DimensionMismatch);
  EXPECT_THROW(lindblad_liouvillian(identity(2), {{-0.1, identity(2)}}), NegativeRate);
}

TEST(LindbladLiouvillian, HermiticityPreservingStructure) {
  Rng rng(15);
  const Matrix l = rng.lindbladian(3, 2);
  EXPECT_LT(hermiticity_preservation_defect(l), 1e-14);
  // A generic matrix fails the test.
  EXPECT_GT(hermiticity_preservation_defect(rng.matrix(9, 9)), 1e-3);
}

}  // namespace
}  // namespace mspt
