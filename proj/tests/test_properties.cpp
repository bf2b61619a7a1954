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

#include "invariants.hpp"

namespace mspt {
namespace {

using testing::Rng;

class Invariants : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { report_ = testing::check_invariants(60, 2024); }
  static testing::InvariantReport report_;
};

testing::InvariantReport Invariants::report_;

TEST_F(Invariants, CaseCount) { EXPECT_GE(report_.cases, 50); }
TEST_F(Invariants, LadderCommutes) { EXPECT_LE(report_.ladder_commutator, 1e-8); }
TEST_F(Invariants, LeadingTermHasUnitTrace) { EXPECT_LE(report_.leading_trace, 1e-9); }
TEST_F(Invariants, CorrectionsAreTraceless) { EXPECT_LE(report_.correction_trace, 1e-9); }
TEST_F(Invariants, StatesAreHermitian) { EXPECT_LE(report_.hermiticity, 1e-9); }
TEST_F(Invariants, InitialConditionIsExact) { EXPECT_LE(report_.initial_condition, 1e-12); }
TEST_F(Invariants, MapMatchesState) { EXPECT_LE(report_.map_state, 1e-12); }
TEST_F(Invariants, OraclesAgree) { EXPECT_LE(report_.cross_oracle, 1e-8); }
TEST_F(Invariants, CorrectionsVanishAtZero) { EXPECT_EQ(report_.correction_at_zero, 0.0); }

TEST(SuperopProperties, RandomLindbladiansPreserveTraceAndHermiticity) {
  Rng rng(81);
  for (int c = 0; c < 50; ++c) {
    const Eigen::Index d = 2 + c % 3;
    const Matrix l = rng.lindbladian(d, rng.integer(1, 3));
    EXPECT_LT(max_abs(vectorize(identity(d)).adjoint() * l), 1e-12);
    EXPECT_LT(hermiticity_preservation_defect(l), 1e-12);
  }
}

TEST(SuperopProperties, VectorizationIdentity) {
  Rng rng(82);
  for (int c = 0; c < 50; ++c) {
    const Eigen::Index d = 2 + c % 3;
    const Matrix a = rng.matrix(d, d), x = rng.matrix(d, d), b = rng.matrix(d, d);
    EXPECT_LT(max_abs(vectorize(a * x * b) - kron(b.transpose(), a) * vectorize(x)), 1e-12);
  }
}

TEST(SpectralProperties, ReconstructionAndExponential) {
  Rng rng(83);
  for (int c = 0; c < 50; ++c) {
    const Eigen::Index d = 2 + c % 3;
    const Matrix l = rng.lindbladian(d, 2);
    const auto s = spectral_decompose(l);
    EXPECT_LE(s.residual, 1e-10 * max_abs(l));
    EXPECT_LT(max_abs(s.exp_at(1.3) - superop_exp_at(l, 1.3, ExpMethod::Pade)), 1e-10);
  }
}

TEST(EngineProperties, TimeDependentPerturbationKeepsInvariants) {
  Rng rng(84);
  for (int c = 0; c < 12; ++c) {
    const Eigen::Index d = 2 + c % 3;
    GeneratorSplit s{rng.lindbladian(d, 2), {}};
    const ExpSignal drive{{{0.5, Complex(0.0, 2.0), 0}, {0.5, Complex(0.0, -2.0), 0}}};
    s.L1.push_back({commutator_superop(0.1 * rng.hermitian(d)), drive});
    const auto e = build_expansion(s, 2);
    const DensityMatrix rho0 = rng.density(d);
    for (double t : {0.0, 0.7, 3.0}) {
      const auto state = evaluate_state(e, TruncationLevel::full(2), t, rho0);
      EXPECT_LT(std::abs(state.trace() - 1.0), 1e-9);
      EXPECT_LT(hermiticity_defect(state), 1e-9);
    }
  }
}

}  // namespace
}  // namespace mspt
