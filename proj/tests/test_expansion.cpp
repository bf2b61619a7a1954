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

#include <cmath>
#include <numbers>

#include "support.hpp"

namespace mspt {
namespace {

using testing::Rng;
using testing::unit;

Operator sigma_z() {
  Operator sz = Operator::Zero(2, 2);
  sz(0, 0) = 1.0;
  sz(1, 1) = -1.0;
  return sz;
}

GeneratorSplit commuting_split(double gamma) {
  return {commutator_superop(0.5 * sigma_z()), {{gamma * dissipator_superop(sigma_z()), ExpSignal::constant()}}};
}

DensityMatrix plus_state() { return Matrix::Constant(2, 2, 0.5); }

TEST(TruncationLevel, ParseAndLabel) {
  EXPECT_EQ(TruncationLevel::parse("2"), TruncationLevel::full(2));
  EXPECT_EQ(TruncationLevel::parse("s1"), TruncationLevel::solvability(1));
  EXPECT_EQ(TruncationLevel::parse("S3").label(), "s3");
  EXPECT_EQ(TruncationLevel::full(2).max_degree(), 2);
  EXPECT_EQ(TruncationLevel::solvability(2).max_degree(), 1);
  for (const char* bad : {"s0", "", "s", "x1", "-1", "1.5"})
    EXPECT_THROW(TruncationLevel::parse(bad), OrderOutOfRange) << bad;
}

TEST(BuildExpansion, FirstGeneratorIsUnperturbedPart) {
  const auto s = jc::split(testing::sc_params(), jc::Regime::StrongCoupling);
  const auto e = build_expansion(s, 2);
  EXPECT_EQ(e.K.front(), s.L0);
  EXPECT_EQ(e.K.size(), 3u);
}

TEST(BuildExpansion, NoPerturbation) {
  Rng rng(41);
  const GeneratorSplit s{rng.lindbladian(2, 1), {}};
  const auto e = build_expansion(s, 3);
  for (int l = 1; l <= 3; ++l) EXPECT_EQ(max_abs(e.K[static_cast<size_t>(l)]), 0.0);
  for (const auto& [key, b] : e.B) EXPECT_EQ(max_abs(b(2.0)), 0.0);
}

TEST(BuildExpansion, CommutingSplitIsExactAtFirstOrder) {
  const auto s = commuting_split(0.5);
  EXPECT_EQ(max_abs(s.L0 * s.L1[0].op - s.L1[0].op * s.L0), 0.0);
  const auto e = build_expansion(s, 2);
  EXPECT_LT(max_abs(e.K[1] - s.L1[0].op), 1e-14);
  EXPECT_LT(max_abs(e.K[2]), 1e-14);
  for (const auto& [key, b] : e.B) EXPECT_LT(max_abs(e.b_at(key.first, key.second, 3.0)), 1e-14);
  for (double t : {0.0, 1.0, 10.0, 40.0}) {
    const Matrix product = superop_exp_at(s.L0, t) * superop_exp_at(s.L1[0].op, t);
    EXPECT_LT(max_abs(evaluate_map(e, TruncationLevel::full(1), t) - product), 1e-10);
  }
}

TEST(BuildExpansion, StrongCouplingFirstGeneratorDecayRates) {
  const auto p = testing::sc_params();
  const auto e = build_expansion(jc::split(p, jc::Regime::StrongCoupling), 2);
  const auto d = spectral_decompose(e.K[1]);
  auto has = [&](Complex z) {
    for (Eigen::Index k = 0; k < d.size(); ++k)
      if (std::abs(d.eigenvalues(k) - z) < 1e-12) return true;
    return false;
  };
  EXPECT_TRUE(has(-(2.0 * p.pump + p.kappa) / 2.0));
  EXPECT_TRUE(has(-p.kappa / 2.0));
}

TEST(BuildExpansion, LadderCommutes) {
  for (auto r : {jc::Regime::StrongCoupling, jc::Regime::WeakCoupling}) {
    const auto p = r == jc::Regime::StrongCoupling ? testing::sc_params() : testing::wc_params();
    EXPECT_LE(build_expansion(jc::split(p, r), 2).ladder_commutator_defect(), 1e-8);
  }
}

TEST(BuildExpansion, CorrectionsVanishAtZero) {
  const auto e = build_expansion(jc::split(testing::wc_params(), jc::Regime::WeakCoupling), 3);
  for (const auto& [key, b] : e.B) EXPECT_EQ(b(0.0), Matrix::Zero(e.size(), e.size()));
}

TEST(BuildExpansion, OrderOutOfRange) {
  const auto s = commuting_split(0.5);
  EXPECT_THROW(build_expansion(s, -1), OrderOutOfRange);
  EXPECT_THROW(build_expansion(s, 5), OrderOutOfRange);
  ExpansionOptions opts;
  opts.max_order = 6;
  EXPECT_NO_THROW(build_expansion(s, 5, opts));
}

TEST(BuildExpansion, DimensionMismatch) {
  GeneratorSplit s = commuting_split(0.5);
  s.L1.push_back({identity(9), ExpSignal::constant()});
  EXPECT_THROW(build_expansion(s, 1), DimensionMismatch);
}

TEST(BuildExpansion, FirstCorrectionMatchesQuadrature) {
  // B_{1,0}(tau) = int_0^tau (e^{-L0 s} L1 e^{L0 s} - K1) ds.
  const auto p = testing::sc_params();
  const auto s = jc::split(p, jc::Regime::StrongCoupling);
  const auto e = build_expansion(s, 1);
  const double tau = 3.0 / p.g;
  const Matrix q = testing::gauss_legendre(
      [&](double x) { return Matrix(testing::brute_conjugate(s.L0, s.L1[0].op, x) - e.K[1]); }, 0.0, tau, 4000);
  EXPECT_LT(max_abs(e.b_at(1, 0, tau) - q), 1e-8);
}

TEST(EvaluateTerm, StrongCouplingZeroOrderAtQuarterPeriod) {
  const auto p = testing::sc_params();
  const auto e = build_expansion(jc::split(p, jc::Regime::StrongCoupling), 1);
  const auto r = evaluate_term(e, 0, 0, std::numbers::pi / (4.0 * p.g), jc::excited_atom());
  EXPECT_NEAR(r(1, 1).real(), 0.5, 1e-10);
  EXPECT_NEAR(r(2, 2).real(), 0.5, 1e-10);
  EXPECT_LT(std::abs(r(1, 2) - Complex(0.0, 0.5)), 1e-10);
}

TEST(EvaluateTerm, AtTimeZero) {
  const auto e = build_expansion(jc::split(testing::wc_params(), jc::Regime::WeakCoupling), 2);
  const DensityMatrix rho0 = jc::excited_atom();
  for (int m = 0; m <= 2; ++m)
    for (int k = 0; m + k <= 2; ++k) {
      const Matrix r = evaluate_term(e, m, k, 0.0, rho0);
      EXPECT_LT(max_abs(r - (m == 0 ? rho0 : Matrix::Zero(3, 3))), 1e-15) << m << "," << k;
    }
}

TEST(EvaluateTerm, StrongCouplingFirstCorrection) {
  const auto p = testing::sc_params();
  const auto e = build_expansion(jc::split(p, jc::Regime::StrongCoupling), 1);
  const double t = 5.0 / p.g;
  EXPECT_LT(max_abs(evaluate_term(e, 1, 0, t, jc::excited_atom()) - jc::analytic_sc_term(1, 0, p, t)), 1e-8);
}

TEST(EvaluateTerm, OrderOutOfRange) {
  const auto e = build_expansion(commuting_split(0.5), 1);
  EXPECT_THROW(evaluate_term(e, 1, 1, 1.0, plus_state()), OrderOutOfRange);
  EXPECT_THROW(evaluate_term(e, -1, 0, 1.0, plus_state()), OrderOutOfRange);
  EXPECT_THROW(evaluate_state(e, TruncationLevel::full(2), 1.0, plus_state()), OrderOutOfRange);
}

TEST(EvaluateTerm, WrongStateSize) {
  const auto e = build_expansion(commuting_split(0.5), 1);
  EXPECT_THROW(evaluate_term(e, 0, 1, 1.0, identity(3) / 3.0), DimensionMismatch);
}

TEST(EvaluateState, StrongCouplingSolvabilityLimit) {
  const auto p = testing::sc_params();
  const auto e = build_expansion(jc::split(p, jc::Regime::StrongCoupling), 1);
  const auto r = evaluate_state(e, TruncationLevel::solvability(1), 1000.0 / p.g, jc::excited_atom());
  EXPECT_NEAR(r(0, 0).real(), p.kappa / (2.0 * p.pump + p.kappa), 1e-10);
  EXPECT_NEAR(r(0, 0).real(), 0.8333, 1e-4);
}

TEST(EvaluateState, WeakCouplingFirstOrderCoherenceLimit) {
  const auto p = testing::wc_params();
  const auto e = build_expansion(jc::split(p, jc::Regime::WeakCoupling), 1);
  const auto r = evaluate_state(e, TruncationLevel::full(1), 200.0 / p.kappa, jc::excited_atom());
  EXPECT_LT(std::abs(r(1, 2) - Complex(0.0, 0.02)), 1e-10);
}

TEST(EvaluateState, LevelsSumTheirTerms) {
  const auto p = testing::sc_params();
  const auto e = build_expansion(jc::split(p, jc::Regime::StrongCoupling), 2);
  const DensityMatrix rho0 = jc::excited_atom();
  const double t = 7.3;
  EXPECT_EQ(evaluate_state(e, TruncationLevel::full(0), t, rho0), evaluate_term(e, 0, 0, t, rho0));
  const Matrix s2 = evaluate_term(e, 0, 2, t, rho0) + evaluate_term(e, 1, 1, t, rho0);
  EXPECT_LT(max_abs(evaluate_state(e, TruncationLevel::solvability(2), t, rho0) - s2), 1e-13);
  const Matrix f2 = s2 + evaluate_term(e, 2, 0, t, rho0);
  EXPECT_LT(max_abs(evaluate_state(e, TruncationLevel::full(2), t, rho0) - f2), 1e-13);
}

TEST(EvaluateState, StrongCouplingMatchesClosedForms) {
  const auto p = testing::sc_params();
  const auto e = build_expansion(jc::split(p, jc::Regime::StrongCoupling), 1);
  for (const auto& level : {TruncationLevel::full(0), TruncationLevel::solvability(1), TruncationLevel::full(1)})
    for (double gt : testing::linspace(0.0, 50.0, 41))
      EXPECT_LT(max_abs(evaluate_state(e, level, gt / p.g, jc::excited_atom()) - jc::analytic_sc(level, p, gt / p.g)),
                1e-8)
          << level.label() << " gt=" << gt;
}

TEST(EvaluateState, WeakCouplingMatchesClosedForms) {
  const auto p = testing::wc_params();
  const auto e = build_expansion(jc::split(p, jc::Regime::WeakCoupling), 2);
  for (const auto& level : {TruncationLevel::full(0), TruncationLevel::solvability(1), TruncationLevel::full(1),
                            TruncationLevel::solvability(2), TruncationLevel::full(2)})
    for (double kt : testing::linspace(0.0, 100.0, 41))
      EXPECT_LT(
          max_abs(evaluate_state(e, level, kt / p.kappa, jc::excited_atom()) - jc::analytic_wc(level, p, kt / p.kappa)),
          1e-8)
          << level.label() << " kt=" << kt;
}

TEST(EvaluateMap, IdentityAtZero) {
  const auto e = build_expansion(jc::split(testing::sc_params(), jc::Regime::StrongCoupling), 2);
  for (const auto& level : {TruncationLevel::full(0), TruncationLevel::solvability(2), TruncationLevel::full(2)})
    EXPECT_LT(max_abs(evaluate_map(e, level, 0.0) - identity(9)), 1e-15);
}

TEST(EvaluateMap, ConsistentWithStatesOnMatrixUnits) {
  const auto e = build_expansion(jc::split(testing::sc_params(), jc::Regime::StrongCoupling), 1);
  const auto level = TruncationLevel::solvability(1);
  const double t = 12.5;
  const Matrix map = evaluate_map(e, level, t);
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j) {
      const DensityMatrix rho0 = unit(3, i, j);
      EXPECT_LT(max_abs(act(map, rho0) - evaluate_state(e, level, t, rho0)), 1e-12);
    }
}

TEST(EvaluateMap, TermMapsMatchTermStates) {
  const auto e = build_expansion(jc::split(testing::wc_params(), jc::Regime::WeakCoupling), 2);
  const DensityMatrix rho0 = jc::excited_atom();
  for (int m = 0; m <= 2; ++m)
    for (int k = 0; m + k <= 2; ++k)
      EXPECT_LT(max_abs(act(evaluate_term_map(e, m, k, 40.0), rho0) - evaluate_term(e, m, k, 40.0, rho0)), 1e-12);
}

TEST(BuildExpansion, TimeDependentPerturbationFollowsDerivativeRelation) {
  // The first-order solvability state rho_s1 = e^{K0 t} e^{K1 t} rho0 averages a periodically driven split.
  Rng rng(42);
  const Matrix l0 = commutator_superop(0.5 * sigma_z());
  const Matrix drive = 0.05 * dissipator_superop(rng.matrix(2, 2));
  const ExpSignal sig{{{0.5, Complex(0.0, 3.0), 0}, {0.5, Complex(0.0, -3.0), 0}}};
  const auto e = build_expansion({l0, {{drive, sig}}}, 1);
  // d/dt B_{1,0} = F_{1,0}(t) - K1.
  const double t = 2.1, h = 1e-4;
  const Matrix db = (e.b_at(1, 0, t + h) - e.b_at(1, 0, t - h)) / (2.0 * h);
  const Matrix f = testing::brute_conjugate(l0, drive, t) * sig(t);
  EXPECT_LT(max_abs(db - (f - e.K[1])), 1e-7);
}

}  // namespace
}  // namespace mspt
