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

#include "mspt/errors.hpp"
#include "mspt/expansion.hpp"
#include "mspt/superop.hpp"
#include "mspt/types.hpp"

namespace mspt::jc {

// Truncated bare basis: |0> = |g,0>, |1> = |e,0>, |2> = |g,1>.
inline constexpr Eigen::Index kDim = 3;

struct Params {
  double omega_c = 1000.0;
  double omega_a = 1000.0;
  double g = 1.0;
  double kappa = 0.1;
  double pump = 0.01;
};

enum class Regime { StrongCoupling, WeakCoupling };

inline const char* to_string(Regime r) { return r == Regime::StrongCoupling ? "strong" : "weak"; }

struct Operators {
  Operator H0, V, a, sigma_plus, sigma_minus, sigma_z;
};

inline Operators operators(const Params& p) {
  Operators o;
  o.a = Operator::Zero(kDim, kDim);
  o.a(0, 2) = 1.0;
  o.sigma_plus = Operator::Zero(kDim, kDim);
  o.sigma_plus(1, 0) = 1.0;
  o.sigma_minus = o.sigma_plus.adjoint();
  o.sigma_z = Operator::Zero(kDim, kDim);
  o.sigma_z.diagonal() << -1.0, 1.0, -1.0;
  o.V = Operator::Zero(kDim, kDim);
  o.V(1, 2) = 1.0;
  o.V(2, 1) = 1.0;
  o.H0 = p.omega_c * (o.a.adjoint() * o.a) + (p.omega_a / 2.0) * o.sigma_z;
  return o;
}

inline void check(const Params& p) {
  if (!(p.g >= 0.0)) throw NegativeRate("coupling g must be nonnegative");
  if (!(p.kappa >= 0.0)) throw NegativeRate("cavity loss kappa must be nonnegative");
  if (!(p.pump >= 0.0)) throw NegativeRate("pump rate P must be nonnegative");
}

inline GeneratorSplit split(const Params& p, Regime r) {
  check(p);
  const auto o = operators(p);
  GeneratorSplit s;
  if (r == Regime::StrongCoupling) {
    s.L0 = commutator_superop(o.H0 + p.g * o.V);
    s.L1.push_back({p.kappa * dissipator_superop(o.a) + p.pump * dissipator_superop(o.sigma_plus)});
  } else {
    s.L0 = commutator_superop(o.H0) + p.kappa * dissipator_superop(o.a);
    s.L1.push_back({p.g * commutator_superop(o.V) + p.pump * dissipator_superop(o.sigma_plus)});
  }
  return s;
}

inline Matrix liouvillian(const Params& p) {
  check(p);
  const auto o = operators(p);
  return lindblad_liouvillian(o.H0 + p.g * o.V, {{p.kappa, o.a}, {p.pump, o.sigma_plus}});
}

// Bare-energy rotation -i[H0, .]; commutes with the full generator at resonance.
inline Matrix bare_rotation(const Params& p) { return commutator_superop(operators(p).H0); }

inline DensityMatrix excited_atom() {
  DensityMatrix r = DensityMatrix::Zero(kDim, kDim);
  r(1, 1) = 1.0;
  return r;
}

namespace detail {

inline void require_closed_form(const Params& p, bool weak) {
  if (p.omega_c != p.omega_a) throw UnsupportedLevel("closed forms hold only at resonance (omega_c == omega_a)");
  check(p);
  if (p.g == 0.0) throw UnsupportedLevel("closed forms need g > 0");
  if (2.0 * p.pump + p.kappa == 0.0) throw UnsupportedLevel("closed forms need 2P + kappa > 0");
  if (weak && p.kappa == 0.0) throw UnsupportedLevel("weak-coupling closed forms need kappa > 0");
}

// Fills the lower triangle by Hermiticity and entry (2,2) from the trace.
inline DensityMatrix assemble(double r00, double r11, Complex r12, double trace) {
  DensityMatrix r = DensityMatrix::Zero(kDim, kDim);
  r(0, 0) = r00;
  r(1, 1) = r11;
  r(1, 2) = r12;
  r(2, 1) = std::conj(r12);
  r(2, 2) = trace - r00 - r11;
  return r;
}

// (1 - e^{-x t}) / x, continuous at x = 0.
inline double relaxed(double x, double t) { return x == 0.0 ? t : -std::expm1(-x * t) / x; }

}  // namespace detail

// Closed-form contribution with m factors of B and correction index k, for rho(0) = |1><1|.
// Strong coupling covers (0,0), (0,1), (1,0).
inline DensityMatrix analytic_sc_term(int m, int k, const Params& p, double t) {
  detail::require_closed_form(p, false);
  const double g = p.g, kap = p.kappa, P = p.pump, s = 2.0 * P + kap;
  const double s2 = std::sin(2.0 * g * t);
  const double lead = (m == 0) ? 1.0 : 0.0;
  if (m == 0 && k == 0) {
    const double c = std::cos(g * t);
    return detail::assemble(0.0, c * c, Complex(0.0, 0.5 * s2), lead);
  }
  if (m == 0 && k == 1) {
    const double slow = std::exp(-s * t / 2.0);
    const double r00 = kap / s * (1.0 - slow);
    const double r11 = (2.0 * P + kap * slow + s * std::exp(-kap * t / 2.0) * std::cos(2.0 * g * t)) / (2.0 * s);
    return detail::assemble(r00, r11, Complex(0.0, 0.5 * std::exp(-kap * t / 2.0) * s2), lead);
  }
  if (m == 1 && k == 0) {
    const double slow = std::exp(-s * t / 2.0);
    const double half = std::exp(-kap * t / 2.0);
    const double sn = std::sin(g * t);
    const double r00 = -kap * s2 / (4.0 * g) * half;
    const double r11 = kap * s2 / (8.0 * g * s) * (s * (1.0 + std::exp(-P * t)) * half + 4.0 * P * (1.0 - slow));
    const double r12 = kap * sn * sn / (4.0 * g * s) * (s * slow + 4.0 * P * (1.0 - slow));
    return detail::assemble(r00, r11, Complex(0.0, r12), lead);
  }
  throw UnsupportedLevel("no strong-coupling closed form for term (" + std::to_string(m) + "," + std::to_string(k) +
                         ")");
}

// Weak coupling covers (0,0), (0,1), (0,2), (1,0), (1,1), (2,0).
inline DensityMatrix analytic_wc_term(int m, int k, const Params& p, double t) {
  detail::require_closed_form(p, true);
  const double g = p.g, kap = p.kappa, P = p.pump;
  const double lead = (m == 0) ? 1.0 : 0.0;
  const double cav = -std::expm1(-kap * t / 2.0);  // 1 - e^{-kappa t/2}
  if (m == 0 && k <= 2) return detail::assemble(0.0, 1.0, 0.0, lead);
  if (m == 1 && k == 0) return detail::assemble(0.0, 0.0, Complex(0.0, 2.0 * g / kap * cav), lead);
  if (m == 1 && k == 1) {
    const double pop = 4.0 * g * g / kap * detail::relaxed(P, t);
    return detail::assemble(pop, -pop, Complex(0.0, 2.0 * g / kap * cav), lead);
  }
  if (m == 2 && k == 0) {
    const double r00 = -4.0 * g * g / (kap * kap) * (3.0 - 4.0 * std::exp(-kap * t / 2.0) + std::exp(-kap * t));
    const double r11 = 8.0 * g * g / (kap * kap) * cav;
    const double r12 = -8.0 * g * g * g / (kap * kap) * detail::relaxed(P, t) * cav;
    return detail::assemble(r00, r11, Complex(0.0, r12), lead);
  }
  throw UnsupportedLevel("no weak-coupling closed form for term (" + std::to_string(m) + "," + std::to_string(k) +
                         ")");
}

namespace detail {

template <class Term>
DensityMatrix sum_level(const TruncationLevel& level, Term term) {
  DensityMatrix r = DensityMatrix::Zero(kDim, kDim);
  for (int m = 0; m <= level.max_degree(); ++m) r += term(m, level.n - m);
  return r;
}

}  // namespace detail

// Strong-coupling levels 0, s1, 1.
inline DensityMatrix analytic_sc(const TruncationLevel& level, const Params& p, double t) {
  if (level.n > 1) throw UnsupportedLevel("strong-coupling closed forms stop at level 1, got " + level.label());
  return detail::sum_level(level, [&](int m, int k) { return analytic_sc_term(m, k, p, t); });
}

// Weak-coupling levels 0, s1, 1, s2, 2.
inline DensityMatrix analytic_wc(const TruncationLevel& level, const Params& p, double t) {
  if (level.n > 2) throw UnsupportedLevel("weak-coupling closed forms stop at level 2, got " + level.label());
  return detail::sum_level(level, [&](int m, int k) { return analytic_wc_term(m, k, p, t); });
}

}  // namespace mspt::jc
