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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "mspt/errors.hpp"
#include "mspt/spectral.hpp"
#include "mspt/superop.hpp"
#include "mspt/types.hpp"

namespace mspt {

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  double rtol = 0.0;
  double atol = 0.0;
};

struct IntegratorOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  // Constant superoperator R with [R, L] = 0. The integrator then follows the
  // slow part L - R and restores e^{R t} exactly on output. Useful when R
  // carries a large bare frequency.
  std::optional<Matrix> rotating_frame;
  size_t max_steps_between_outputs = 50'000'000;
};

using TimeDependentGenerator = std::function<Matrix(double)>;

namespace detail {

using OdeState = std::vector<Complex>;

inline void check_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw DimensionMismatch("time grid is empty");
  for (size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw DimensionMismatch("time grid is not strictly increasing");
}

template <class Generator>
inline Trajectory integrate(const Generator& slow, Eigen::Index n, const DensityMatrix& rho0,
                            const std::vector<double>& grid, const IntegratorOptions& opt) {
  namespace odeint = boost::numeric::odeint;
  check_grid(grid);
  if (rho0.rows() != rho0.cols() || rho0.size() != n)
    throw DimensionMismatch("initial state does not match the generator dimension");

  const Vector v0 = vectorize(rho0);
  OdeState x(v0.data(), v0.data() + v0.size());
  Trajectory traj;
  traj.rtol = opt.rtol;
  traj.atol = opt.atol;

  auto rhs = [&](const OdeState& y, OdeState& dy, double t) {
    Eigen::Map<const Vector> yv(y.data(), n);
    Eigen::Map<Vector> dv(dy.data(), n);
    dv.noalias() = slow(t) * yv;
  };

  std::optional<SpectralDecomposition> frame;
  if (opt.rotating_frame) frame = spectral_decompose(*opt.rotating_frame);

  auto observe = [&](const OdeState& y, double t) {
    Eigen::Map<const Vector> yv(y.data(), n);
    if (!yv.allFinite()) throw NonFiniteState("state became non-finite at t = " + std::to_string(t));
    traj.times.push_back(t);
    traj.states.push_back(devectorize(frame ? Vector(frame->exp_at(t) * yv) : Vector(yv)));
  };

  if (grid.size() == 1) {
    observe(x, grid.front());
    return traj;
  }

  auto stepper = odeint::make_dense_output(opt.atol, opt.rtol, odeint::runge_kutta_dopri5<OdeState>());
  const double span = grid.back() - grid.front();
  const double dt0 = std::max(span * 1e-6, 1e-12);
  try {
    odeint::integrate_times(stepper, rhs, x, grid.begin(), grid.end(), dt0, observe,
                            odeint::max_step_checker(opt.max_steps_between_outputs));
  } catch (const odeint::step_adjustment_error& err) {
    throw StepSizeUnderflow(err.what());
  } catch (const odeint::no_progress_error& err) {
    throw StepSizeUnderflow(err.what());
  } catch (const std::overflow_error& err) {
    throw StepSizeUnderflow(err.what());
  }
  traj.states.front() = rho0;
  return traj;
}

inline Matrix checked_slow_part(const Matrix& l, const IntegratorOptions& opt) {
  if (!opt.rotating_frame) return l;
  const Matrix& r = *opt.rotating_frame;
  if (r.rows() != l.rows() || r.cols() != l.cols()) throw DimensionMismatch("rotating frame does not match L");
  const double scale = std::max({max_abs(l), max_abs(r), 1.0});
  if (max_abs(r * l - l * r) > 1e-12 * scale * scale)
    throw NonCommutingFrame("rotating frame does not commute with the generator");
  return l - r;
}

}  // namespace detail

// Adaptive Dormand-Prince 5(4) with dense output at the grid points.
inline Trajectory rk_integrate(const Matrix& l, const DensityMatrix& rho0, const std::vector<double>& grid,
                               const IntegratorOptions& opt = {}) {
  if (l.rows() != l.cols()) throw DimensionMismatch("generator is not square");
  const Matrix slow = detail::checked_slow_part(l, opt);
  return detail::integrate([&](double) -> const Matrix& { return slow; }, l.rows(), rho0, grid, opt);
}

// Time-dependent variant; a rotating frame must commute with L(t) for every t (not checked).
inline Trajectory rk_integrate(const TimeDependentGenerator& l, const DensityMatrix& rho0,
                               const std::vector<double>& grid, const IntegratorOptions& opt = {}) {
  const Eigen::Index n = rho0.size();
  if (!opt.rotating_frame) return detail::integrate(l, n, rho0, grid, opt);
  const Matrix r = *opt.rotating_frame;
  return detail::integrate([&](double t) -> Matrix { return l(t) - r; }, n, rho0, grid, opt);
}

// e^{L t} by scaling and squaring, independent of the eigenbasis machinery.
inline Matrix exact_constant_map(const Matrix& l, double t) { return superop_exp_at(l, t, ExpMethod::Pade); }

}  // namespace mspt
