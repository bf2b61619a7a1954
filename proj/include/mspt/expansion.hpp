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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mspt/errors.hpp"
#include "mspt/freq_series.hpp"
#include "mspt/spectral.hpp"
#include "mspt/superop.hpp"
#include "mspt/types.hpp"

namespace mspt {

// L(t) = L0 + sum_k op_k f_k(t), with coupling strengths absorbed into the terms.
struct GeneratorSplit {
  Matrix L0;
  std::vector<SignalTerm> L1;

  Eigen::Index size() const { return L0.rows(); }

  void validate() const {
    if (L0.rows() != L0.cols()) throw DimensionMismatch("L0 is not square");
    superop_dim(L0);
    for (const auto& t : L1)
      if (t.op.rows() != L0.rows() || t.op.cols() != L0.cols())
        throw DimensionMismatch("L1 term is " + std::to_string(t.op.rows()) + "x" + std::to_string(t.op.cols()) +
                                ", L0 is " + std::to_string(L0.rows()) + "x" + std::to_string(L0.cols()));
  }

  bool is_constant() const {
    return std::all_of(L1.begin(), L1.end(), [](const SignalTerm& t) { return t.signal.is_constant(); });
  }

  Matrix generator_at(double t) const {
    Matrix l = L0;
    for (const auto& term : L1) l += term.signal(t) * term.op;
    return l;
  }
};

// Where a multiple-scale series is cut.
struct TruncationLevel {
  enum class Kind { SolvabilityCondition, FullOrder };
  Kind kind = Kind::FullOrder;
  int n = 0;

  static TruncationLevel full(int n) { return {Kind::FullOrder, n}; }
  static TruncationLevel solvability(int n) {
    if (n < 1) throw OrderOutOfRange("solvability level needs n >= 1, got " + std::to_string(n));
    return {Kind::SolvabilityCondition, n};
  }

  // "2" is the full second order, "s2" its solvability-condition level.
  static TruncationLevel parse(const std::string& text) {
    std::string s = text;
    bool solv = false;
    if (!s.empty() && (s[0] == 's' || s[0] == 'S')) {
      solv = true;
      s.erase(0, 1);
    }
    if (s.empty() || s.size() > 3 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw OrderOutOfRange("unrecognized truncation level '" + text + "'");
    const int n = std::stoi(s);
    return solv ? solvability(n) : full(n);
  }

  std::string label() const { return (kind == Kind::SolvabilityCondition ? "s" : "") + std::to_string(n); }

  // Highest power of the perturbation kept in the order-n product.
  int max_degree() const { return kind == Kind::FullOrder ? n : n - 1; }

  friend bool operator==(const TruncationLevel&, const TruncationLevel&) = default;
};

struct ExpansionOptions {
  int max_order = 4;
  Tolerances tol;
};

struct MsptExpansion {
  int order = 0;
  std::vector<Matrix> K;                         // K_0 .. K_order
  std::vector<SpectralDecomposition> frames;     // eigenbasis of each K_l
  std::map<std::pair<int, int>, Antiderivative> B;  // (m, l) -> B_{m,l}, frame-l coordinates
  std::vector<double> secular_tolerance;         // absolute zero-frequency threshold per level
  GeneratorSplit split;
  Tolerances tol;

  Eigen::Index size() const { return K.empty() ? 0 : K.front().rows(); }

  const Antiderivative& b(int m, int l) const {
    auto it = B.find({m, l});
    if (it == B.end())
      throw OrderOutOfRange("B_{" + std::to_string(m) + "," + std::to_string(l) + "} was not computed");
    return it->second;
  }

  // B_{m,l}(t) in the original basis.
  Matrix b_at(int m, int l, double t) const { return frames.at(l).from_frame(b(m, l)(t)); }

  // max_n ||[K_{n+1}, K_n]|| / max(||K_{n+1}||, ||K_n||); zero for commuting ladders.
  double ladder_commutator_defect() const {
    double worst = 0.0;
    for (size_t n = 0; n + 1 < K.size(); ++n) {
      const double scale = std::max(max_abs(K[n]), max_abs(K[n + 1]));
      if (scale == 0.0) continue;
      worst = std::max(worst, max_abs(K[n + 1] * K[n] - K[n] * K[n + 1]) / scale);
    }
    return worst;
  }
};

inline MsptExpansion build_expansion(const GeneratorSplit& split, int order, const ExpansionOptions& opts = {}) {
  if (order < 0 || order > opts.max_order)
    throw OrderOutOfRange("order " + std::to_string(order) + " outside [0, " + std::to_string(opts.max_order) + "]");
  split.validate();
  const Eigen::Index n = split.size();

  MsptExpansion e;
  e.order = order;
  e.split = split;
  e.tol = opts.tol;
  e.K.push_back(split.L0);
  e.frames.push_back(spectral_decompose(split.L0, opts.tol));

  double scale = e.frames[0].eigenvalues.size() ? e.frames[0].eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  for (const auto& t : split.L1)
    for (const auto& x : t.signal.terms) scale = std::max(scale, std::abs(x.rate));

  // Constant perturbation series of levels >= 1, keyed by power: P[j] multiplies alpha^j.
  std::map<int, Matrix> carried;

  for (int l = 0; l < order; ++l) {
    const auto& frame = e.frames[static_cast<size_t>(l)];
    const double tol = opts.tol.sec * scale;
    e.secular_tolerance.push_back(tol);
    const int max_deg = order - l;

    std::map<int, FrequencySeries> forcing;
    if (l == 0) {
      forcing[1] = interaction_frame(split.L1, frame, tol);
    } else {
      for (const auto& [j, p] : carried)
        if (j <= max_deg)
          forcing[j] = conjugated_series(frame.to_frame(p), frame.eigenvalues, ExpSignal::constant(), tol);
    }

    std::vector<FrequencySeries> expanded{FrequencySeries::constant(identity(n), tol)};
    std::map<int, Matrix> mean;
    for (int m = 1; m <= max_deg; ++m) {
      FrequencySeries h(n, tol);
      for (int j = 1; j <= m; ++j) {
        auto it = forcing.find(j);
        if (it == forcing.end()) continue;
        h += (j == m) ? it->second : it->second * expanded[static_cast<size_t>(m - j)];
      }
      for (int k = 1; k < m; ++k) h -= expanded[static_cast<size_t>(m - k)].times(mean[k]);

      SecularSplit sec;
      try {
        sec = secular_split(h);
      } catch (const PolynomialSecularTerm& err) {
        throw PolynomialSecularTerm(std::string(err.what()) + " (order " + std::to_string(m) + ", level " +
                                        std::to_string(l) + ")",
                                    m, l);
      }
      mean[m] = sec.mean;
      Antiderivative b = oscillatory_antiderivative(sec);
      expanded.push_back(b.expanded());
      e.B.emplace(std::make_pair(m, l), std::move(b));
    }

    e.K.push_back(frame.from_frame(mean[1]));
    std::map<int, Matrix> next;
    for (const auto& [j, g] : mean)
      if (j >= 2) next[j - 1] = frame.from_frame(g);
    carried = std::move(next);

    e.frames.push_back(spectral_decompose(e.K.back(), opts.tol));
    const auto& lam = e.frames.back().eigenvalues;
    if (lam.size()) scale = std::max(scale, lam.cwiseAbs().maxCoeff());
  }
  return e;
}

namespace detail {

// Z[l][j] = e^{K_l t} B_{j,l}(t) (Z[l][0] = e^{K_l t}) for l < n, and the closing factor e^{K_n t}.
struct FactorTable {
  std::vector<std::vector<Matrix>> z;
  Matrix closing;

  FactorTable(const MsptExpansion& e, int n, double t) {
    for (int l = 0; l < n; ++l) {
      const auto& frame = e.frames[static_cast<size_t>(l)];
      std::vector<Matrix> row{frame.exp_at(t)};
      const Vector w = frame.eigenvalues;
      for (int j = 1; j <= n - l; ++j) row.push_back(frame.from_frame(e.b(j, l).weighted(w, t)));
      z.push_back(std::move(row));
    }
    closing = e.frames[static_cast<size_t>(n)].exp_at(t);
  }
};

inline void check_level(const MsptExpansion& e, int n, int max_degree) {
  if (n < 0 || n > e.order)
    throw OrderOutOfRange("level order " + std::to_string(n) + " exceeds expansion order " + std::to_string(e.order));
  if (max_degree < 0) throw OrderOutOfRange("empty truncation");
}

// Superoperators of each perturbation degree d <= max_degree in the order-n product.
inline std::vector<Matrix> graded_maps(const MsptExpansion& e, int n, int max_degree, double t) {
  const FactorTable f(e, n, t);
  const Eigen::Index size = e.size();
  std::vector<Matrix> r(static_cast<size_t>(max_degree) + 1, Matrix::Zero(size, size));
  r[0] = identity(size);
  std::vector<bool> live(r.size(), false);
  live[0] = true;
  for (int l = 0; l < n; ++l) {
    std::vector<Matrix> next(r.size(), Matrix::Zero(size, size));
    std::vector<bool> next_live(r.size(), false);
    for (int d = 0; d <= max_degree; ++d) {
      if (!live[static_cast<size_t>(d)]) continue;
      for (int j = 0; j <= n - l && d + j <= max_degree; ++j) {
        next[static_cast<size_t>(d + j)] += r[static_cast<size_t>(d)] * f.z[static_cast<size_t>(l)][static_cast<size_t>(j)];
        next_live[static_cast<size_t>(d + j)] = true;
      }
    }
    r = std::move(next);
    live = std::move(next_live);
  }
  for (auto& m : r) m = m * f.closing;
  return r;
}

// Same grading applied to a vector from the right.
inline std::vector<Vector> graded_states(const MsptExpansion& e, int n, int max_degree, double t, const Vector& v0) {
  const FactorTable f(e, n, t);
  std::vector<Vector> w(static_cast<size_t>(max_degree) + 1, Vector::Zero(v0.size()));
  std::vector<bool> live(w.size(), false);
  w[0] = f.closing * v0;
  live[0] = true;
  for (int l = n - 1; l >= 0; --l) {
    std::vector<Vector> next(w.size(), Vector::Zero(v0.size()));
    std::vector<bool> next_live(w.size(), false);
    for (int d = 0; d <= max_degree; ++d) {
      if (!live[static_cast<size_t>(d)]) continue;
      for (int j = 0; j <= n - l && d + j <= max_degree; ++j) {
        next[static_cast<size_t>(d + j)] += f.z[static_cast<size_t>(l)][static_cast<size_t>(j)] * w[static_cast<size_t>(d)];
        next_live[static_cast<size_t>(d + j)] = true;
      }
    }
    w = std::move(next);
    live = std::move(next_live);
  }
  return w;
}

inline void check_state(const MsptExpansion& e, const Matrix& rho0) {
  if (rho0.rows() * rho0.cols() != e.size() || rho0.rows() != rho0.cols())
    throw DimensionMismatch("initial state is " + std::to_string(rho0.rows()) + "x" + std::to_string(rho0.cols()) +
                            ", expansion acts on dimension " + std::to_string(superop_dim(e.K.front())));
}

}  // namespace detail

// Contribution with m factors of B and correction index k (order m + k).
inline Matrix evaluate_term(const MsptExpansion& e, int m, int k, double t, const DensityMatrix& rho0) {
  if (m < 0 || k < 0 || m + k > e.order)
    throw OrderOutOfRange("term (" + std::to_string(m) + "," + std::to_string(k) + ") exceeds expansion order " +
                          std::to_string(e.order));
  detail::check_state(e, rho0);
  const auto w = detail::graded_states(e, m + k, m, t, vectorize(rho0));
  return devectorize(w[static_cast<size_t>(m)]);
}

inline Matrix evaluate_term_map(const MsptExpansion& e, int m, int k, double t) {
  if (m < 0 || k < 0 || m + k > e.order)
    throw OrderOutOfRange("term (" + std::to_string(m) + "," + std::to_string(k) + ") exceeds expansion order " +
                          std::to_string(e.order));
  return detail::graded_maps(e, m + k, m, t)[static_cast<size_t>(m)];
}

inline Matrix evaluate_map(const MsptExpansion& e, const TruncationLevel& level, double t) {
  detail::check_level(e, level.n, level.max_degree());
  const auto r = detail::graded_maps(e, level.n, level.max_degree(), t);
  Matrix sum = Matrix::Zero(e.size(), e.size());
  for (const auto& m : r) sum += m;
  return sum;
}

inline DensityMatrix evaluate_state(const MsptExpansion& e, const TruncationLevel& level, double t,
                                    const DensityMatrix& rho0) {
  detail::check_level(e, level.n, level.max_degree());
  detail::check_state(e, rho0);
  const auto w = detail::graded_states(e, level.n, level.max_degree(), t, vectorize(rho0));
  Vector sum = Vector::Zero(e.size());
  for (const auto& v : w) sum += v;
  return devectorize(sum);
}

}  // namespace mspt
