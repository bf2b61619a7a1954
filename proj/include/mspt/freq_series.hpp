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
#include "mspt/signal.hpp"
#include "mspt/spectral.hpp"
#include "mspt/types.hpp"

namespace mspt {

// coeff * t^power * e^{rate t}, with coeff expressed in a frame eigenbasis.
struct FrequencyComponent {
  Complex rate{0.0, 0.0};
  int power = 0;
  Matrix coeff;
};

// Finite sum of frequency components. Rates closer than the tolerance are
// merged, and rates within tolerance of zero are snapped to exactly zero.
class FrequencySeries {
 public:
  FrequencySeries() = default;
  FrequencySeries(Eigen::Index n, double tol) : n_(n), tol_(tol) {}

  Eigen::Index dim() const { return n_; }
  double tolerance() const { return tol_; }
  const std::vector<FrequencyComponent>& components() const { return comps_; }
  bool empty() const { return comps_.empty(); }

  void add(Complex rate, int power, const Matrix& coeff) {
    if (coeff.rows() != n_ || coeff.cols() != n_)
      throw DimensionMismatch("component of size " + std::to_string(coeff.rows()) + " in a series of size " +
                              std::to_string(n_));
    if ((coeff.array() == Complex{0.0, 0.0}).all()) return;
    if (std::abs(rate) <= tol_) rate = 0.0;
    for (auto& c : comps_)
      if (c.power == power && std::abs(c.rate - rate) <= tol_) {
        c.coeff += coeff;
        return;
      }
    comps_.push_back({rate, power, coeff});
  }

  FrequencySeries& operator+=(const FrequencySeries& o) {
    for (const auto& c : o.comps_) add(c.rate, c.power, c.coeff);
    return *this;
  }

  FrequencySeries& operator-=(const FrequencySeries& o) {
    for (const auto& c : o.comps_) add(c.rate, c.power, -c.coeff);
    return *this;
  }

  friend FrequencySeries operator*(const FrequencySeries& a, const FrequencySeries& b) {
    FrequencySeries out(a.n_, std::max(a.tol_, b.tol_));
    for (const auto& x : a.comps_)
      for (const auto& y : b.comps_) out.add(x.rate + y.rate, x.power + y.power, x.coeff * y.coeff);
    return out;
  }

  // Right product with a time-independent matrix.
  FrequencySeries times(const Matrix& g) const {
    FrequencySeries out(n_, tol_);
    for (const auto& c : comps_) out.add(c.rate, c.power, c.coeff * g);
    return out;
  }

  static FrequencySeries constant(const Matrix& m, double tol) {
    FrequencySeries out(m.rows(), tol);
    out.add(0.0, 0, m);
    return out;
  }

  Matrix operator()(double t) const {
    Matrix s = Matrix::Zero(n_, n_);
    for (const auto& c : comps_) s += (std::pow(t, c.power) * std::exp(c.rate * t)) * c.coeff;
    return s;
  }

 private:
  Eigen::Index n_ = 0;
  double tol_ = 0.0;
  std::vector<FrequencyComponent> comps_;
};

// Zero-frequency mean plus the nonzero-frequency remainder of a series.
struct SecularSplit {
  Matrix mean;
  FrequencySeries oscillatory;
};

inline SecularSplit secular_split(const FrequencySeries& f) {
  SecularSplit out{Matrix::Zero(f.dim(), f.dim()), FrequencySeries(f.dim(), f.tolerance())};
  for (const auto& c : f.components()) {
    if (c.rate != Complex{0.0, 0.0}) {
      out.oscillatory.add(c.rate, c.power, c.coeff);
    } else if (c.power == 0) {
      out.mean += c.coeff;
    } else {
      throw PolynomialSecularTerm("zero-frequency component carries t^" + std::to_string(c.power) +
                                  " and has no finite average");
    }
  }
  return out;
}

// B(t) = sum coeff * int_0^t s^power e^{rate s} ds with every rate nonzero.
class Antiderivative {
 public:
  Antiderivative() = default;
  Antiderivative(Eigen::Index n, double tol) : n_(n), tol_(tol) {}

  Eigen::Index dim() const { return n_; }
  double tolerance() const { return tol_; }
  const std::vector<FrequencyComponent>& components() const { return comps_; }
  bool empty() const { return comps_.empty(); }

  void add(const FrequencyComponent& c) {
    if (c.rate == Complex{0.0, 0.0}) throw PolynomialSecularTerm("antiderivative of a zero-frequency component");
    comps_.push_back(c);
  }

  // Plain exponential-polynomial form, for further products.
  FrequencySeries expanded() const {
    FrequencySeries out(n_, tol_);
    for (const auto& c : comps_) {
      const auto p = detail::antiderivative_polynomial(c.rate, c.power);
      for (int j = 0; j <= c.power; ++j) out.add(c.rate, j, p[static_cast<size_t>(j)] * c.coeff);
      out.add(0.0, 0, -p[0] * c.coeff);
    }
    return out;
  }

  // diag(e^{w t}) B(t). Exponents are combined per entry so growing and
  // decaying factors cancel before they can overflow; structurally w_i +
  // rate is a frame eigenvalue wherever the coefficient is nonzero.
  Matrix weighted(const Vector& w, double t) const {
    Matrix s = Matrix::Zero(n_, n_);
    if (t == 0.0) return s;
    for (const auto& c : comps_) {
      for (Eigen::Index i = 0; i < n_; ++i) {
        Complex f{0.0, 0.0};
        bool have = false;
        for (Eigen::Index j = 0; j < n_; ++j) {
          const Complex x = c.coeff(i, j);
          if (x == Complex{0.0, 0.0}) continue;
          if (!have) {
            f = detail::weighted_primitive(w(i), c.rate, c.power, t);
            have = true;
          }
          s(i, j) += f * x;
        }
      }
    }
    return s;
  }

  Matrix operator()(double t) const { return weighted(Vector::Zero(n_), t); }

 private:
  Eigen::Index n_ = 0;
  double tol_ = 0.0;
  std::vector<FrequencyComponent> comps_;
};

inline Antiderivative oscillatory_antiderivative(const SecularSplit& split) {
  Antiderivative out(split.oscillatory.dim(), split.oscillatory.tolerance());
  for (const auto& c : split.oscillatory.components()) out.add(c);
  return out;
}

// Time-dependent generator term: op * f(t).
struct SignalTerm {
  Matrix op;
  ExpSignal signal = ExpSignal::constant();
};

// e^{-K t} M e^{K t} for M given in the K eigenbasis: entry (i, j) rotates at lambda_j - lambda_i.
inline FrequencySeries conjugated_series(const Matrix& m_frame, const Vector& lambda, const ExpSignal& signal,
                                         double tol) {
  const Eigen::Index n = lambda.size();
  FrequencySeries out(n, tol);
  for (const auto& term : signal.terms) {
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i) {
        const Complex x = m_frame(i, j);
        if (x == Complex{0.0, 0.0}) continue;
        Matrix e = Matrix::Zero(n, n);
        e(i, j) = term.coeff * x;
        out.add(lambda(j) - lambda(i) + term.rate, term.power, e);
      }
  }
  return out;
}

// Frame-transformed perturbation sum_k e^{-K t} op_k f_k(t) e^{K t} in frequency form (frame coordinates).
inline FrequencySeries interaction_frame(const std::vector<SignalTerm>& terms, const SpectralDecomposition& frame,
                                         double tol) {
  FrequencySeries out(frame.size(), tol);
  for (const auto& t : terms) {
    if (t.op.rows() != frame.size() || t.op.cols() != frame.size())
      throw DimensionMismatch("perturbation term does not match the frame size");
    out += conjugated_series(frame.to_frame(t.op), frame.eigenvalues, t.signal, tol);
  }
  return out;
}

// Evaluates a frame-coordinate series in the original basis.
inline Matrix in_original_basis(const FrequencySeries& f, const SpectralDecomposition& frame, double t) {
  return frame.from_frame(f(t));
}

}  // namespace mspt
