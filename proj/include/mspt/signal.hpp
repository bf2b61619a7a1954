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
#include <vector>

#include "mspt/types.hpp"

namespace mspt {

namespace detail {

// k! / j! for 0 <= j <= k.
inline double falling_ratio(int k, int j) {
  double r = 1.0;
  for (int q = j + 1; q <= k; ++q) r *= q;
  return r;
}

// Coefficients p_j of P_k(t) = sum_j p_j t^j with d/dt[e^{mu t} P_k(t)] = t^k e^{mu t}, mu != 0.
inline std::vector<Complex> antiderivative_polynomial(Complex mu, int k) {
  std::vector<Complex> p(static_cast<size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    const double sign = ((k - j) % 2 == 0) ? 1.0 : -1.0;
    p[static_cast<size_t>(j)] = sign * falling_ratio(k, j) / std::pow(mu, k - j + 1);
  }
  return p;
}

// e^{w t} * int_0^t s^k e^{mu s} ds, evaluated without forming e^{mu t} alone.
// Exactly zero at t = 0.
inline Complex weighted_primitive(Complex w, Complex mu, int k, double t) {
  if (t == 0.0) return {0.0, 0.0};
  if (mu == Complex{0.0, 0.0}) return std::exp(w * t) * std::pow(t, k + 1) / double(k + 1);
  const Complex z = mu * t;
  if (std::abs(z) < 0.5) {
    // sum_n mu^n/n! t^{n+k+1}/(n+k+1)
    Complex sum{0.0, 0.0};
    Complex term = std::pow(t, k + 1);  // mu^n t^{n+k+1} / n!
    for (int n = 0; n < 60; ++n) {
      const Complex add = term / double(n + k + 1);
      sum += add;
      if (std::abs(add) <= 1e-18 * std::abs(sum)) break;
      term *= z / double(n + 1);
    }
    return std::exp(w * t) * sum;
  }
  const auto p = antiderivative_polynomial(mu, k);
  Complex poly{0.0, 0.0};
  for (int j = k; j >= 0; --j) poly = poly * t + p[static_cast<size_t>(j)];
  return std::exp((w + mu) * t) * poly - std::exp(w * t) * p[0];
}

}  // namespace detail

// f(t) = sum c t^k e^{mu t}.
struct ExpSignal {
  struct Term {
    Complex coeff{1.0, 0.0};
    Complex rate{0.0, 0.0};
    int power = 0;
  };
  std::vector<Term> terms;

  static ExpSignal constant(Complex c = 1.0) { return ExpSignal{{Term{c, 0.0, 0}}}; }

  Complex operator()(double t) const {
    Complex s{0.0, 0.0};
    for (const auto& x : terms) s += x.coeff * std::pow(t, x.power) * std::exp(x.rate * t);
    return s;
  }

  bool is_constant() const {
    for (const auto& x : terms)
      if (x.power != 0 || x.rate != Complex{0.0, 0.0}) return false;
    return true;
  }

  // Merges terms with identical (rate, power) and drops zero coefficients.
  ExpSignal simplified() const {
    ExpSignal out;
    for (const auto& x : terms) {
      bool merged = false;
      for (auto& y : out.terms)
        if (y.rate == x.rate && y.power == x.power) {
          y.coeff += x.coeff;
          merged = true;
          break;
        }
      if (!merged) out.terms.push_back(x);
    }
    std::erase_if(out.terms, [](const Term& x) { return x.coeff == Complex{0.0, 0.0}; });
    return out;
  }

  friend ExpSignal operator*(const ExpSignal& a, const ExpSignal& b) {
    ExpSignal out;
    for (const auto& x : a.terms)
      for (const auto& y : b.terms) out.terms.push_back({x.coeff * y.coeff, x.rate + y.rate, x.power + y.power});
    return out.simplified();
  }

  friend ExpSignal operator+(const ExpSignal& a, const ExpSignal& b) {
    ExpSignal out = a;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    return out.simplified();
  }

  // F(t) = int_0^t f(s) ds, again an exponential-polynomial.
  ExpSignal antiderivative() const {
    ExpSignal out;
    for (const auto& x : terms) {
      if (x.rate == Complex{0.0, 0.0}) {
        out.terms.push_back({x.coeff / double(x.power + 1), 0.0, x.power + 1});
        continue;
      }
      const auto p = detail::antiderivative_polynomial(x.rate, x.power);
      for (int j = 0; j <= x.power; ++j) out.terms.push_back({x.coeff * p[static_cast<size_t>(j)], x.rate, j});
      out.terms.push_back({-x.coeff * p[0], 0.0, 0});
    }
    return out.simplified();
  }
};

}  // namespace mspt
