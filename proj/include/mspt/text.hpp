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

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "mspt/types.hpp"

namespace mspt::text {

// Shortest form that round-trips a double exactly.
inline std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// "a+bi" with both parts at full precision.
inline std::string format_complex(Complex z) {
  const double re = z.real() == 0.0 ? 0.0 : z.real();
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", re, im);
  return buf;
}

namespace detail {

inline std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

inline std::optional<double> parse_number(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "pi") return std::numbers::pi;
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (used == s.size()) return v;
  if (s.substr(used) == "pi" || s.substr(used) == "*pi") return v * std::numbers::pi;
  return std::nullopt;
}

}  // namespace detail

// Real literal with optional pi factors and a single division: "0.5", "pi/4", "3pi/2", "-2*pi".
inline std::optional<double> parse_real(const std::string& raw) {
  std::string s = detail::strip(raw);
  if (s.empty()) return std::nullopt;
  double sign = 1.0;
  if (s[0] == '-' && (s.size() < 2 || !std::isdigit(static_cast<unsigned char>(s[1])))) {
    sign = -1.0;
    s.erase(0, 1);
  }
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    auto v = detail::parse_number(s);
    return v ? std::optional<double>(sign * *v) : std::nullopt;
  }
  auto num = detail::parse_number(s.substr(0, slash));
  auto den = detail::parse_number(s.substr(slash + 1));
  if (!num || !den || *den == 0.0) return std::nullopt;
  return sign * *num / *den;
}

// Complex literal "a", "bi", "a+bi", "a-bi", "i", "-i"; 'j' is accepted for 'i'.
inline std::optional<Complex> parse_complex(const std::string& raw) {
  std::string s = detail::strip(raw);
  if (s.empty()) return std::nullopt;
  const char last = s.back();
  if (last != 'i' && last != 'j') {
    auto r = parse_real(s);
    return r ? std::optional<Complex>(Complex(*r, 0.0)) : std::nullopt;
  }
  s.pop_back();
  // Split before the last sign that is not an exponent sign or the leading sign.
  size_t cut = std::string::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  const std::string re_part = cut == std::string::npos ? "" : s.substr(0, cut);
  std::string im_part = cut == std::string::npos ? s : s.substr(cut);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  if (im_part[0] == '+') im_part.erase(0, 1);
  auto im = parse_real(im_part);
  if (!im) return std::nullopt;
  double re = 0.0;
  if (!re_part.empty()) {
    auto r = parse_real(re_part);
    if (!r) return std::nullopt;
    re = *r;
  }
  return Complex(re, *im);
}

}  // namespace mspt::text
