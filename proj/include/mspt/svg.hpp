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
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace mspt::svg {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool dashed = false;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;
  int width = 760;
  int height = 480;
};

namespace detail {

inline std::string num(double v, const char* fmt = "%.6g") {
  char buf[40];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

inline std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

// Round tick spacing of 1, 2 or 5 times a power of ten.
inline std::vector<double> linear_ticks(double lo, double hi, int target = 6) {
  std::vector<double> ticks;
  if (!(hi > lo)) return {lo};
  const double raw = (hi - lo) / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0})
    if (m * mag >= raw) {
      step = m * mag;
      break;
    }
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step; t += step) ticks.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
  return ticks;
}

inline const char* color(size_t k) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  return palette[k % 8];
}

}  // namespace detail

// Static line chart with axes, ticks and a legend.
inline std::string line_plot(const PlotSpec& spec, const std::vector<Series>& series) {
  const double left = 80, right = 170, top = 40, bottom = 60;
  const double pw = spec.width - left - right, ph = spec.height - top - bottom;

  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& s : series)
    for (size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      const double y = s.y[i];
      if (!std::isfinite(y) || (spec.log_y && y <= 0.0)) continue;
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, spec.log_y ? std::log10(y) : y);
      ymax = std::max(ymax, spec.log_y ? std::log10(y) : y);
    }
  if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (spec.log_y) {
    ymin = std::max(std::floor(ymin), std::ceil(ymax) - 16.0);
    ymax = std::ceil(ymax);
    if (ymax <= ymin) ymax = ymin + 1;
  } else {
    const double pad = (ymax > ymin) ? 0.05 * (ymax - ymin) : (std::abs(ymax) > 0 ? 0.1 * std::abs(ymax) : 1.0);
    ymin -= pad;
    ymax += pad;
  }
  if (!(xmax > xmin)) xmax = xmin + 1;

  auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) {
    const double v = spec.log_y ? std::log10(y) : y;
    return top + (1.0 - (v - ymin) / (ymax - ymin)) * ph;
  };

  std::string o;
  o += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.width) + "\" height=\"" +
       std::to_string(spec.height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o += "<text x=\"" + detail::num(left + pw / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" +
       detail::escape(spec.title) + "</text>\n";
  o += "<rect x=\"" + detail::num(left) + "\" y=\"" + detail::num(top) + "\" width=\"" + detail::num(pw) +
       "\" height=\"" + detail::num(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

  for (double t : detail::linear_ticks(xmin, xmax)) {
    const double x = px(t);
    o += "<line x1=\"" + detail::num(x) + "\" y1=\"" + detail::num(top + ph) + "\" x2=\"" + detail::num(x) +
         "\" y2=\"" + detail::num(top + ph + 5) + "\" stroke=\"black\"/>\n";
    o += "<text x=\"" + detail::num(x) + "\" y=\"" + detail::num(top + ph + 18) + "\" text-anchor=\"middle\">" +
         detail::num(t) + "</text>\n";
  }
  std::vector<double> yt;
  if (spec.log_y) {
    const int stride = std::max(1, static_cast<int>((ymax - ymin) / 8));
    for (double e = ymin; e <= ymax + 1e-9; e += stride) yt.push_back(std::pow(10.0, e));
  } else {
    yt = detail::linear_ticks(ymin, ymax);
  }
  for (double t : yt) {
    const double y = py(t);
    o += "<line x1=\"" + detail::num(left - 5) + "\" y1=\"" + detail::num(y) + "\" x2=\"" + detail::num(left + pw) +
         "\" y2=\"" + detail::num(y) + "\" stroke=\"#dddddd\"/>\n";
    o += "<text x=\"" + detail::num(left - 8) + "\" y=\"" + detail::num(y + 4) + "\" text-anchor=\"end\">" +
         (spec.log_y ? "1e" + detail::num(std::log10(t), "%.0f") : detail::num(t)) + "</text>\n";
  }
  o += "<text x=\"" + detail::num(left + pw / 2) + "\" y=\"" + detail::num(spec.height - 15.0) +
       "\" text-anchor=\"middle\">" + detail::escape(spec.x_label) + "</text>\n";
  o += "<text x=\"18\" y=\"" + detail::num(top + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
       detail::num(top + ph / 2) + ")\">" + detail::escape(spec.y_label) + "</text>\n";

  for (size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    std::string pts;
    for (size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      const double y = s.y[i];
      if (!std::isfinite(y) || (spec.log_y && y <= 0.0)) continue;
      const double yy = std::clamp(py(y), top, top + ph);
      pts += detail::num(px(s.x[i]), "%.2f") + "," + detail::num(yy, "%.2f") + " ";
    }
    o += "<polyline fill=\"none\" stroke=\"" + std::string(detail::color(k)) + "\" stroke-width=\"1.4\"" +
         (s.dashed ? " stroke-dasharray=\"6,4\"" : "") + " points=\"" + pts + "\"/>\n";
    const double ly = top + 14 + 18.0 * static_cast<double>(k);
    o += "<line x1=\"" + detail::num(left + pw + 12) + "\" y1=\"" + detail::num(ly) + "\" x2=\"" +
         detail::num(left + pw + 36) + "\" y2=\"" + detail::num(ly) + "\" stroke=\"" + detail::color(k) +
         "\" stroke-width=\"2\"" + (s.dashed ? " stroke-dasharray=\"6,4\"" : "") + "/>\n";
    o += "<text x=\"" + detail::num(left + pw + 42) + "\" y=\"" + detail::num(ly + 4) + "\">" +
         detail::escape(s.label) + "</text>\n";
  }
  o += "</svg>\n";
  return o;
}

}  // namespace mspt::svg
