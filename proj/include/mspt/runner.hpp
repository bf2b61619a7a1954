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

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/version.hpp>
#include <yaml-cpp/yaml.h>

#include "mspt/errors.hpp"
#include "mspt/expansion.hpp"
#include "mspt/jc.hpp"
#include "mspt/metrics.hpp"
#include "mspt/oracle.hpp"
#include "mspt/scenario.hpp"
#include "mspt/serialize.hpp"
#include "mspt/svg.hpp"
#include "mspt/text.hpp"

#ifndef MSPT_VERSION
#define MSPT_VERSION "0.0.0"
#endif
#ifndef MSPT_YAML_CPP_VERSION
#define MSPT_YAML_CPP_VERSION "unknown"
#endif

namespace mspt {

// Output or cache file access failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  std::filesystem::path out_dir = "out";
  bool plots = true;
  std::optional<std::filesystem::path> cache;
};

struct LevelResult {
  TruncationLevel level;
  std::vector<DensityMatrix> states;
  std::vector<double> trace_distance;  // empty without a reference
};

struct RunResult {
  std::vector<double> grid;   // scenario units
  std::vector<double> times;  // physical time
  std::vector<LevelResult> levels;
  std::vector<DensityMatrix> reference;
  bool rotating_frame = false;
  std::string cache_status = "unused";
  double ladder_defect = 0.0;
  double build_seconds = 0.0;
  double reference_seconds = 0.0;
  double evaluate_seconds = 0.0;
  std::optional<MsptExpansion> expansion;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw IoError("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot write " + p.string());
  out << content;
  if (!out) throw IoError("write failed for " + p.string());
}

inline std::vector<DensityMatrix> reference_states(const Scenario& sc, const GeneratorSplit& split,
                                                   const std::vector<double>& times, bool& rotating) {
  rotating = false;
  std::vector<DensityMatrix> out;
  if (sc.reference == ReferenceMethod::None) return out;
  if (sc.reference == ReferenceMethod::Exact) {
    const Matrix l = split.generator_at(0.0);
    const Vector v0 = vectorize(sc.initial_state);
    for (double t : times) out.push_back(devectorize(exact_constant_map(l, t) * v0));
    return out;
  }
  IntegratorOptions opt;
  opt.rtol = sc.rtol;
  opt.atol = sc.atol;
  std::vector<double> grid = times;
  const bool prepend = grid.front() > 0.0;
  if (prepend) grid.insert(grid.begin(), 0.0);
  Trajectory traj;
  if (split.is_constant()) {
    const Matrix l = split.generator_at(0.0);
    if (sc.is_jc) {
      const Matrix r = jc::bare_rotation(sc.params);
      const double scale = std::max({max_abs(l), max_abs(r), 1.0});
      if (max_abs(r * l - l * r) <= 1e-12 * scale * scale) {
        opt.rotating_frame = r;
        rotating = true;
      }
    }
    traj = rk_integrate(l, sc.initial_state, grid, opt);
  } else {
    traj = rk_integrate([&split](double t) { return split.generator_at(t); }, sc.initial_state, grid, opt);
  }
  out = std::move(traj.states);
  if (prepend) out.erase(out.begin());
  return out;
}

inline std::string csv_header(Eigen::Index d, bool with_td) {
  std::string h = "t";
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      const std::string ij = std::to_string(i) + std::to_string(j);
      h += ",rho" + ij + "_re,rho" + ij + "_im";
    }
  for (Eigen::Index i = 0; i < d; ++i) h += ",pop_" + std::to_string(i);
  if (with_td) h += ",trace_distance_vs_reference";
  return h + "\n";
}

inline std::string csv_table(const std::vector<double>& grid, const std::vector<DensityMatrix>& states,
                             const std::vector<double>& td) {
  const Eigen::Index d = states.empty() ? 0 : states.front().rows();
  std::string s = csv_header(d, !td.empty());
  for (size_t k = 0; k < grid.size(); ++k) {
    s += text::format_real(grid[k]);
    const auto& r = states[k];
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) s += "," + text::format_real(r(i, j).real()) + "," + text::format_real(r(i, j).imag());
    for (Eigen::Index i = 0; i < d; ++i) s += "," + text::format_real(r(i, i).real());
    if (!td.empty()) s += "," + text::format_real(td[k]);
    s += "\n";
  }
  return s;
}

// Upper-triangle pair with the largest imaginary excursion.
inline std::pair<Eigen::Index, Eigen::Index> dominant_coherence(const std::vector<DensityMatrix>& states) {
  const Eigen::Index d = states.front().rows();
  std::pair<Eigen::Index, Eigen::Index> best{0, d > 1 ? 1 : 0};
  double peak = -1.0;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j) {
      double m = 0.0;
      for (const auto& r : states) m = std::max(m, std::abs(r(i, j).imag()));
      if (m > peak + 1e-15) {
        peak = m;
        best = {i, j};
      }
    }
  return best;
}

inline std::string unit_label(const Scenario& sc) {
  if (sc.grid.unit == "1" || sc.grid.unit == "t") return "t";
  return sc.grid.unit + " t";
}

}  // namespace detail

// Builds the expansion, the reference and every requested level; performs no writes.
inline RunResult compute(const Scenario& sc, const RunOptions& opts = {}) {
  validate(sc);
  RunResult res;
  res.grid = sc.grid.values();
  for (double x : res.grid) res.times.push_back(x / sc.grid.rate);
  const GeneratorSplit split = sc.split();

  auto t0 = detail::Clock::now();
  ExpansionOptions eo;
  eo.tol = sc.tol;
  if (opts.cache && std::filesystem::exists(*opts.cache)) {
    try {
      auto cached = expansion_from_yaml(detail::read_file(*opts.cache));
      if (cache_matches(cached, split, sc.order, sc.tol)) {
        res.expansion = std::move(cached);
        res.cache_status = "hit";
      } else {
        res.cache_status = "stale";
      }
    } catch (const ParseError&) {
      res.cache_status = "unreadable";
    }
  }
  if (!res.expansion) {
    res.expansion = build_expansion(split, sc.order, eo);
    if (opts.cache && res.cache_status == "unused") res.cache_status = "miss";
  }
  res.ladder_defect = res.expansion->ladder_commutator_defect();
  res.build_seconds = detail::seconds_since(t0);

  t0 = detail::Clock::now();
  res.reference = detail::reference_states(sc, split, res.times, res.rotating_frame);
  res.reference_seconds = detail::seconds_since(t0);

  t0 = detail::Clock::now();
  for (const auto& level : sc.levels) {
    LevelResult lr;
    lr.level = level;
    lr.states.reserve(res.times.size());
    for (double t : res.times) lr.states.push_back(evaluate_state(*res.expansion, level, t, sc.initial_state));
    if (sc.trace_distance)
      for (size_t k = 0; k < res.times.size(); ++k)
        lr.trace_distance.push_back(trace_distance(lr.states[k], res.reference[k]));
    res.levels.push_back(std::move(lr));
  }
  res.evaluate_seconds = detail::seconds_since(t0);
  return res;
}

// Writes CSV, SVG, cache and manifest files; returns the file names written.
inline std::vector<std::string> write_outputs(const Scenario& sc, const RunResult& res, const RunOptions& opts,
                                              double wall_seconds) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(opts.out_dir, ec);
  if (ec) throw IoError("cannot create " + opts.out_dir.string() + ": " + ec.message());
  std::vector<std::string> files;
  auto emit = [&](const std::string& name, const std::string& content) {
    detail::write_file(opts.out_dir / name, content);
    files.push_back(name);
  };

  if (sc.csv) {
    for (const auto& lr : res.levels) emit("level_" + lr.level.label() + ".csv", detail::csv_table(res.grid, lr.states, lr.trace_distance));
    if (!res.reference.empty()) emit("reference.csv", detail::csv_table(res.grid, res.reference, {}));
  }

  if (sc.svg && opts.plots) {
    const std::string xl = detail::unit_label(sc);
    const Eigen::Index d = sc.dim();
    std::vector<svg::Series> pops;
    for (Eigen::Index i = 0; i < d; ++i) {
      for (const auto& lr : res.levels) {
        svg::Series s{"level " + lr.level.label() + " p" + std::to_string(i), res.grid, {}, false};
        for (const auto& r : lr.states) s.y.push_back(r(i, i).real());
        pops.push_back(std::move(s));
      }
      if (!res.reference.empty()) {
        svg::Series s{"reference p" + std::to_string(i), res.grid, {}, true};
        for (const auto& r : res.reference) s.y.push_back(r(i, i).real());
        pops.push_back(std::move(s));
      }
    }
    emit("populations.svg", svg::line_plot({sc.name + ": populations", xl, "population"}, pops));

    if (d > 1) {
      const auto [ci, cj] = detail::dominant_coherence(res.reference.empty() ? res.levels.front().states : res.reference);
      const std::string tag = "Im rho" + std::to_string(ci) + std::to_string(cj);
      std::vector<svg::Series> coh;
      for (const auto& lr : res.levels) {
        svg::Series s{"level " + lr.level.label(), res.grid, {}, false};
        for (const auto& r : lr.states) s.y.push_back(r(ci, cj).imag());
        coh.push_back(std::move(s));
      }
      if (!res.reference.empty()) {
        svg::Series s{"reference", res.grid, {}, true};
        for (const auto& r : res.reference) s.y.push_back(r(ci, cj).imag());
        coh.push_back(std::move(s));
      }
      emit("coherence.svg", svg::line_plot({sc.name + ": " + tag, xl, tag}, coh));
    }

    if (sc.trace_distance) {
      std::vector<svg::Series> td;
      for (const auto& lr : res.levels) td.push_back({"level " + lr.level.label(), res.grid, lr.trace_distance, false});
      emit("trace_distance.svg", svg::line_plot({sc.name + ": trace distance to reference", xl, "trace distance", true}, td));
    }
  }

  if (opts.cache && res.cache_status != "hit" && res.expansion) {
    const fs::path parent = opts.cache->parent_path();
    if (!parent.empty()) fs::create_directories(parent, ec);
    detail::write_file(*opts.cache, expansion_to_yaml(*res.expansion));
  }

  YAML::Emitter m;
  m << YAML::BeginMap;
  m << YAML::Key << "manifest_version" << YAML::Value << 1;
  m << YAML::Key << "tool" << YAML::Value << YAML::BeginMap << YAML::Key << "name" << YAML::Value << "mspt"
    << YAML::Key << "version" << YAML::Value << MSPT_VERSION << YAML::EndMap;
  m << YAML::Key << "libraries" << YAML::Value << YAML::BeginMap;
  m << YAML::Key << "eigen" << YAML::Value
    << (std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
        std::to_string(EIGEN_MINOR_VERSION));
  m << YAML::Key << "boost" << YAML::Value << BOOST_LIB_VERSION;
  m << YAML::Key << "yaml-cpp" << YAML::Value << MSPT_YAML_CPP_VERSION;
  m << YAML::EndMap;
  m << YAML::Key << "scenario" << YAML::Value << effective_source(sc);
  m << YAML::Key << "run" << YAML::Value << YAML::BeginMap;
  m << YAML::Key << "reference" << YAML::Value << to_string(sc.reference);
  m << YAML::Key << "rotating_frame" << YAML::Value << res.rotating_frame;
  m << YAML::Key << "expansion_cache" << YAML::Value << res.cache_status;
  m << YAML::Key << "grid_points" << YAML::Value << res.grid.size();
  m << YAML::Key << "ladder_commutator_defect" << YAML::Value << text::format_real(res.ladder_defect);
  m << YAML::EndMap;
  m << YAML::Key << "timing_seconds" << YAML::Value << YAML::BeginMap;
  m << YAML::Key << "expansion" << YAML::Value << text::format_real(res.build_seconds);
  m << YAML::Key << "reference" << YAML::Value << text::format_real(res.reference_seconds);
  m << YAML::Key << "evaluation" << YAML::Value << text::format_real(res.evaluate_seconds);
  m << YAML::Key << "wall" << YAML::Value << text::format_real(wall_seconds);
  m << YAML::EndMap;
  if (sc.trace_distance) {
    m << YAML::Key << "max_trace_distance" << YAML::Value << YAML::BeginMap;
    for (const auto& lr : res.levels)
      m << YAML::Key << lr.level.label() << YAML::Value
        << text::format_real(*std::max_element(lr.trace_distance.begin(), lr.trace_distance.end()));
    m << YAML::EndMap;
  }
  files.push_back("manifest.yaml");
  m << YAML::Key << "files" << YAML::Value << YAML::Flow << files;
  m << YAML::EndMap;
  detail::write_file(opts.out_dir / "manifest.yaml", std::string(m.c_str()) + "\n");
  return files;
}

inline RunResult run(const Scenario& sc, const RunOptions& opts, std::vector<std::string>* files = nullptr) {
  const auto t0 = detail::Clock::now();
  RunResult res = compute(sc, opts);
  auto written = write_outputs(sc, res, opts, detail::seconds_since(t0));
  if (files) *files = std::move(written);
  return res;
}

}  // namespace mspt
