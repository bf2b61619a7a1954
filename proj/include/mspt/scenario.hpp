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
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "mspt/errors.hpp"
#include "mspt/expansion.hpp"
#include "mspt/jc.hpp"
#include "mspt/metrics.hpp"
#include "mspt/superop.hpp"
#include "mspt/yaml_io.hpp"

namespace mspt {

enum class ReferenceMethod { Rk, Exact, None };

inline const char* to_string(ReferenceMethod m) {
  switch (m) {
    case ReferenceMethod::Rk: return "rk";
    case ReferenceMethod::Exact: return "exact";
    case ReferenceMethod::None: return "none";
  }
  return "none";
}

struct TimeGrid {
  double start = 0.0;
  double stop = 1.0;
  long long points = 2;
  std::vector<double> extra;
  std::string unit = "1";
  double rate = 1.0;  // physical t = grid value / rate

  // Grid values in scenario units, ascending and without duplicates.
  std::vector<double> values() const {
    std::vector<double> v;
    v.reserve(static_cast<size_t>(points) + extra.size());
    for (long long i = 0; i < points; ++i)
      v.push_back(i + 1 == points ? stop : start + (stop - start) * static_cast<double>(i) / double(points - 1));
    v.insert(v.end(), extra.begin(), extra.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }
};

struct Scenario {
  std::string name;
  std::string description;
  bool is_jc = true;
  jc::Params params;
  jc::Regime regime = jc::Regime::StrongCoupling;
  GeneratorSplit custom_split;  // used when !is_jc
  DensityMatrix initial_state;
  int order = 1;
  std::vector<TruncationLevel> levels;
  TimeGrid grid;
  bool csv = true;
  bool svg = true;
  bool trace_distance = true;
  ReferenceMethod reference = ReferenceMethod::Rk;
  double rtol = 1e-10;
  double atol = 1e-12;
  Tolerances tol;
  YAML::Node source;  // parsed document, re-emitted in manifests

  GeneratorSplit split() const { return is_jc ? jc::split(params, regime) : custom_split; }
  Eigen::Index dim() const { return initial_state.rows(); }
};

// Sets one tolerance by key; unknown keys are a ParseError on `field`.
inline void set_tolerance(Tolerances& t, const std::string& key, double value, const std::string& field) {
  if (!(value > 0.0)) throw ParseError(field, "tolerance '" + key + "' must be positive");
  if (key == "herm") t.herm = value;
  else if (key == "trace") t.trace = value;
  else if (key == "psd") t.psd = value;
  else if (key == "spec") t.spec = value;
  else if (key == "sec") t.sec = value;
  else if (key == "kappa_max") t.kappa_max = value;
  else if (key == "comm") t.comm = value;
  else throw ParseError(field, "unknown tolerance '" + key + "' (expected herm, trace, psd, spec, sec, kappa_max, comm)");
}

namespace detail {

inline const YAML::Node require(const YAML::Node& parent, const char* key, const std::string& field) {
  const YAML::Node n = parent[key];
  if (!n.IsDefined() || n.IsNull()) {
    if (parent.IsDefined() && !parent.Mark().is_null())
      throw ParseError(field, "missing required field", parent.Mark().line + 1, parent.Mark().column + 1);
    throw ParseError(field, "missing required field");
  }
  return n;
}

inline void reject_unknown(const YAML::Node& map, const std::vector<std::string>& allowed, const std::string& field) {
  for (const auto& kv : map) {
    const std::string key = kv.first.Scalar();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      yamlio::fail(kv.first, field.empty() ? key : field + "." + key, "unknown field");
  }
}

inline double read_nonnegative(const YAML::Node& node, const std::string& field) {
  const double v = yamlio::read_real(node, field);
  if (v < 0.0) yamlio::fail(node, field, "must be nonnegative");
  return v;
}

// Hamiltonian plus channels, or an explicit superoperator.
inline Matrix read_generator(const YAML::Node& node, const std::string& field, Eigen::Index d) {
  if (!node.IsMap()) yamlio::fail(node, field, "expected a map with hamiltonian/channels or superoperator");
  if (node["superoperator"]) {
    reject_unknown(node, {"superoperator", "signal"}, field);
    return yamlio::read_square(node["superoperator"], field + ".superoperator", d * d);
  }
  reject_unknown(node, {"hamiltonian", "channels", "signal"}, field);
  Operator h = Operator::Zero(d, d);
  if (node["hamiltonian"]) h = yamlio::read_square(node["hamiltonian"], field + ".hamiltonian", d);
  if (!is_hermitian(h, Tolerances{}.herm)) yamlio::fail(node["hamiltonian"], field + ".hamiltonian", "not Hermitian");
  std::vector<Channel> channels;
  const YAML::Node ch = node["channels"];
  if (ch.IsDefined() && !ch.IsNull()) {
    if (!ch.IsSequence()) yamlio::fail(ch, field + ".channels", "expected a list of {rate, operator}");
    for (size_t k = 0; k < ch.size(); ++k) {
      const std::string cf = field + ".channels[" + std::to_string(k) + "]";
      if (!ch[k].IsMap()) yamlio::fail(ch[k], cf, "expected {rate, operator}");
      reject_unknown(ch[k], {"rate", "operator"}, cf);
      Channel c;
      c.rate = read_nonnegative(require(ch[k], "rate", cf + ".rate"), cf + ".rate");
      c.op = yamlio::read_square(require(ch[k], "operator", cf + ".operator"), cf + ".operator", d);
      channels.push_back(std::move(c));
    }
  }
  return lindblad_liouvillian(h, channels);
}

inline ExpSignal read_signal(const YAML::Node& node, const std::string& field) {
  if (!node.IsDefined() || node.IsNull()) return ExpSignal::constant();
  if (!node.IsSequence() || node.size() == 0) yamlio::fail(node, field, "expected a list of {coeff, rate, power}");
  ExpSignal s;
  for (size_t k = 0; k < node.size(); ++k) {
    const YAML::Node t = node[k];
    const std::string tf = field + "[" + std::to_string(k) + "]";
    if (!t.IsMap()) yamlio::fail(t, tf, "expected {coeff, rate, power}");
    reject_unknown(t, {"coeff", "rate", "power"}, tf);
    ExpSignal::Term term;
    if (t["coeff"]) term.coeff = yamlio::read_complex(t["coeff"], tf + ".coeff");
    if (t["rate"]) term.rate = yamlio::read_complex(t["rate"], tf + ".rate");
    if (t["power"]) {
      const auto p = yamlio::read_int(t["power"], tf + ".power");
      if (p < 0 || p > 16) yamlio::fail(t["power"], tf + ".power", "must lie in [0, 16]");
      term.power = static_cast<int>(p);
    }
    s.terms.push_back(term);
  }
  return s;
}

inline DensityMatrix read_initial_state(const YAML::Node& node, const Scenario& sc, Eigen::Index d) {
  const std::string field = "initial_state";
  DensityMatrix rho;
  if (node.IsScalar()) {
    const std::string s = node.Scalar();
    rho = DensityMatrix::Zero(d, d);
    if (s == "excited-atom") {
      if (!sc.is_jc) yamlio::fail(node, field, "'excited-atom' is only defined for the jc model");
      rho = jc::excited_atom();
    } else if (s == "ground") {
      rho(0, 0) = 1.0;
    } else if (s == "maximally-mixed") {
      rho = identity(d) / double(d);
    } else if (s.rfind("basis:", 0) == 0) {
      long long k = -1;
      try {
        k = std::stoll(s.substr(6));
      } catch (const std::exception&) {
      }
      if (k < 0 || k >= d) yamlio::fail(node, field, "basis index out of range in '" + s + "'");
      rho(k, k) = 1.0;
    } else {
      yamlio::fail(node, field, "unknown preset '" + s + "' (expected excited-atom, ground, maximally-mixed, basis:k)");
    }
  } else {
    rho = yamlio::read_square(node, field, d);
  }
  try {
    check_physical(rho, sc.tol);
  } catch (const Error& err) {
    yamlio::fail(node, field, err.what());
  }
  return rho;
}

inline double jc_unit_rate(const jc::Params& p, const std::string& unit) {
  if (unit == "g") return p.g;
  if (unit == "kappa") return p.kappa;
  if (unit == "pump") return p.pump;
  if (unit == "omega_c") return p.omega_c;
  if (unit == "omega_a") return p.omega_a;
  return 0.0;
}

}  // namespace detail

// Structural checks shared by parsing and command-line overrides.
inline void validate(const Scenario& sc) {
  const int max_order = ExpansionOptions{}.max_order;
  if (sc.order < 0 || sc.order > max_order)
    throw ParseError("order", "must lie in [0, " + std::to_string(max_order) + "], got " + std::to_string(sc.order));
  if (sc.levels.empty()) throw ParseError("levels", "at least one level is required");
  for (const auto& l : sc.levels)
    if (l.n > sc.order)
      throw ParseError("levels", "level " + l.label() + " exceeds order " + std::to_string(sc.order));
  if (sc.grid.points < 2) throw ParseError("time_grid.points", "at least 2 points are required");
  if (sc.grid.start < 0.0) throw ParseError("time_grid.start", "must be nonnegative");
  if (!(sc.grid.stop > sc.grid.start)) throw ParseError("time_grid.stop", "must exceed start");
  if (!(sc.grid.rate > 0.0)) throw ParseError("time_grid.unit", "unit rate must be positive");
  for (double x : sc.grid.extra)
    if (x < 0.0) throw ParseError("time_grid.extra", "extra points must be nonnegative");
  if (sc.trace_distance && sc.reference == ReferenceMethod::None)
    throw ParseError("outputs", "trace_distance needs a reference method");
  if (sc.reference == ReferenceMethod::Exact && !sc.split().is_constant())
    throw ParseError("reference.method", "exact reference needs a time-independent generator");
  if (!(sc.rtol > 0.0) || !(sc.atol > 0.0)) throw ParseError("reference", "rtol and atol must be positive");
}

inline std::vector<TruncationLevel> default_levels(int order) {
  std::vector<TruncationLevel> v{TruncationLevel::full(0)};
  for (int n = 1; n <= order; ++n) {
    v.push_back(TruncationLevel::solvability(n));
    v.push_back(TruncationLevel::full(n));
  }
  return v;
}

inline TruncationLevel parse_level(const std::string& s, const std::string& field) {
  try {
    return TruncationLevel::parse(s);
  } catch (const OrderOutOfRange& err) {
    throw ParseError(field, err.what());
  }
}

inline Scenario parse_scenario(const std::string& text, const std::string& origin = "") {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& err) {
    throw ParseError("", err.msg, err.mark.line + 1, err.mark.column + 1);
  }
  if (root.IsMap() && root["scenario"] && root["manifest_version"]) root = root["scenario"];
  if (!root.IsMap()) throw ParseError("", "scenario must be a key-value map");
  detail::reject_unknown(root, {"name", "description", "model", "initial_state", "order", "levels", "time_grid",
                                "outputs", "reference", "tolerances"}, "");

  Scenario sc;
  sc.source = YAML::Clone(root);
  sc.name = root["name"] ? yamlio::scalar(root["name"], "name") : origin;
  if (root["description"]) sc.description = yamlio::scalar(root["description"], "description");

  if (const YAML::Node tol = root["tolerances"]; tol.IsDefined() && !tol.IsNull()) {
    if (!tol.IsMap()) yamlio::fail(tol, "tolerances", "expected a map");
    for (const auto& kv : tol) {
      const std::string key = kv.first.Scalar();
      const double v = yamlio::read_real(kv.second, "tolerances." + key);
      try {
        set_tolerance(sc.tol, key, v, "tolerances." + key);
      } catch (const ParseError& err) {
        yamlio::fail(kv.first, "tolerances." + key, err.what());
      }
    }
  }

  const YAML::Node model = detail::require(root, "model", "model");
  if (!model.IsMap()) yamlio::fail(model, "model", "expected a map");
  const std::string type = yamlio::scalar(detail::require(model, "type", "model.type"), "model.type");
  Eigen::Index d = 0;
  if (type == "jc") {
    detail::reject_unknown(model, {"type", "regime", "params"}, "model");
    sc.is_jc = true;
    const YAML::Node reg = detail::require(model, "regime", "model.regime");
    const std::string r = yamlio::scalar(reg, "model.regime");
    if (r == "strong" || r == "SC") sc.regime = jc::Regime::StrongCoupling;
    else if (r == "weak" || r == "WC") sc.regime = jc::Regime::WeakCoupling;
    else yamlio::fail(reg, "model.regime", "expected strong or weak");
    const YAML::Node p = detail::require(model, "params", "model.params");
    if (!p.IsMap()) yamlio::fail(p, "model.params", "expected a map");
    detail::reject_unknown(p, {"omega_c", "omega_a", "g", "kappa", "pump"}, "model.params");
    if (p["omega_c"]) sc.params.omega_c = yamlio::read_real(p["omega_c"], "model.params.omega_c");
    if (p["omega_a"]) sc.params.omega_a = yamlio::read_real(p["omega_a"], "model.params.omega_a");
    sc.params.g = detail::read_nonnegative(detail::require(p, "g", "model.params.g"), "model.params.g");
    sc.params.kappa = detail::read_nonnegative(detail::require(p, "kappa", "model.params.kappa"), "model.params.kappa");
    sc.params.pump = detail::read_nonnegative(detail::require(p, "pump", "model.params.pump"), "model.params.pump");
    d = jc::kDim;
  } else if (type == "custom") {
    detail::reject_unknown(model, {"type", "dim", "L0", "L1"}, "model");
    sc.is_jc = false;
    const YAML::Node dn = detail::require(model, "dim", "model.dim");
    const auto dim = yamlio::read_int(dn, "model.dim");
    if (dim < 1 || dim > 16) yamlio::fail(dn, "model.dim", "must lie in [1, 16]");
    d = static_cast<Eigen::Index>(dim);
    sc.custom_split.L0 = detail::read_generator(detail::require(model, "L0", "model.L0"), "model.L0", d);
    const YAML::Node l1 = model["L1"];
    if (l1.IsDefined() && !l1.IsNull()) {
      if (!l1.IsSequence()) yamlio::fail(l1, "model.L1", "expected a list of generator terms");
      for (size_t k = 0; k < l1.size(); ++k) {
        const std::string f = "model.L1[" + std::to_string(k) + "]";
        sc.custom_split.L1.push_back({detail::read_generator(l1[k], f, d), detail::read_signal(l1[k]["signal"], f + ".signal")});
      }
    }
  } else {
    yamlio::fail(model["type"], "model.type", "expected jc or custom, got '" + type + "'");
  }

  sc.initial_state =
      detail::read_initial_state(detail::require(root, "initial_state", "initial_state"), sc, d);

  const YAML::Node order = detail::require(root, "order", "order");
  const auto ord = yamlio::read_int(order, "order");
  if (ord < 0 || ord > ExpansionOptions{}.max_order)
    yamlio::fail(order, "order", "must lie in [0, " + std::to_string(ExpansionOptions{}.max_order) + "]");
  sc.order = static_cast<int>(ord);

  if (const YAML::Node lv = root["levels"]; lv.IsDefined() && !lv.IsNull()) {
    if (!lv.IsSequence()) yamlio::fail(lv, "levels", "expected a list such as [0, s1, 1]");
    for (size_t k = 0; k < lv.size(); ++k) {
      const std::string f = "levels[" + std::to_string(k) + "]";
      TruncationLevel l;
      try {
        l = TruncationLevel::parse(yamlio::scalar(lv[k], f));
      } catch (const OrderOutOfRange& err) {
        yamlio::fail(lv[k], f, err.what());
      }
      if (l.n > sc.order) yamlio::fail(lv[k], f, "level " + l.label() + " exceeds order " + std::to_string(sc.order));
      if (std::find(sc.levels.begin(), sc.levels.end(), l) == sc.levels.end()) sc.levels.push_back(l);
    }
  } else {
    sc.levels = default_levels(sc.order);
  }

  const YAML::Node tg = detail::require(root, "time_grid", "time_grid");
  if (!tg.IsMap()) yamlio::fail(tg, "time_grid", "expected a map");
  detail::reject_unknown(tg, {"start", "stop", "points", "unit", "rate", "extra"}, "time_grid");
  if (tg["start"]) sc.grid.start = yamlio::read_real(tg["start"], "time_grid.start");
  sc.grid.stop = yamlio::read_real(detail::require(tg, "stop", "time_grid.stop"), "time_grid.stop");
  const YAML::Node pts = detail::require(tg, "points", "time_grid.points");
  sc.grid.points = yamlio::read_int(pts, "time_grid.points");
  if (sc.grid.points < 2 || sc.grid.points > 10'000'000) yamlio::fail(pts, "time_grid.points", "must lie in [2, 1e7]");
  if (tg["unit"]) sc.grid.unit = yamlio::scalar(tg["unit"], "time_grid.unit");
  if (tg["rate"]) {
    sc.grid.rate = yamlio::read_real(tg["rate"], "time_grid.rate");
  } else if (sc.grid.unit == "1" || sc.grid.unit == "t") {
    sc.grid.rate = 1.0;
  } else if (sc.is_jc) {
    sc.grid.rate = detail::jc_unit_rate(sc.params, sc.grid.unit);
    if (sc.grid.rate == 0.0)
      yamlio::fail(tg["unit"], "time_grid.unit", "unit '" + sc.grid.unit + "' is not a positive model rate");
  } else {
    yamlio::fail(tg["unit"], "time_grid.unit", "custom models need time_grid.rate for a named unit");
  }
  if (!(sc.grid.rate > 0.0)) yamlio::fail(tg, "time_grid.rate", "must be positive");
  if (const YAML::Node ex = tg["extra"]; ex.IsDefined() && !ex.IsNull()) {
    if (!ex.IsSequence()) yamlio::fail(ex, "time_grid.extra", "expected a list");
    for (size_t k = 0; k < ex.size(); ++k)
      sc.grid.extra.push_back(yamlio::read_real(ex[k], "time_grid.extra[" + std::to_string(k) + "]"));
  }

  if (const YAML::Node out = root["outputs"]; out.IsDefined() && !out.IsNull()) {
    if (!out.IsSequence()) yamlio::fail(out, "outputs", "expected a list drawn from csv, svg, trace_distance");
    sc.csv = sc.svg = sc.trace_distance = false;
    for (size_t k = 0; k < out.size(); ++k) {
      const std::string o = yamlio::scalar(out[k], "outputs");
      if (o == "csv") sc.csv = true;
      else if (o == "svg") sc.svg = true;
      else if (o == "trace_distance") sc.trace_distance = true;
      else yamlio::fail(out[k], "outputs", "unknown output '" + o + "'");
    }
  }

  if (const YAML::Node ref = root["reference"]; ref.IsDefined() && !ref.IsNull()) {
    if (!ref.IsMap()) yamlio::fail(ref, "reference", "expected a map");
    detail::reject_unknown(ref, {"method", "rtol", "atol"}, "reference");
    if (ref["method"]) {
      const std::string m = yamlio::scalar(ref["method"], "reference.method");
      if (m == "rk") sc.reference = ReferenceMethod::Rk;
      else if (m == "exact") sc.reference = ReferenceMethod::Exact;
      else if (m == "none") sc.reference = ReferenceMethod::None;
      else yamlio::fail(ref["method"], "reference.method", "expected rk, exact or none");
    }
    if (ref["rtol"]) sc.rtol = yamlio::read_real(ref["rtol"], "reference.rtol");
    if (ref["atol"]) sc.atol = yamlio::read_real(ref["atol"], "reference.atol");
  }

  validate(sc);
  return sc;
}

// The scenario as YAML, with the effective order, levels and tolerances.
inline YAML::Node effective_source(const Scenario& sc) {
  YAML::Node n = YAML::Clone(sc.source);
  n["name"] = sc.name;
  n["order"] = sc.order;
  YAML::Node lv(YAML::NodeType::Sequence);
  for (const auto& l : sc.levels) lv.push_back(l.label());
  lv.SetStyle(YAML::EmitterStyle::Flow);
  n["levels"] = lv;
  YAML::Node tol(YAML::NodeType::Map);
  tol["herm"] = text::format_real(sc.tol.herm);
  tol["trace"] = text::format_real(sc.tol.trace);
  tol["psd"] = text::format_real(sc.tol.psd);
  tol["spec"] = text::format_real(sc.tol.spec);
  tol["sec"] = text::format_real(sc.tol.sec);
  tol["kappa_max"] = text::format_real(sc.tol.kappa_max);
  tol["comm"] = text::format_real(sc.tol.comm);
  n["tolerances"] = tol;
  return n;
}

// Bundled presets: Jaynes-Cummings populations, coherences and trace distances, plus a commuting check.
inline const std::map<std::string, std::string>& bundled_scenarios() {
  static const std::map<std::string, std::string> presets = {
      {"jc_sc_fig2", R"(name: jc_sc_fig2
description: Strong coupling populations up to first order
model:
  type: jc
  regime: strong
  params: {omega_c: 1000, omega_a: 1000, g: 1, kappa: 0.1, pump: 0.01}
initial_state: excited-atom
order: 1
levels: [0, s1, 1]
time_grid: {start: 0, stop: 50, points: 401, unit: g, extra: [pi/4]}
outputs: [csv, svg, trace_distance]
reference: {method: rk, rtol: 1e-10, atol: 1e-12}
)"},
      {"jc_sc_coherence_fig3", R"(name: jc_sc_coherence_fig3
description: Strong coupling coherence, short and long times, through the second solvability level
model:
  type: jc
  regime: strong
  params: {omega_c: 1000, omega_a: 1000, g: 1, kappa: 0.1, pump: 0.01}
initial_state: excited-atom
order: 2
levels: [s1, 1, s2]
time_grid: {start: 0, stop: 300, points: 3001, unit: g}
outputs: [csv, svg, trace_distance]
reference: {method: rk, rtol: 1e-10, atol: 1e-12}
)"},
      {"jc_wc_fig4", R"(name: jc_wc_fig4
description: Weak coupling ground-state population and coherence
model:
  type: jc
  regime: weak
  params: {omega_c: 1000, omega_a: 1000, g: 0.01, kappa: 1, pump: 0.01}
initial_state: excited-atom
order: 2
levels: [0, 1, 2]
time_grid: {start: 0, stop: 1000, points: 2001, unit: kappa}
outputs: [csv, svg, trace_distance]
reference: {method: rk, rtol: 1e-10, atol: 1e-12}
)"},
      {"jc_sc_tracedist_fig5", R"(name: jc_sc_tracedist_fig5
description: Strong coupling trace distance to the numerical solution
model:
  type: jc
  regime: strong
  params: {omega_c: 1000, omega_a: 1000, g: 1, kappa: 0.1, pump: 0.01}
initial_state: excited-atom
order: 2
levels: [s1, 1, s2, 2]
time_grid: {start: 0, stop: 500, points: 8001, unit: g}
outputs: [csv, svg, trace_distance]
reference: {method: rk, rtol: 1e-10, atol: 1e-12}
)"},
      {"jc_wc_tracedist_fig6", R"(name: jc_wc_tracedist_fig6
description: Weak coupling trace distance to the numerical solution
model:
  type: jc
  regime: weak
  params: {omega_c: 1000, omega_a: 1000, g: 0.01, kappa: 1, pump: 0.01}
initial_state: excited-atom
order: 2
levels: [0, s1, 1, s2, 2]
time_grid: {start: 0, stop: 3000, points: 3001, unit: kappa}
outputs: [csv, svg, trace_distance]
reference: {method: rk, rtol: 1e-10, atol: 1e-12}
)"},
      {"commuting_exactness", R"(name: commuting_exactness
description: Commuting split (precession plus dephasing); first order is exact
model:
  type: custom
  dim: 2
  L0:
    hamiltonian: [[0.5, 0], [0, -0.5]]
  L1:
    - channels:
        - {rate: 0.5, operator: [[1, 0], [0, -1]]}
initial_state: [[0.5, 0.5], [0.5, 0.5]]
order: 1
levels: [0, s1, 1]
time_grid: {start: 0, stop: 20, points: 401, unit: gamma, rate: 0.5}
outputs: [csv, svg, trace_distance]
reference: {method: exact}
)"},
  };
  return presets;
}

inline std::vector<std::string> list_scenarios() {
  return {"jc_sc_fig2", "jc_sc_coherence_fig3", "jc_wc_fig4", "jc_sc_tracedist_fig5", "jc_wc_tracedist_fig6",
          "commuting_exactness"};
}

// A file path, or the name of a bundled preset.
inline Scenario load_scenario(const std::string& path_or_name) {
  const auto& presets = bundled_scenarios();
  if (auto it = presets.find(path_or_name); it != presets.end() && !std::filesystem::exists(path_or_name))
    return parse_scenario(it->second, it->first);
  std::ifstream in(path_or_name);
  if (!in) throw ParseError("--scenario", "cannot read '" + path_or_name + "' and no bundled scenario has that name");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), std::filesystem::path(path_or_name).stem().string());
}

}  // namespace mspt
