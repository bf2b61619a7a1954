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

#include <string>
#include <utility>

#include <yaml-cpp/yaml.h>

#include "mspt/errors.hpp"
#include "mspt/expansion.hpp"
#include "mspt/yaml_io.hpp"

namespace mspt {

inline constexpr const char* kExpansionFormat = "mspt-expansion";
inline constexpr int kExpansionFormatVersion = 1;

namespace detail {

inline void emit_split(YAML::Emitter& out, const GeneratorSplit& s) {
  out << YAML::BeginMap;
  out << YAML::Key << "L0" << YAML::Value;
  yamlio::emit_sparse(out, s.L0);
  out << YAML::Key << "L1" << YAML::Value << YAML::BeginSeq;
  for (const auto& t : s.L1) {
    out << YAML::BeginMap << YAML::Key << "op" << YAML::Value;
    yamlio::emit_sparse(out, t.op);
    out << YAML::Key << "signal" << YAML::Value << YAML::BeginSeq;
    for (const auto& x : t.signal.terms)
      out << YAML::Flow << YAML::BeginMap << YAML::Key << "coeff" << YAML::Value << text::format_complex(x.coeff)
          << YAML::Key << "rate" << YAML::Value << text::format_complex(x.rate) << YAML::Key << "power"
          << YAML::Value << x.power << YAML::EndMap;
    out << YAML::EndSeq << YAML::EndMap;
  }
  out << YAML::EndSeq << YAML::EndMap;
}

inline ExpSignal read_cached_signal(const YAML::Node& node, const std::string& field) {
  ExpSignal s;
  if (!node.IsDefined() || node.IsNull()) return ExpSignal::constant();
  if (!node.IsSequence()) yamlio::fail(node, field, "expected a list of {coeff, rate, power} terms");
  for (size_t k = 0; k < node.size(); ++k) {
    const YAML::Node t = node[k];
    const std::string tf = field + "[" + std::to_string(k) + "]";
    if (!t.IsMap()) yamlio::fail(t, tf, "expected a map with coeff, rate, power");
    ExpSignal::Term term;
    if (t["coeff"]) term.coeff = yamlio::read_complex(t["coeff"], tf + ".coeff");
    if (t["rate"]) term.rate = yamlio::read_complex(t["rate"], tf + ".rate");
    if (t["power"]) {
      const auto p = yamlio::read_int(t["power"], tf + ".power");
      if (p < 0 || p > 16) yamlio::fail(t["power"], tf + ".power", "power must lie in [0, 16]");
      term.power = static_cast<int>(p);
    }
    s.terms.push_back(term);
  }
  return s;
}

inline GeneratorSplit read_cached_split(const YAML::Node& node, Eigen::Index n) {
  GeneratorSplit s;
  s.L0 = yamlio::read_sparse(node["L0"], "split.L0", n, n);
  const YAML::Node l1 = node["L1"];
  if (l1.IsDefined() && l1.IsSequence())
    for (size_t k = 0; k < l1.size(); ++k) {
      const std::string f = "split.L1[" + std::to_string(k) + "]";
      s.L1.push_back({yamlio::read_sparse(l1[k]["op"], f + ".op", n, n), read_cached_signal(l1[k]["signal"], f + ".signal")});
    }
  return s;
}

inline bool same_split(const GeneratorSplit& a, const GeneratorSplit& b) {
  if (a.L0.rows() != b.L0.rows() || a.L0 != b.L0 || a.L1.size() != b.L1.size()) return false;
  for (size_t k = 0; k < a.L1.size(); ++k) {
    if (a.L1[k].op != b.L1[k].op) return false;
    const auto& x = a.L1[k].signal.terms;
    const auto& y = b.L1[k].signal.terms;
    if (x.size() != y.size()) return false;
    for (size_t q = 0; q < x.size(); ++q)
      if (x[q].coeff != y[q].coeff || x[q].rate != y[q].rate || x[q].power != y[q].power) return false;
  }
  return true;
}

}  // namespace detail

// Text form of an expansion: split, K ladder, frames and B components.
inline std::string expansion_to_yaml(const MsptExpansion& e) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "format" << YAML::Value << kExpansionFormat;
  out << YAML::Key << "version" << YAML::Value << kExpansionFormatVersion;
  out << YAML::Key << "size" << YAML::Value << e.size();
  out << YAML::Key << "order" << YAML::Value << e.order;
  out << YAML::Key << "tolerances" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "herm" << YAML::Value << text::format_real(e.tol.herm);
  out << YAML::Key << "trace" << YAML::Value << text::format_real(e.tol.trace);
  out << YAML::Key << "psd" << YAML::Value << text::format_real(e.tol.psd);
  out << YAML::Key << "spec" << YAML::Value << text::format_real(e.tol.spec);
  out << YAML::Key << "sec" << YAML::Value << text::format_real(e.tol.sec);
  out << YAML::Key << "kappa_max" << YAML::Value << text::format_real(e.tol.kappa_max);
  out << YAML::Key << "comm" << YAML::Value << text::format_real(e.tol.comm);
  out << YAML::EndMap;
  out << YAML::Key << "split" << YAML::Value;
  detail::emit_split(out, e.split);
  out << YAML::Key << "levels" << YAML::Value << YAML::BeginSeq;
  for (size_t l = 0; l < e.K.size(); ++l) {
    const auto& f = e.frames[l];
    out << YAML::BeginMap;
    out << YAML::Key << "K" << YAML::Value;
    yamlio::emit_sparse(out, e.K[l]);
    out << YAML::Key << "eigenvalues" << YAML::Value;
    yamlio::emit_vector(out, f.eigenvalues);
    out << YAML::Key << "right_vectors" << YAML::Value;
    yamlio::emit_sparse(out, f.right_vectors);
    out << YAML::Key << "left_inverse" << YAML::Value;
    yamlio::emit_sparse(out, f.left_inverse);
    out << YAML::Key << "condition_estimate" << YAML::Value << text::format_real(f.condition_estimate);
    out << YAML::Key << "residual" << YAML::Value << text::format_real(f.residual);
    if (l < e.secular_tolerance.size())
      out << YAML::Key << "secular_tolerance" << YAML::Value << text::format_real(e.secular_tolerance[l]);
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::Key << "B" << YAML::Value << YAML::BeginSeq;
  for (const auto& [key, b] : e.B) {
    out << YAML::BeginMap;
    out << YAML::Key << "m" << YAML::Value << key.first;
    out << YAML::Key << "level" << YAML::Value << key.second;
    out << YAML::Key << "tolerance" << YAML::Value << text::format_real(b.tolerance());
    out << YAML::Key << "components" << YAML::Value << YAML::BeginSeq;
    for (const auto& c : b.components()) {
      out << YAML::BeginMap;
      out << YAML::Key << "rate" << YAML::Value << text::format_complex(c.rate);
      out << YAML::Key << "power" << YAML::Value << c.power;
      out << YAML::Key << "coeff" << YAML::Value;
      yamlio::emit_sparse(out, c.coeff);
      out << YAML::EndMap;
    }
    out << YAML::EndSeq << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

inline MsptExpansion expansion_from_yaml(const std::string& source) {
  YAML::Node root;
  try {
    root = YAML::Load(source);
  } catch (const YAML::ParserException& err) {
    throw ParseError("", err.msg, err.mark.line + 1, err.mark.column + 1);
  }
  if (!root.IsMap() || !root["format"] || root["format"].Scalar() != kExpansionFormat)
    throw ParseError("format", "not an expansion cache");
  if (yamlio::read_int(root["version"], "version") != kExpansionFormatVersion)
    yamlio::fail(root["version"], "version", "unsupported cache version");

  MsptExpansion e;
  const auto n = static_cast<Eigen::Index>(yamlio::read_int(root["size"], "size"));
  if (n <= 0) yamlio::fail(root["size"], "size", "size must be positive");
  e.order = static_cast<int>(yamlio::read_int(root["order"], "order"));
  const YAML::Node tol = root["tolerances"];
  e.tol.herm = yamlio::read_real(tol["herm"], "tolerances.herm");
  e.tol.trace = yamlio::read_real(tol["trace"], "tolerances.trace");
  e.tol.psd = yamlio::read_real(tol["psd"], "tolerances.psd");
  e.tol.spec = yamlio::read_real(tol["spec"], "tolerances.spec");
  e.tol.sec = yamlio::read_real(tol["sec"], "tolerances.sec");
  e.tol.kappa_max = yamlio::read_real(tol["kappa_max"], "tolerances.kappa_max");
  e.tol.comm = yamlio::read_real(tol["comm"], "tolerances.comm");
  e.split = detail::read_cached_split(root["split"], n);

  const YAML::Node levels = root["levels"];
  if (!levels.IsSequence() || static_cast<int>(levels.size()) != e.order + 1)
    yamlio::fail(levels, "levels", "expected order + 1 levels");
  for (size_t l = 0; l < levels.size(); ++l) {
    const YAML::Node lv = levels[l];
    const std::string f = "levels[" + std::to_string(l) + "]";
    e.K.push_back(yamlio::read_sparse(lv["K"], f + ".K", n, n));
    SpectralDecomposition d;
    d.eigenvalues = yamlio::read_vector(lv["eigenvalues"], f + ".eigenvalues");
    if (d.eigenvalues.size() != n) yamlio::fail(lv["eigenvalues"], f + ".eigenvalues", "wrong length");
    d.right_vectors = yamlio::read_sparse(lv["right_vectors"], f + ".right_vectors", n, n);
    d.left_inverse = yamlio::read_sparse(lv["left_inverse"], f + ".left_inverse", n, n);
    d.condition_estimate = yamlio::read_real(lv["condition_estimate"], f + ".condition_estimate");
    d.residual = yamlio::read_real(lv["residual"], f + ".residual");
    e.frames.push_back(std::move(d));
    if (lv["secular_tolerance"])
      e.secular_tolerance.push_back(yamlio::read_real(lv["secular_tolerance"], f + ".secular_tolerance"));
  }

  const YAML::Node bs = root["B"];
  if (bs.IsDefined() && bs.IsSequence())
    for (size_t k = 0; k < bs.size(); ++k) {
      const YAML::Node bn = bs[k];
      const std::string f = "B[" + std::to_string(k) + "]";
      const int m = static_cast<int>(yamlio::read_int(bn["m"], f + ".m"));
      const int l = static_cast<int>(yamlio::read_int(bn["level"], f + ".level"));
      if (m < 1 || l < 0 || m + l > e.order) yamlio::fail(bn, f, "index outside the expansion order");
      Antiderivative b(n, yamlio::read_real(bn["tolerance"], f + ".tolerance"));
      const YAML::Node comps = bn["components"];
      if (comps.IsDefined() && comps.IsSequence())
        for (size_t q = 0; q < comps.size(); ++q) {
          const std::string cf = f + ".components[" + std::to_string(q) + "]";
          FrequencyComponent c;
          c.rate = yamlio::read_complex(comps[q]["rate"], cf + ".rate");
          c.power = static_cast<int>(yamlio::read_int(comps[q]["power"], cf + ".power"));
          c.coeff = yamlio::read_sparse(comps[q]["coeff"], cf + ".coeff", n, n);
          b.add(c);
        }
      e.B.emplace(std::make_pair(m, l), std::move(b));
    }
  for (int l = 0; l < e.order; ++l)
    for (int m = 1; m + l <= e.order; ++m)
      if (!e.B.count({m, l})) throw ParseError("B", "missing B_{" + std::to_string(m) + "," + std::to_string(l) + "}");
  return e;
}

// True when a cached expansion was built from this split up to at least this order.
inline bool cache_matches(const MsptExpansion& cached, const GeneratorSplit& split, int order, const Tolerances& tol) {
  return cached.order >= order && detail::same_split(cached.split, split) && cached.tol.sec == tol.sec &&
         cached.tol.kappa_max == tol.kappa_max;
}

}  // namespace mspt
