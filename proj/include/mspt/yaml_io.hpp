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

#include <yaml-cpp/yaml.h>

#include "mspt/errors.hpp"
#include "mspt/text.hpp"
#include "mspt/types.hpp"

namespace mspt::yamlio {

[[noreturn]] inline void fail(const YAML::Node& node, const std::string& field, const std::string& what) {
  const YAML::Mark m = node.IsDefined() ? node.Mark() : YAML::Mark::null_mark();
  if (m.is_null()) throw ParseError(field, what);
  throw ParseError(field, what, m.line + 1, m.column + 1);
}

inline std::string scalar(const YAML::Node& node, const std::string& field) {
  if (!node.IsDefined() || node.IsNull()) throw ParseError(field, "missing value");
  if (!node.IsScalar()) fail(node, field, "expected a scalar");
  return node.Scalar();
}

inline double read_real(const YAML::Node& node, const std::string& field) {
  const auto s = scalar(node, field);
  const auto v = text::parse_real(s);
  if (!v || !std::isfinite(*v)) fail(node, field, "'" + s + "' is not a finite real number");
  return *v;
}

inline long long read_int(const YAML::Node& node, const std::string& field) {
  const auto s = scalar(node, field);
  size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) fail(node, field, "'" + s + "' is not an integer");
  return v;
}

inline Complex read_complex(const YAML::Node& node, const std::string& field) {
  const auto s = scalar(node, field);
  const auto v = text::parse_complex(s);
  if (!v || !std::isfinite(v->real()) || !std::isfinite(v->imag()))
    fail(node, field, "'" + s + "' is not a complex number of the form a+bi");
  return *v;
}

inline bool read_bool(const YAML::Node& node, const std::string& field) {
  const auto s = scalar(node, field);
  if (s == "true" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "no" || s == "off") return false;
  fail(node, field, "'" + s + "' is not a boolean");
}

// Dense matrix as a list of rows.
inline Matrix read_matrix(const YAML::Node& node, const std::string& field) {
  if (!node.IsDefined() || node.IsNull()) throw ParseError(field, "missing matrix");
  if (!node.IsSequence() || node.size() == 0) fail(node, field, "expected a non-empty list of rows");
  const auto rows = static_cast<Eigen::Index>(node.size());
  Eigen::Index cols = -1;
  Matrix m;
  for (Eigen::Index r = 0; r < rows; ++r) {
    const YAML::Node row = node[static_cast<size_t>(r)];
    const std::string rf = field + "[" + std::to_string(r) + "]";
    if (!row.IsSequence()) fail(row, rf, "expected a list of entries");
    if (cols < 0) {
      cols = static_cast<Eigen::Index>(row.size());
      m.resize(rows, cols);
    } else if (static_cast<Eigen::Index>(row.size()) != cols) {
      fail(row, rf, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
    }
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = read_complex(row[static_cast<size_t>(c)], rf + "[" + std::to_string(c) + "]");
  }
  return m;
}

inline Matrix read_square(const YAML::Node& node, const std::string& field, Eigen::Index dim) {
  Matrix m = read_matrix(node, field);
  if (m.rows() != m.cols()) fail(node, field, "matrix is not square");
  if (dim > 0 && m.rows() != dim)
    throw DimensionMismatch("field '" + field + "' is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                            ", expected " + std::to_string(dim) + "x" + std::to_string(dim));
  return m;
}

// Nonzero entries as [row, col, "a+bi"] triples.
inline Matrix read_sparse(const YAML::Node& node, const std::string& field, Eigen::Index rows, Eigen::Index cols) {
  Matrix m = Matrix::Zero(rows, cols);
  if (!node.IsDefined() || node.IsNull()) return m;
  if (!node.IsSequence()) fail(node, field, "expected a list of [row, col, value] entries");
  for (size_t k = 0; k < node.size(); ++k) {
    const YAML::Node e = node[k];
    const std::string ef = field + "[" + std::to_string(k) + "]";
    if (!e.IsSequence() || e.size() != 3) fail(e, ef, "expected [row, col, value]");
    const auto r = read_int(e[0], ef);
    const auto c = read_int(e[1], ef);
    if (r < 0 || r >= rows || c < 0 || c >= cols) fail(e, ef, "index out of range");
    m(r, c) = read_complex(e[2], ef);
  }
  return m;
}

inline void emit_matrix(YAML::Emitter& out, const Matrix& m) {
  out << YAML::BeginSeq;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out << YAML::Flow << YAML::BeginSeq;
    for (Eigen::Index c = 0; c < m.cols(); ++c) out << text::format_complex(m(r, c));
    out << YAML::EndSeq;
  }
  out << YAML::EndSeq;
}

inline void emit_sparse(YAML::Emitter& out, const Matrix& m) {
  out << YAML::BeginSeq;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (m(r, c) != Complex{0.0, 0.0})
        out << YAML::Flow << YAML::BeginSeq << r << c << text::format_complex(m(r, c)) << YAML::EndSeq;
  out << YAML::EndSeq;
}

inline void emit_vector(YAML::Emitter& out, const Vector& v) {
  out << YAML::Flow << YAML::BeginSeq;
  for (Eigen::Index i = 0; i < v.size(); ++i) out << text::format_complex(v(i));
  out << YAML::EndSeq;
}

inline Vector read_vector(const YAML::Node& node, const std::string& field) {
  if (!node.IsSequence()) fail(node, field, "expected a list");
  Vector v(static_cast<Eigen::Index>(node.size()));
  for (size_t i = 0; i < node.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = read_complex(node[i], field + "[" + std::to_string(i) + "]");
  return v;
}

}  // namespace mspt::yamlio
