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

#include <stdexcept>
#include <string>

namespace mspt {

enum class ErrorKind {
  LengthNotSquare,
  NonHermitianInput,
  DimensionMismatch,
  NegativeRate,
  DefectiveGenerator,
  PolynomialSecularTerm,
  OrderOutOfRange,
  StepSizeUnderflow,
  NonFiniteState,
  UnsupportedLevel,
  NonCommutingFrame,
  UnphysicalState,
  ParseError,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::LengthNotSquare: return "LengthNotSquare";
    case ErrorKind::NonHermitianInput: return "NonHermitianInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NegativeRate: return "NegativeRate";
    case ErrorKind::DefectiveGenerator: return "DefectiveGenerator";
    case ErrorKind::PolynomialSecularTerm: return "PolynomialSecularTerm";
    case ErrorKind::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorKind::StepSizeUnderflow: return "StepSizeUnderflow";
    case ErrorKind::NonFiniteState: return "NonFiniteState";
    case ErrorKind::UnsupportedLevel: return "UnsupportedLevel";
    case ErrorKind::NonCommutingFrame: return "NonCommutingFrame";
    case ErrorKind::UnphysicalState: return "UnphysicalState";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

// Base of every library failure; kind() allows switch-style dispatch.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define MSPT_DEFINE_ERROR(Name)                                              \
  class Name : public Error {                                                \
   public:                                                                   \
    explicit Name(const std::string& what) : Error(ErrorKind::Name, what) {} \
  };

MSPT_DEFINE_ERROR(LengthNotSquare)
MSPT_DEFINE_ERROR(NonHermitianInput)
MSPT_DEFINE_ERROR(DimensionMismatch)
MSPT_DEFINE_ERROR(NegativeRate)
MSPT_DEFINE_ERROR(DefectiveGenerator)
MSPT_DEFINE_ERROR(OrderOutOfRange)
MSPT_DEFINE_ERROR(StepSizeUnderflow)
MSPT_DEFINE_ERROR(NonFiniteState)
MSPT_DEFINE_ERROR(UnsupportedLevel)
MSPT_DEFINE_ERROR(NonCommutingFrame)
MSPT_DEFINE_ERROR(UnphysicalState)

#undef MSPT_DEFINE_ERROR

// A zero-frequency component carrying a t^k prefactor (k >= 1).
class PolynomialSecularTerm : public Error {
 public:
  PolynomialSecularTerm(const std::string& what, int order = -1, int level = -1)
      : Error(ErrorKind::PolynomialSecularTerm, what), order_(order), level_(level) {}
  int order() const noexcept { return order_; }
  int level() const noexcept { return level_; }

 private:
  int order_;
  int level_;
};

// Scenario input failure; line and column are 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& field, const std::string& what, int line = 0, int column = 0)
      : Error(ErrorKind::ParseError, format(field, what, line, column)),
        field_(field), line_(line), column_(column) {}
  const std::string& field() const noexcept { return field_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& field, const std::string& what, int line, int column) {
    std::string s;
    if (line > 0) s += "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
    if (!field.empty()) s += "field '" + field + "': ";
    return s + what;
  }
  std::string field_;
  int line_;
  int column_;
};

}  // namespace mspt
