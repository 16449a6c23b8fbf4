// Copyright 2026 The tapes Authors
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

namespace tapes {

enum class ErrorKind {
  UnknownSort,
  UnknownGenerator,
  UnknownOp,
  OutOfContext,
  ArityMismatch,
  TypeMismatch,
  ParamOutOfRange,
  DimensionMismatch,
  Syntax,
  Resolution,
};

/// Base error for every failure reported by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* kindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownSort:
      return "unknown sort";
    case ErrorKind::UnknownGenerator:
      return "unknown generator";
    case ErrorKind::UnknownOp:
      return "unknown operation";
    case ErrorKind::OutOfContext:
      return "variable out of context";
    case ErrorKind::ArityMismatch:
      return "arity mismatch";
    case ErrorKind::TypeMismatch:
      return "type mismatch";
    case ErrorKind::ParamOutOfRange:
      return "parameter out of range";
    case ErrorKind::DimensionMismatch:
      return "dimension mismatch";
    case ErrorKind::Syntax:
      return "syntax error";
    case ErrorKind::Resolution:
      return "resolution error";
  }
  return "error";
}

}  // namespace tapes
