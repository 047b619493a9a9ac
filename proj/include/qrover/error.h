// Copyright 2026 The qrover Authors
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

#ifndef QROVER_ERROR_H_
#define QROVER_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace qrover {

enum class ErrorCode {
  kNotHermitian,
  kNotPsd,
  kDimMismatch,
  kInvalidState,
  kParse,
  kTooLarge,
  kInvalidNoise,
  kBadProbability,
  kDistributionInvalid,
  kOutOfRange,
  kTooFewClasses,
  kSolverFailure,
  kSandwichViolation,
  kNonShiftableGate,
  kInvalidArgument,
  kDiverged,
  kManifest,
  kInvalidPovm,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

/// Base exception for every recoverable failure in the library. The code is
/// stable and is what callers (and the CLI exit-code mapping) switch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& message)
      : Error(ErrorCode::kParse, std::to_string(line) + ":" +
                                     std::to_string(col) + ": " + message),
        line_(line),
        col_(col),
        detail_(message) {}

  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  int col_;
  std::string detail_;
};

}  // namespace qrover

#endif  // QROVER_ERROR_H_
