// Copyright 2026 The hyperwalk Authors.
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

#ifndef HYPERWALK_ERROR_H_
#define HYPERWALK_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperwalk {

enum class ErrorCode {
  kEmptyEdge,
  kIndexOutOfRange,
  kIsolatedVertex,
  kDuplicateVertex,
  kInfeasibleParameters,
  kGenerationFailed,
  kSyntaxError,
  kNoConvergence,
  kDimensionMismatch,
  kDimensionTooLarge,
  kInvalidTolerance,
  kCountMismatch,
  kInvalidArgument,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported as hyperwalk::Error; callers branch on
// code() rather than on message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the .hg parser; line is 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, const std::string& message)
      : Error(ErrorCode::kSyntaxError,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace hyperwalk

#endif  // HYPERWALK_ERROR_H_
