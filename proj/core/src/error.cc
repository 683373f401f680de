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

#include "hyperwalk/error.h"

namespace hyperwalk {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyEdge: return "EmptyEdge";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kIsolatedVertex: return "IsolatedVertex";
    case ErrorCode::kDuplicateVertex: return "DuplicateVertex";
    case ErrorCode::kInfeasibleParameters: return "InfeasibleParameters";
    case ErrorCode::kGenerationFailed: return "GenerationFailed";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::kInvalidTolerance: return "InvalidTolerance";
    case ErrorCode::kCountMismatch: return "CountMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace hyperwalk
