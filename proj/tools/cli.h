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

#ifndef HYPERWALK_TOOLS_CLI_H_
#define HYPERWALK_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperwalk::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

// Runs the hyperwalk command line; args excludes the program name. Output
// not redirected with --out goes to `out`, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// 17 significant digits.
std::string FormatDouble(double value);

}  // namespace hyperwalk::cli

#endif  // HYPERWALK_TOOLS_CLI_H_
