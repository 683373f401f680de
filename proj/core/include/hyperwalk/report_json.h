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

#ifndef HYPERWALK_REPORT_JSON_H_
#define HYPERWALK_REPORT_JSON_H_

#include <string>

#include "hyperwalk/spectral.h"

namespace hyperwalk {

// JSON document with fields n, m, k, d, N, connected, singular_values,
// classification, angles, predicted and actual ([{re, im, multiplicity}]),
// max_pairing_distance, max_residual, deviations, verified, verdict and the
// two tolerances. k and d are null for non-uniform / non-regular inputs;
// actual and max_pairing_distance are null when no brute-force check ran.
std::string SpectralReportToJson(const SpectralReport& report, int indent = 2);

}  // namespace hyperwalk

#endif  // HYPERWALK_REPORT_JSON_H_
