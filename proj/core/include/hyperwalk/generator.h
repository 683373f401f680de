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

#ifndef HYPERWALK_GENERATOR_H_
#define HYPERWALK_GENERATOR_H_

#include <cstdint>

#include "hyperwalk/hypergraph.h"

namespace hyperwalk {

struct RegularUniformParams {
  int num_vertices = 0;  // n
  int num_edges = 0;     // m
  int edge_size = 0;     // k
  int degree = 0;        // d
};

// Number of fresh shuffles tried before giving up.
inline constexpr int kGeneratorAttempts = 1000;

// Throws Error(kInfeasibleParameters) unless n*d == m*k, 1 <= k <= n and
// 1 <= d <= m.
void CheckFeasible(const RegularUniformParams& params);

// Samples a d-regular k-uniform hypergraph with a biregular configuration
// model: n*d vertex stubs are shuffled against m*k edge slots, and repeated
// (vertex, edge) incidences are removed with degree-preserving swaps. An
// attempt whose repair stalls is discarded and reshuffled. The result depends
// only on params and seed.
//
// Throws Error(kGenerationFailed) after kGeneratorAttempts failed attempts.
Hypergraph RandomRegularUniform(const RegularUniformParams& params,
                                std::uint64_t seed);

}  // namespace hyperwalk

#endif  // HYPERWALK_GENERATOR_H_
