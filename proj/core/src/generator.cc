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

#include "hyperwalk/generator.h"

#include <string>
#include <vector>

#include "hyperwalk/error.h"
#include "hyperwalk/random.h"

namespace hyperwalk {
namespace {

std::string Describe(const RegularUniformParams& p) {
  return "n=" + std::to_string(p.num_vertices) +
         " m=" + std::to_string(p.num_edges) +
         " k=" + std::to_string(p.edge_size) +
         " d=" + std::to_string(p.degree);
}

// One configuration-model attempt. Slot s belongs to edge s / k and holds the
// vertex stubs[s]. Returns false when the swap budget runs out.
bool PairStubs(const RegularUniformParams& p, std::vector<int>& stubs,
               Rng& rng) {
  const int n = p.num_vertices;
  const int m = p.num_edges;
  const int k = p.edge_size;
  const int total = static_cast<int>(stubs.size());

  Shuffle(std::span<int>(stubs), rng);
  Eigen::MatrixXi count = Eigen::MatrixXi::Zero(n, m);
  for (int s = 0; s < total; ++s) ++count(stubs[s], s / k);

  long budget = 64L * total + 1024;
  int cursor = 0;
  while (true) {
    // Next slot holding a repeated incidence.
    int bad = -1;
    for (int step = 0; step < total; ++step) {
      const int s = (cursor + step) % total;
      if (count(stubs[s], s / k) > 1) {
        bad = s;
        break;
      }
    }
    if (bad < 0) return true;
    cursor = bad;

    const int vi = stubs[bad];
    const int ei = bad / k;
    bool swapped = false;
    while (budget-- > 0) {
      const int other = static_cast<int>(UniformIndex(rng, total));
      const int vj = stubs[other];
      const int ej = other / k;
      if (ej == ei || vj == vi) continue;
      if (count(vi, ej) != 0 || count(vj, ei) != 0) continue;
      --count(vi, ei);
      --count(vj, ej);
      ++count(vi, ej);
      ++count(vj, ei);
      std::swap(stubs[bad], stubs[other]);
      swapped = true;
      break;
    }
    if (!swapped) return false;
  }
}

}  // namespace

void CheckFeasible(const RegularUniformParams& p) {
  if (p.num_vertices < 1 || p.num_edges < 1 || p.edge_size < 1 ||
      p.degree < 1) {
    throw Error(ErrorCode::kInfeasibleParameters,
                "infeasible: all of n, m, k, d must be positive (" +
                    Describe(p) + ")");
  }
  if (static_cast<long>(p.num_vertices) * p.degree !=
      static_cast<long>(p.num_edges) * p.edge_size) {
    throw Error(ErrorCode::kInfeasibleParameters,
                "infeasible: n*d != m*k (" + Describe(p) + ")");
  }
  if (p.edge_size > p.num_vertices) {
    throw Error(ErrorCode::kInfeasibleParameters,
                "infeasible: k > n (" + Describe(p) + ")");
  }
  if (p.degree > p.num_edges) {
    throw Error(ErrorCode::kInfeasibleParameters,
                "infeasible: d > m (" + Describe(p) + ")");
  }
}

Hypergraph RandomRegularUniform(const RegularUniformParams& params,
                                std::uint64_t seed) {
  CheckFeasible(params);
  const int n = params.num_vertices;
  const int k = params.edge_size;
  const int d = params.degree;

  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * d);
  for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);

  Rng rng(seed);
  for (int attempt = 0; attempt < kGeneratorAttempts; ++attempt) {
    if (!PairStubs(params, stubs, rng)) continue;
    std::vector<std::vector<int>> edges(params.num_edges);
    for (int e = 0; e < params.num_edges; ++e) {
      edges[e].assign(stubs.begin() + e * k, stubs.begin() + (e + 1) * k);
    }
    return FromEdgeLists(n, std::move(edges));
  }
  throw Error(ErrorCode::kGenerationFailed,
              "no simple configuration found after " +
                  std::to_string(kGeneratorAttempts) + " attempts (" +
                  Describe(params) + ")");
}

}  // namespace hyperwalk
