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

#include "instances.h"

#include <algorithm>
#include <numeric>
#include <random>

namespace hyperwalk::testing {

Hypergraph SingleEdge() { return FromEdgeLists(3, {{0, 1, 2}}); }

Hypergraph Triangle() { return FromEdgeLists(3, {{0, 1}, {1, 2}, {0, 2}}); }

Hypergraph SixVertexThreeUniform() {
  return FromEdgeLists(6, {{0, 1, 2}, {3, 4, 5}, {0, 1, 3}, {2, 4, 5}});
}

RegularUniformParams RandomParams(std::uint64_t seed, int max_n, int max_dim,
                                  int k_lo, int k_hi, int d_lo, int d_hi) {
  std::mt19937_64 rng(seed);
  for (;;) {
    const int k = std::uniform_int_distribution<int>(k_lo, k_hi)(rng);
    const int d = std::uniform_int_distribution<int>(d_lo, d_hi)(rng);
    const int step = k / std::gcd(k, d);
    std::vector<int> sizes;
    for (int n = step; n <= max_n; n += step) {
      const int m = n * d / k;
      if (n >= k && m >= d && n * d <= max_dim) sizes.push_back(n);
    }
    if (sizes.empty()) continue;
    const int n = sizes[std::uniform_int_distribution<std::size_t>(
        0, sizes.size() - 1)(rng)];
    return {n, n * d / k, k, d};
  }
}

Hypergraph RandomRegularUniformInstance(std::uint64_t seed, int max_n,
                                        int max_dim) {
  const RegularUniformParams p = RandomParams(seed, max_n, max_dim);
  return RandomRegularUniform(p, seed ^ 0x9e3779b97f4a7c15ULL);
}

Hypergraph RandomIrregular(std::uint64_t seed, int max_n, int max_m) {
  std::mt19937_64 rng(seed);
  const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  const int m = std::uniform_int_distribution<int>(1, max_m)(rng);
  std::vector<std::vector<int>> edges(m);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (auto& edge : edges) {
    const int size = std::uniform_int_distribution<int>(1, n)(rng);
    std::shuffle(order.begin(), order.end(), rng);
    edge.assign(order.begin(), order.begin() + size);
  }
  // Attach every uncovered vertex to a random edge.
  std::vector<char> covered(n, 0);
  for (const auto& edge : edges)
    for (int v : edge) covered[v] = 1;
  for (int v = 0; v < n; ++v) {
    if (!covered[v]) {
      edges[std::uniform_int_distribution<int>(0, m - 1)(rng)].push_back(v);
    }
  }
  return FromEdgeLists(n, std::move(edges));
}

}  // namespace hyperwalk::testing
