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

#include "hyperwalk/pair_space.h"

#include <algorithm>

namespace hyperwalk {

PairSpace::PairSpace(const Hypergraph& hg) {
  pairs_.reserve(hg.num_incidences());
  vertex_offset_.reserve(hg.num_vertices() + 1);
  edge_pairs_.assign(hg.num_edges(), {});
  for (int v = 0; v < hg.num_vertices(); ++v) {
    vertex_offset_.push_back(static_cast<int>(pairs_.size()));
    for (int e : hg.vertex_edges()[v]) {
      edge_pairs_[e].push_back(static_cast<int>(pairs_.size()));
      pairs_.push_back({v, e});
    }
  }
  vertex_offset_.push_back(static_cast<int>(pairs_.size()));
}

std::optional<int> PairSpace::IndexOf(int vertex, int edge) const {
  if (vertex < 0 || vertex >= num_vertices()) return std::nullopt;
  const auto first = pairs_.begin() + vertex_offset_[vertex];
  const auto last = pairs_.begin() + vertex_offset_[vertex + 1];
  const IncidentPair key{vertex, edge};
  const auto it = std::lower_bound(first, last, key);
  if (it == last || *it != key) return std::nullopt;
  return static_cast<int>(it - pairs_.begin());
}

}  // namespace hyperwalk
