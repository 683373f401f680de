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

#ifndef HYPERWALK_PAIR_SPACE_H_
#define HYPERWALK_PAIR_SPACE_H_

#include <optional>
#include <utility>
#include <vector>

#include "hyperwalk/hypergraph.h"

namespace hyperwalk {

struct IncidentPair {
  int vertex = 0;
  int edge = 0;

  friend auto operator<=>(const IncidentPair&, const IncidentPair&) = default;
};

// Computational basis of the walk space: all incident (v, e) pairs in
// lexicographic order. The edge-first basis |e, v> is identified with |v, e>
// at the same index, so both reflections act on one space of dimension
// N = sum_v d(v) = sum_e delta(e).
class PairSpace {
 public:
  explicit PairSpace(const Hypergraph& hg);

  int dimension() const { return static_cast<int>(pairs_.size()); }
  int num_vertices() const { return static_cast<int>(vertex_offset_.size()) - 1; }
  int num_edges() const { return static_cast<int>(edge_pairs_.size()); }

  const std::vector<IncidentPair>& pairs() const { return pairs_; }
  const IncidentPair& pair(int index) const { return pairs_[index]; }

  // Position of (v, e), or nullopt when v is not in e or out of range.
  std::optional<int> IndexOf(int vertex, int edge) const;

  // Pair indices [begin, end) whose vertex is v; contiguous by ordering.
  std::pair<int, int> VertexRange(int vertex) const {
    return {vertex_offset_[vertex], vertex_offset_[vertex + 1]};
  }

  // Pair indices whose edge is e, ascending.
  const std::vector<int>& EdgePairs(int edge) const { return edge_pairs_[edge]; }

 private:
  std::vector<IncidentPair> pairs_;
  std::vector<int> vertex_offset_;
  std::vector<std::vector<int>> edge_pairs_;
};

}  // namespace hyperwalk

#endif  // HYPERWALK_PAIR_SPACE_H_
