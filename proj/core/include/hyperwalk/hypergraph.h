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

#ifndef HYPERWALK_HYPERGRAPH_H_
#define HYPERWALK_HYPERGRAPH_H_

#include <optional>
#include <vector>

#include <Eigen/Core>

namespace hyperwalk {

// A finite hypergraph given by its n x m binary incidence matrix.
//
// Vertices and hyperedges are 0-based. Every hyperedge is non-empty and every
// vertex lies in at least one hyperedge, so both degree matrices are
// invertible. Instances are immutable once built.
class Hypergraph {
 public:
  int num_vertices() const { return static_cast<int>(vertex_edges_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  // Total number of incident (vertex, hyperedge) pairs.
  int num_incidences() const { return num_incidences_; }

  // h(v, e) as a 0/1 integer matrix.
  const Eigen::MatrixXi& incidence() const { return incidence_; }

  // Vertices of each hyperedge, ascending.
  const std::vector<std::vector<int>>& edges() const { return edges_; }

  // Hyperedges containing each vertex, ascending.
  const std::vector<std::vector<int>>& vertex_edges() const {
    return vertex_edges_;
  }

  bool Contains(int vertex, int edge) const {
    return incidence_(vertex, edge) != 0;
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.edges_ == b.edges_ && a.vertex_edges_ == b.vertex_edges_;
  }

 private:
  friend Hypergraph FromEdgeLists(int, std::vector<std::vector<int>>);

  Eigen::MatrixXi incidence_;
  std::vector<std::vector<int>> edges_;
  std::vector<std::vector<int>> vertex_edges_;
  int num_incidences_ = 0;
};

// Builds a hypergraph on `num_vertices` vertices where edges[j] lists the
// vertices of hyperedge j. Throws Error with kEmptyEdge, kIndexOutOfRange,
// kDuplicateVertex or kIsolatedVertex.
Hypergraph FromEdgeLists(int num_vertices, std::vector<std::vector<int>> edges);

struct DegreeProfile {
  std::vector<int> vertex_degrees;
  std::vector<int> edge_degrees;
  // Set to d when every vertex has degree d.
  std::optional<int> regular_degree;
  // Set to k when every hyperedge has size k.
  std::optional<int> uniform_size;

  bool is_regular() const { return regular_degree.has_value(); }
  bool is_uniform() const { return uniform_size.has_value(); }
};

DegreeProfile ComputeDegreeProfile(const Hypergraph& hg);

// Bipartite incidence graph B(H): parts V = {0..n-1} and E = {n..n+m-1}.
struct BipartiteModel {
  int num_vertices = 0;
  int num_edges = 0;
  // (n+m) x (n+m) block matrix [[0, H], [H^T, 0]].
  Eigen::MatrixXi biadjacency;
};

BipartiteModel ToBipartite(const Hypergraph& hg);

// True when the bipartite incidence graph is connected.
bool IsConnected(const Hypergraph& hg);

}  // namespace hyperwalk

#endif  // HYPERWALK_HYPERGRAPH_H_
