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

#include "hyperwalk/hypergraph.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "hyperwalk/error.h"

namespace hyperwalk {

Hypergraph FromEdgeLists(int num_vertices, std::vector<std::vector<int>> edges) {
  if (num_vertices < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "hypergraph needs at least one vertex");
  }
  if (edges.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "hypergraph needs at least one hyperedge");
  }
  const int m = static_cast<int>(edges.size());

  Hypergraph hg;
  hg.incidence_ = Eigen::MatrixXi::Zero(num_vertices, m);
  hg.vertex_edges_.assign(num_vertices, {});
  for (int e = 0; e < m; ++e) {
    auto& members = edges[e];
    if (members.empty()) {
      throw Error(ErrorCode::kEmptyEdge,
                  "hyperedge " + std::to_string(e) + " is empty");
    }
    for (int v : members) {
      if (v < 0 || v >= num_vertices) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "hyperedge " + std::to_string(e) + " references vertex " +
                        std::to_string(v) + " outside [0, " +
                        std::to_string(num_vertices) + ")");
      }
      if (hg.incidence_(v, e) != 0) {
        throw Error(ErrorCode::kDuplicateVertex,
                    "hyperedge " + std::to_string(e) + " lists vertex " +
                        std::to_string(v) + " twice");
      }
      hg.incidence_(v, e) = 1;
      // Edges are visited in increasing order, so this stays sorted.
      hg.vertex_edges_[v].push_back(e);
    }
    std::sort(members.begin(), members.end());
    hg.num_incidences_ += static_cast<int>(members.size());
  }
  for (int v = 0; v < num_vertices; ++v) {
    if (hg.vertex_edges_[v].empty()) {
      throw Error(ErrorCode::kIsolatedVertex,
                  "vertex " + std::to_string(v) + " lies in no hyperedge");
    }
  }
  hg.edges_ = std::move(edges);
  return hg;
}

DegreeProfile ComputeDegreeProfile(const Hypergraph& hg) {
  DegreeProfile profile;
  const auto& h = hg.incidence();
  profile.vertex_degrees.resize(hg.num_vertices());
  profile.edge_degrees.resize(hg.num_edges());
  for (int v = 0; v < hg.num_vertices(); ++v) {
    profile.vertex_degrees[v] = h.row(v).sum();
  }
  for (int e = 0; e < hg.num_edges(); ++e) {
    profile.edge_degrees[e] = h.col(e).sum();
  }

  auto all_equal = [](const std::vector<int>& xs) -> std::optional<int> {
    if (std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) !=
        xs.end()) {
      return std::nullopt;
    }
    return xs.front();
  };
  profile.regular_degree = all_equal(profile.vertex_degrees);
  profile.uniform_size = all_equal(profile.edge_degrees);
  return profile;
}

BipartiteModel ToBipartite(const Hypergraph& hg) {
  const int n = hg.num_vertices();
  const int m = hg.num_edges();
  BipartiteModel model;
  model.num_vertices = n;
  model.num_edges = m;
  model.biadjacency = Eigen::MatrixXi::Zero(n + m, n + m);
  model.biadjacency.topRightCorner(n, m) = hg.incidence();
  model.biadjacency.bottomLeftCorner(m, n) = hg.incidence().transpose();
  return model;
}

bool IsConnected(const Hypergraph& hg) {
  const int n = hg.num_vertices();
  const int m = hg.num_edges();
  std::vector<char> seen_vertex(n, 0);
  std::vector<char> seen_edge(m, 0);
  std::vector<int> stack = {0};
  seen_vertex[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int e : hg.vertex_edges()[v]) {
      if (seen_edge[e]) continue;
      seen_edge[e] = 1;
      for (int u : hg.edges()[e]) {
        if (!seen_vertex[u]) {
          seen_vertex[u] = 1;
          ++reached;
          stack.push_back(u);
        }
      }
    }
  }
  // Every edge is non-empty, so reaching all vertices reaches all edges.
  return reached == n;
}

}  // namespace hyperwalk
