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

#ifndef HYPERWALK_CLASSICAL_WALK_H_
#define HYPERWALK_CLASSICAL_WALK_H_

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "hyperwalk/hypergraph.h"

namespace hyperwalk {

// The two-step random walk vertex -> hyperedge -> vertex.
//
//   P_VE = D_v^-1 H      (n x m, p_ve = h(v,e) / d(v))
//   P_EV = D_e^-1 H^T    (m x n, p_ev = h(v,e) / delta(e))
//   P    = P_VE P_EV     (vertex chain)
//   Q    = P_EV P_VE     (edge chain)
struct TransitionSystem {
  Eigen::MatrixXd vertex_to_edge;  // P_VE
  Eigen::MatrixXd edge_to_vertex;  // P_EV
  Eigen::MatrixXd vertex_chain;    // P
  Eigen::MatrixXd edge_chain;      // Q

  int num_vertices() const { return static_cast<int>(vertex_to_edge.rows()); }
  int num_edges() const { return static_cast<int>(vertex_to_edge.cols()); }
};

TransitionSystem BuildTransitions(const Hypergraph& hg);

// Non-negative probability vector with unit sum.
class Distribution {
 public:
  // Throws Error(kInvalidArgument) on negative entries or when the sum is not
  // within 1e-12 of one.
  explicit Distribution(Eigen::VectorXd probabilities);

  static Distribution Uniform(int size);
  static Distribution PointMass(int size, int index);

  const Eigen::VectorXd& probabilities() const { return probabilities_; }
  int size() const { return static_cast<int>(probabilities_.size()); }
  double operator[](int i) const { return probabilities_[i]; }

 private:
  struct Unchecked {};
  Distribution(Eigen::VectorXd probabilities, Unchecked)
      : probabilities_(std::move(probabilities)) {}

  friend Distribution MakeDistributionUnchecked(Eigen::VectorXd);

  Eigen::VectorXd probabilities_;
};

// Builds a distribution from values already known to be stochastic up to
// rounding, e.g. the output of a stochastic matrix product.
Distribution MakeDistributionUnchecked(Eigen::VectorXd probabilities);

enum class Chain { kVertex, kEdge };

inline constexpr double kStationaryTolerance = 1e-12;
inline constexpr int kStationaryMaxIterations = 100000;

struct StationaryResult {
  Distribution distribution;
  int iterations = 0;
  // False when the chain's support graph is not strongly connected; the
  // fixed point is then one of many and depends on the uniform start.
  bool unique = true;
};

// Power iteration from the uniform vector until successive iterates differ by
// less than kStationaryTolerance in max-norm. Throws Error(kNoConvergence)
// after kStationaryMaxIterations.
StationaryResult StationaryDistribution(const TransitionSystem& ts,
                                        Chain which);

// One vertex-chain step: returns dist^T P.
Distribution ClassicalStep(const TransitionSystem& ts, const Distribution& dist);

// Samples v0, e0, v1, e1, ..., v_steps (length 2*steps + 1): each hyperedge is
// drawn from row v of P_VE and each vertex from row e of P_EV.
std::vector<int> SampleTrajectory(const TransitionSystem& ts, int start_vertex,
                                  int steps, std::uint64_t seed);

}  // namespace hyperwalk

#endif  // HYPERWALK_CLASSICAL_WALK_H_
