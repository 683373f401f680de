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

#include "hyperwalk/classical_walk.h"

#include <cmath>
#include <string>

#include <Eigen/SparseCore>

#include "hyperwalk/error.h"
#include "hyperwalk/random.h"

namespace hyperwalk {
namespace {

constexpr double kUnitSumTolerance = 1e-12;

// Strong connectivity of the support graph of a square non-negative matrix.
bool IsIrreducible(const Eigen::MatrixXd& chain) {
  const Eigen::Index size = chain.rows();
  auto reaches_all = [&](bool transpose) {
    std::vector<char> seen(size, 0);
    std::vector<Eigen::Index> stack = {0};
    seen[0] = 1;
    Eigen::Index reached = 1;
    while (!stack.empty()) {
      const Eigen::Index i = stack.back();
      stack.pop_back();
      for (Eigen::Index j = 0; j < size; ++j) {
        const double w = transpose ? chain(j, i) : chain(i, j);
        if (w > 0.0 && !seen[j]) {
          seen[j] = 1;
          ++reached;
          stack.push_back(j);
        }
      }
    }
    return reached == size;
  };
  return reaches_all(false) && reaches_all(true);
}

int SampleRow(const Eigen::MatrixXd& matrix, int row, Rng& rng) {
  const double u = UnitDouble(rng);
  double acc = 0.0;
  int last_positive = -1;
  for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
    const double p = matrix(row, j);
    if (p <= 0.0) continue;
    last_positive = static_cast<int>(j);
    acc += p;
    if (u < acc) return last_positive;
  }
  // Rounding left acc slightly below one.
  return last_positive;
}

}  // namespace

TransitionSystem BuildTransitions(const Hypergraph& hg) {
  const Eigen::MatrixXd h = hg.incidence().cast<double>();
  const Eigen::VectorXd vertex_degree = h.rowwise().sum();
  const Eigen::VectorXd edge_degree = h.colwise().sum().transpose();

  TransitionSystem ts;
  ts.vertex_to_edge = vertex_degree.cwiseInverse().asDiagonal() * h;
  ts.edge_to_vertex = edge_degree.cwiseInverse().asDiagonal() * h.transpose();
  // Both factors have N nonzeros; multiply sparse, store dense.
  const Eigen::SparseMatrix<double> ve = ts.vertex_to_edge.sparseView();
  const Eigen::SparseMatrix<double> ev = ts.edge_to_vertex.sparseView();
  ts.vertex_chain = Eigen::MatrixXd(ve * ev);
  ts.edge_chain = Eigen::MatrixXd(ev * ve);
  return ts;
}

Distribution::Distribution(Eigen::VectorXd probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.size() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "empty distribution");
  }
  if ((probabilities_.array() < 0.0).any()) {
    throw Error(ErrorCode::kInvalidArgument,
                "distribution has a negative entry");
  }
  const double sum = probabilities_.sum();
  if (!(std::abs(sum - 1.0) <= kUnitSumTolerance)) {
    throw Error(ErrorCode::kInvalidArgument,
                "distribution sums to " + std::to_string(sum));
  }
}

Distribution Distribution::Uniform(int size) {
  return Distribution(Eigen::VectorXd::Constant(size, 1.0 / size), Unchecked{});
}

Distribution Distribution::PointMass(int size, int index) {
  if (index < 0 || index >= size) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "point mass index " + std::to_string(index) + " outside [0, " +
                    std::to_string(size) + ")");
  }
  Eigen::VectorXd p = Eigen::VectorXd::Zero(size);
  p[index] = 1.0;
  return Distribution(std::move(p), Unchecked{});
}

Distribution MakeDistributionUnchecked(Eigen::VectorXd probabilities) {
  return Distribution(std::move(probabilities), Distribution::Unchecked{});
}

StationaryResult StationaryDistribution(const TransitionSystem& ts,
                                        Chain which) {
  const Eigen::MatrixXd& chain =
      which == Chain::kVertex ? ts.vertex_chain : ts.edge_chain;
  const Eigen::Index size = chain.rows();
  const Eigen::MatrixXd chain_t = chain.transpose();

  Eigen::VectorXd current = Eigen::VectorXd::Constant(size, 1.0 / size);
  for (int it = 1; it <= kStationaryMaxIterations; ++it) {
    Eigen::VectorXd next = chain_t * current;
    const double change = (next - current).cwiseAbs().maxCoeff();
    current = std::move(next);
    if (change < kStationaryTolerance) {
      current /= current.sum();
      return StationaryResult{MakeDistributionUnchecked(std::move(current)), it,
                              IsIrreducible(chain)};
    }
  }
  throw Error(ErrorCode::kNoConvergence,
              "power iteration did not converge in " +
                  std::to_string(kStationaryMaxIterations) + " iterations");
}

Distribution ClassicalStep(const TransitionSystem& ts,
                           const Distribution& dist) {
  if (dist.size() != ts.num_vertices()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "distribution has " + std::to_string(dist.size()) +
                    " entries, chain has " +
                    std::to_string(ts.num_vertices()) + " vertices");
  }
  Eigen::VectorXd next = ts.vertex_chain.transpose() * dist.probabilities();
  return MakeDistributionUnchecked(std::move(next));
}

std::vector<int> SampleTrajectory(const TransitionSystem& ts, int start_vertex,
                                  int steps, std::uint64_t seed) {
  if (start_vertex < 0 || start_vertex >= ts.num_vertices()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "start vertex " + std::to_string(start_vertex) +
                    " out of range");
  }
  if (steps < 0) {
    throw Error(ErrorCode::kInvalidArgument, "steps must be non-negative");
  }
  Rng rng(seed);
  std::vector<int> path;
  path.reserve(2 * static_cast<std::size_t>(steps) + 1);
  int v = start_vertex;
  path.push_back(v);
  for (int t = 0; t < steps; ++t) {
    const int e = SampleRow(ts.vertex_to_edge, v, rng);
    v = SampleRow(ts.edge_to_vertex, e, rng);
    path.push_back(e);
    path.push_back(v);
  }
  return path;
}

}  // namespace hyperwalk
