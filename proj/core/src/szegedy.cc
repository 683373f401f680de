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

#include "hyperwalk/szegedy.h"

#include <cmath>
#include <cstdlib>
#include <string>

#include "hyperwalk/error.h"

namespace hyperwalk {
namespace {

constexpr double kUnitNormTolerance = 1e-12;

void CheckDimension(int expected, Eigen::Index actual) {
  if (actual != expected) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector has dimension " + std::to_string(actual) +
                    ", walk space has dimension " + std::to_string(expected));
  }
}

}  // namespace

IsometryPair BuildIsometries(const Hypergraph& hg, const TransitionSystem& ts,
                             const PairSpace& ps) {
  if (ts.num_vertices() != hg.num_vertices() ||
      ts.num_edges() != hg.num_edges() ||
      ps.num_vertices() != hg.num_vertices() ||
      ps.num_edges() != hg.num_edges()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "hypergraph, transitions and pair space disagree");
  }
  const int size = ps.dimension();
  std::vector<Eigen::Triplet<double>> alpha;
  std::vector<Eigen::Triplet<double>> beta;
  alpha.reserve(size);
  beta.reserve(size);
  for (int i = 0; i < size; ++i) {
    const auto [v, e] = ps.pair(i);
    alpha.emplace_back(i, v, std::sqrt(ts.vertex_to_edge(v, e)));
    beta.emplace_back(i, e, std::sqrt(ts.edge_to_vertex(e, v)));
  }
  IsometryPair iso;
  iso.vertex_isometry.resize(size, hg.num_vertices());
  iso.vertex_isometry.setFromTriplets(alpha.begin(), alpha.end());
  iso.edge_isometry.resize(size, hg.num_edges());
  iso.edge_isometry.setFromTriplets(beta.begin(), beta.end());
  return iso;
}

StateVector StateVector::FromAmplitudes(Eigen::VectorXcd amplitudes) {
  const double norm = amplitudes.norm();
  if (!(std::abs(norm - 1.0) <= kUnitNormTolerance)) {
    throw Error(ErrorCode::kInvalidArgument,
                "state norm is " + std::to_string(norm) + ", expected 1");
  }
  return StateVector(std::move(amplitudes));
}

StateVector StateVector::Basis(const PairSpace& ps, int vertex, int edge) {
  const auto index = ps.IndexOf(vertex, edge);
  if (!index) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "(" + std::to_string(vertex) + ", " + std::to_string(edge) +
                    ") is not an incident pair");
  }
  Eigen::VectorXcd amplitudes = Eigen::VectorXcd::Zero(ps.dimension());
  amplitudes[*index] = 1.0;
  return StateVector(std::move(amplitudes));
}

StateVector StateVector::VertexAnchored(const IsometryPair& iso, int vertex) {
  if (vertex < 0 || vertex >= iso.vertex_isometry.cols()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "vertex " + std::to_string(vertex) + " out of range");
  }
  Eigen::VectorXd column = iso.vertex_isometry.col(vertex);
  return StateVector(column.cast<std::complex<double>>());
}

int DenseCap() {
  if (const char* raw = std::getenv("HYPERWALK_DENSE_CAP")) {
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0 && value <= (1L << 30)) {
      return static_cast<int>(value);
    }
  }
  return kDefaultDenseCap;
}

WalkOperator::WalkOperator(IsometryPair iso, Materialize mode, int dense_cap)
    : iso_(std::move(iso)) {
  const auto& a = iso_.vertex_isometry;
  const auto& b = iso_.edge_isometry;
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "isometries map into spaces of different dimension");
  }
  const int size = static_cast<int>(a.rows());
  vertex_of_.assign(size, -1);
  edge_of_.assign(size, -1);
  alpha_coeff_.assign(size, 0.0);
  beta_coeff_.assign(size, 0.0);
  for (int col = 0; col < a.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(a, col); it; ++it) {
      vertex_of_[it.row()] = col;
      alpha_coeff_[it.row()] = it.value();
    }
  }
  for (int col = 0; col < b.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(b, col); it; ++it) {
      edge_of_[it.row()] = col;
      beta_coeff_[it.row()] = it.value();
    }
  }

  const bool want_dense =
      mode == Materialize::kAlways ||
      (mode == Materialize::kAuto && size <= dense_cap);
  if (!want_dense) return;
  if (size > dense_cap) {
    throw Error(ErrorCode::kDimensionTooLarge,
                "dense walk operator requested for N=" + std::to_string(size) +
                    " above cap " + std::to_string(dense_cap));
  }
  // W = (2BB^T - I)(2AA^T - I) = 4 B (B^T A) A^T - 2AA^T - 2BB^T + I.
  const Eigen::MatrixXd overlap = Eigen::MatrixXd(b.transpose() * a);
  const Eigen::MatrixXd b_overlap = b * overlap;
  Eigen::MatrixXd w = 4.0 * (b_overlap * a.transpose());
  w -= 2.0 * Eigen::MatrixXd(a * a.transpose());
  w -= 2.0 * Eigen::MatrixXd(b * b.transpose());
  w.diagonal().array() += 1.0;
  dense_ = std::move(w);
}

const Eigen::MatrixXd& WalkOperator::dense() const {
  if (!dense_) {
    throw Error(ErrorCode::kDimensionTooLarge,
                "walk operator was not materialized (N=" +
                    std::to_string(dimension()) + ")");
  }
  return *dense_;
}

Eigen::VectorXcd WalkOperator::ReflectVertices(
    const Eigen::VectorXcd& psi) const {
  CheckDimension(dimension(), psi.size());
  Eigen::VectorXcd projected =
      Eigen::VectorXcd::Zero(iso_.vertex_isometry.cols());
  for (int i = 0; i < dimension(); ++i) {
    projected[vertex_of_[i]] += alpha_coeff_[i] * psi[i];
  }
  Eigen::VectorXcd out(dimension());
  for (int i = 0; i < dimension(); ++i) {
    out[i] = 2.0 * alpha_coeff_[i] * projected[vertex_of_[i]] - psi[i];
  }
  return out;
}

Eigen::VectorXcd WalkOperator::ReflectEdges(const Eigen::VectorXcd& psi) const {
  CheckDimension(dimension(), psi.size());
  Eigen::VectorXcd projected =
      Eigen::VectorXcd::Zero(iso_.edge_isometry.cols());
  for (int i = 0; i < dimension(); ++i) {
    projected[edge_of_[i]] += beta_coeff_[i] * psi[i];
  }
  Eigen::VectorXcd out(dimension());
  for (int i = 0; i < dimension(); ++i) {
    out[i] = 2.0 * beta_coeff_[i] * projected[edge_of_[i]] - psi[i];
  }
  return out;
}

Eigen::VectorXcd WalkOperator::Apply(const Eigen::VectorXcd& psi) const {
  return ReflectEdges(ReflectVertices(psi));
}

StateVector WalkOperator::Apply(const StateVector& psi) const {
  return StateVector(Apply(psi.amplitudes()));
}

WalkOperator BuildWalk(IsometryPair iso, Materialize mode, int dense_cap) {
  return WalkOperator(std::move(iso), mode, dense_cap);
}

StateVector ApplyWalk(const WalkOperator& walk, const StateVector& psi) {
  return walk.Apply(psi);
}

std::vector<StateVector> Evolve(const WalkOperator& walk,
                                const StateVector& initial, int steps,
                                EvolveOutput output) {
  if (steps < 0) {
    throw Error(ErrorCode::kInvalidArgument, "steps must be non-negative");
  }
  CheckDimension(walk.dimension(), initial.dimension());
  std::vector<StateVector> states;
  if (output == EvolveOutput::kAllSteps) states.reserve(steps + 1);
  StateVector current = initial;
  for (int t = 0; t < steps; ++t) {
    if (output == EvolveOutput::kAllSteps) states.push_back(current);
    current = walk.Apply(current);
  }
  states.push_back(std::move(current));
  return states;
}

Distribution VertexDistribution(const PairSpace& ps, const StateVector& psi) {
  CheckDimension(ps.dimension(), psi.dimension());
  Eigen::VectorXd p = Eigen::VectorXd::Zero(ps.num_vertices());
  for (int i = 0; i < ps.dimension(); ++i) {
    p[ps.pair(i).vertex] += std::norm(psi.amplitudes()[i]);
  }
  return MakeDistributionUnchecked(std::move(p));
}

Distribution EdgeDistribution(const PairSpace& ps, const StateVector& psi) {
  CheckDimension(ps.dimension(), psi.dimension());
  Eigen::VectorXd p = Eigen::VectorXd::Zero(ps.num_edges());
  for (int i = 0; i < ps.dimension(); ++i) {
    p[ps.pair(i).edge] += std::norm(psi.amplitudes()[i]);
  }
  return MakeDistributionUnchecked(std::move(p));
}

WalkModel BuildWalkModel(const Hypergraph& hg, Materialize mode,
                         int dense_cap) {
  TransitionSystem ts = BuildTransitions(hg);
  PairSpace ps(hg);
  IsometryPair iso = BuildIsometries(hg, ts, ps);
  WalkOperator walk = BuildWalk(std::move(iso), mode, dense_cap);
  return WalkModel{std::move(ts), std::move(ps), std::move(walk)};
}

}  // namespace hyperwalk
