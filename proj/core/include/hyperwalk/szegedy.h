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

#ifndef HYPERWALK_SZEGEDY_H_
#define HYPERWALK_SZEGEDY_H_

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "hyperwalk/classical_walk.h"
#include "hyperwalk/hypergraph.h"
#include "hyperwalk/pair_space.h"

namespace hyperwalk {

using SparseMatrix = Eigen::SparseMatrix<double>;

// A : H^n -> H^N, column v is |alpha_v> = sum_e sqrt(p_ve) |v, e>.
// B : H^m -> H^N, column e is |beta_e>  = sum_v sqrt(p_ev) |v, e>.
// Each row of A and of B holds exactly one nonzero.
struct IsometryPair {
  SparseMatrix vertex_isometry;  // A, N x n
  SparseMatrix edge_isometry;    // B, N x m
};

IsometryPair BuildIsometries(const Hypergraph& hg, const TransitionSystem& ts,
                             const PairSpace& ps);

// Unit-norm complex amplitude vector over the pair basis.
class StateVector {
 public:
  // Throws Error(kInvalidArgument) unless the norm is within 1e-12 of one.
  static StateVector FromAmplitudes(Eigen::VectorXcd amplitudes);

  // Basis state |v, e>; throws Error(kIndexOutOfRange) for a non-incident pair.
  static StateVector Basis(const PairSpace& ps, int vertex, int edge);

  // |alpha_v>, the vertex-anchored superposition.
  static StateVector VertexAnchored(const IsometryPair& iso, int vertex);

  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  int dimension() const { return static_cast<int>(amplitudes_.size()); }
  double Norm() const { return amplitudes_.norm(); }

 private:
  explicit StateVector(Eigen::VectorXcd amplitudes)
      : amplitudes_(std::move(amplitudes)) {}

  friend class WalkOperator;

  Eigen::VectorXcd amplitudes_;
};

inline constexpr int kDefaultDenseCap = 4096;

// Largest dimension for which a dense W may be built. Reads
// HYPERWALK_DENSE_CAP when set to a positive integer.
int DenseCap();

enum class Materialize {
  kAuto,    // dense iff N <= cap
  kAlways,  // throws Error(kDimensionTooLarge) if N > cap
  kNever,
};

// W = R_B R_A with R_A = 2AA^T - I and R_B = 2BB^T - I.
//
// Always usable in factored form; the dense N x N matrix exists only when
// materialized.
class WalkOperator {
 public:
  WalkOperator(IsometryPair iso, Materialize mode = Materialize::kAuto,
               int dense_cap = DenseCap());

  int dimension() const { return static_cast<int>(vertex_of_.size()); }
  const IsometryPair& isometries() const { return iso_; }

  bool has_dense() const { return dense_.has_value(); }
  // Throws Error(kDimensionTooLarge) when not materialized.
  const Eigen::MatrixXd& dense() const;

  // Factored actions on arbitrary vectors of length N.
  Eigen::VectorXcd ReflectVertices(const Eigen::VectorXcd& psi) const;  // R_A
  Eigen::VectorXcd ReflectEdges(const Eigen::VectorXcd& psi) const;     // R_B
  Eigen::VectorXcd Apply(const Eigen::VectorXcd& psi) const;            // W

  StateVector Apply(const StateVector& psi) const;

 private:
  IsometryPair iso_;
  // Row i of A is alpha_coeff_[i] at column vertex_of_[i]; likewise for B.
  std::vector<int> vertex_of_;
  std::vector<int> edge_of_;
  std::vector<double> alpha_coeff_;
  std::vector<double> beta_coeff_;
  std::optional<Eigen::MatrixXd> dense_;
};

WalkOperator BuildWalk(IsometryPair iso, Materialize mode = Materialize::kAuto,
                       int dense_cap = DenseCap());

// W psi through the two reflections. Throws Error(kDimensionMismatch).
StateVector ApplyWalk(const WalkOperator& walk, const StateVector& psi);

enum class EvolveOutput { kAllSteps, kFinalOnly };

// psi_t = W^t psi_0 by repeated factored application. With kAllSteps the
// result holds psi_0 ... psi_steps; with kFinalOnly just psi_steps.
std::vector<StateVector> Evolve(const WalkOperator& walk,
                                const StateVector& initial, int steps,
                                EvolveOutput output = EvolveOutput::kAllSteps);

// Measurement marginals over the pair basis.
Distribution VertexDistribution(const PairSpace& ps, const StateVector& psi);
Distribution EdgeDistribution(const PairSpace& ps, const StateVector& psi);

// Everything needed to run the quantum walk on one hypergraph.
struct WalkModel {
  TransitionSystem transitions;
  PairSpace pair_space;
  WalkOperator walk;
};

WalkModel BuildWalkModel(const Hypergraph& hg,
                         Materialize mode = Materialize::kAuto,
                         int dense_cap = DenseCap());

}  // namespace hyperwalk

#endif  // HYPERWALK_SZEGEDY_H_
