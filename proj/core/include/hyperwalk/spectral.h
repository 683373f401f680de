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

#ifndef HYPERWALK_SPECTRAL_H_
#define HYPERWALK_SPECTRAL_H_

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "hyperwalk/classical_walk.h"
#include "hyperwalk/hypergraph.h"
#include "hyperwalk/szegedy.h"

namespace hyperwalk {

using Complex = std::complex<double>;

inline constexpr double kDefaultClassificationTolerance = 1e-9;
inline constexpr double kDefaultVerificationTolerance = 1e-8;
inline constexpr double kMaxTolerance = 1e-3;

// n x m matrix with entries sqrt(p_ve * p_ev); equals A^T B.
struct Discriminant {
  Eigen::MatrixXd matrix;
};

Discriminant ComputeDiscriminant(const TransitionSystem& ts);

// Full SVD D = U S V^T with complete orthogonal U (n x n) and V (m x m).
// singular_values has min(n, m) entries in non-increasing order. Columns of U
// past min(n, m) span ker(D^T); columns of V past min(n, m) span ker(D).
struct SvdResult {
  Eigen::VectorXd singular_values;
  Eigen::MatrixXd left;   // U, columns mu_k
  Eigen::MatrixXd right;  // V, columns nu_k
  // The decomposition was computed on D^T (n < m) and mapped back.
  bool transposed = false;
};

SvdResult FullSvd(const Discriminant& d);

enum class SingularClass { kUnit, kInterior, kNull };

std::string_view SingularClassName(SingularClass c);

// Classifies sigma: unit when sigma >= 1 - tol, null when sigma <= tol.
SingularClass Classify(double sigma, double tol);

// Eigen-system of W assembled from the SVD of D.
//
// For every singular triple (sigma, mu, nu), with a = A mu and b = B nu:
//   interior: e^{+2i theta} with (a - e^{+i theta} b) / (sqrt(2) sin theta)
//             e^{-2i theta} with (a - e^{-i theta} b) / (sqrt(2) sin theta)
//   unit:     +1 with a (here a == b)
//   null:     -1 twice, with a and b
// Each unpaired column of U (n > m) gives -1 with A mu; each unpaired column
// of V (m > n) gives -1 with B nu. The orthogonal complement of
// H_A + H_B, of dimension N - (n + m - #unit), is the +1 eigenspace of
// W = (-I)(-I) there.
struct Prediction {
  std::vector<SingularClass> classification;
  std::vector<double> angles;  // theta_k = arccos(sigma_k)
  std::vector<Complex> eigenvalues;
  // Column j pairs with eigenvalues[j]. Complement columns are omitted when
  // complement_vectors is false.
  Eigen::MatrixXcd eigenvectors;
  bool complement_vectors = true;

  int num_unit = 0;
  int num_interior = 0;
  int num_null = 0;
  int num_unpaired = 0;
  int num_complement = 0;
};

// Throws Error(kInvalidTolerance) unless tol is in (0, 1e-3], and
// Error(kCountMismatch) if the multiplicities cannot add up to N.
// Complement eigenvectors are built only when N <= vector_cap.
Prediction PredictSpectrum(const SvdResult& svd, const IsometryPair& iso,
                           double tol = kDefaultClassificationTolerance,
                           int vector_cap = DenseCap());

struct BruteForceSpectrum {
  std::vector<Complex> eigenvalues;
  // max | |lambda| - 1 | over all eigenvalues.
  double max_modulus_deviation = 0.0;
  // max ||W v - lambda v|| over normalized solver eigenvectors.
  double max_residual = 0.0;
};

// General real eigen-decomposition of the dense W. Throws
// Error(kDimensionTooLarge) when W was not materialized.
BruteForceSpectrum ComputeBruteForceSpectrum(const WalkOperator& walk,
                                             bool with_vectors = true);

// Pairs two multisets on the unit circle by sorting each on argument in
// (-pi, pi], values within 1e-9 of -1 counted at +pi, and returns the largest
// distance between paired entries. Throws Error(kCountMismatch) when the
// sizes differ.
double MaxPairingDistance(std::vector<Complex> predicted,
                          std::vector<Complex> actual);

// max ||W x - lambda x|| over the predicted eigenpairs.
double MaxPredictionResidual(const Prediction& prediction,
                             const WalkOperator& walk);

struct Verification {
  double max_pairing_distance = 0.0;
  double max_residual = 0.0;
  bool pass = false;
};

// Passes iff the pairing distance and every predicted-eigenvector residual
// are <= tol. Throws Error(kCountMismatch) or Error(kInvalidTolerance).
Verification Verify(const Prediction& prediction,
                    const std::vector<Complex>& actual,
                    const WalkOperator& walk,
                    double tol = kDefaultVerificationTolerance);

struct EigenvalueGroup {
  Complex value;
  int multiplicity = 0;
};

// Sorts by argument and merges neighbours closer than tol.
std::vector<EigenvalueGroup> GroupEigenvalues(std::vector<Complex> values,
                                              double tol);

enum class Verdict { kPass, kFail, kUnverified };

std::string_view VerdictName(Verdict v);

struct SpectralReport {
  int num_vertices = 0;
  int num_edges = 0;
  std::optional<int> edge_size;  // k, when uniform
  std::optional<int> degree;     // d, when regular
  int dimension = 0;             // N
  bool connected = false;

  std::vector<double> singular_values;
  std::vector<SingularClass> classification;
  std::vector<double> angles;
  std::vector<EigenvalueGroup> predicted;
  std::optional<std::vector<EigenvalueGroup>> actual;
  std::optional<double> max_pairing_distance;
  double max_residual = 0.0;
  std::vector<std::string> deviations;
  Verdict verdict = Verdict::kFail;

  double classification_tolerance = kDefaultClassificationTolerance;
  double verification_tolerance = kDefaultVerificationTolerance;
};

struct AnalysisOptions {
  double classification_tolerance = kDefaultClassificationTolerance;
  double verification_tolerance = kDefaultVerificationTolerance;
  int dense_cap = DenseCap();
};

// Full pipeline: transitions, isometries, SVD, prediction and, when
// N <= dense_cap, the brute-force cross-check.
SpectralReport AnalyzeSpectrum(const Hypergraph& hg,
                               const AnalysisOptions& options = {});

}  // namespace hyperwalk

#endif  // HYPERWALK_SPECTRAL_H_
