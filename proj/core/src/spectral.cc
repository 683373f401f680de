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

#include "hyperwalk/spectral.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "hyperwalk/error.h"

namespace hyperwalk {
namespace {

void CheckTolerance(double tol) {
  if (!(tol > 0.0 && tol <= kMaxTolerance)) {
    throw Error(ErrorCode::kInvalidTolerance,
                "tolerance " + std::to_string(tol) + " outside (0, 1e-3]");
  }
}

// Sort key on the unit circle; -1 always lands at +pi.
double ArgumentKey(Complex z) {
  if (std::abs(z + 1.0) <= 1e-9) return std::numbers::pi;
  return std::arg(z);
}

void SortByArgument(std::vector<Complex>& values) {
  std::sort(values.begin(), values.end(), [](Complex a, Complex b) {
    const double ka = ArgumentKey(a);
    const double kb = ArgumentKey(b);
    if (ka != kb) return ka < kb;
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

}  // namespace

Discriminant ComputeDiscriminant(const TransitionSystem& ts) {
  Discriminant d;
  d.matrix = (ts.vertex_to_edge.array() * ts.edge_to_vertex.transpose().array())
                 .sqrt()
                 .matrix();
  return d;
}

SvdResult FullSvd(const Discriminant& d) {
  const Eigen::MatrixXd& mat = d.matrix;
  SvdResult result;
  result.transposed = mat.rows() < mat.cols();
  const Eigen::MatrixXd tall =
      result.transposed ? Eigen::MatrixXd(mat.transpose()) : mat;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(tall,
                                     Eigen::ComputeFullU | Eigen::ComputeFullV);
  result.singular_values = svd.singularValues();
  if (result.transposed) {
    // D^T = U' S V'^T  =>  D = V' S U'^T.
    result.left = svd.matrixV();
    result.right = svd.matrixU();
  } else {
    result.left = svd.matrixU();
    result.right = svd.matrixV();
  }
  return result;
}

std::string_view SingularClassName(SingularClass c) {
  switch (c) {
    case SingularClass::kUnit: return "unit";
    case SingularClass::kInterior: return "interior";
    case SingularClass::kNull: return "null";
  }
  return "unknown";
}

SingularClass Classify(double sigma, double tol) {
  if (sigma >= 1.0 - tol) return SingularClass::kUnit;
  if (sigma <= tol) return SingularClass::kNull;
  return SingularClass::kInterior;
}

Prediction PredictSpectrum(const SvdResult& svd, const IsometryPair& iso,
                           double tol, int vector_cap) {
  CheckTolerance(tol);
  const SparseMatrix& a = iso.vertex_isometry;
  const SparseMatrix& b = iso.edge_isometry;
  const int n = static_cast<int>(a.cols());
  const int m = static_cast<int>(b.cols());
  const int size = static_cast<int>(a.rows());
  const int paired = static_cast<int>(svd.singular_values.size());
  if (svd.left.rows() != n || svd.left.cols() != n || svd.right.rows() != m ||
      svd.right.cols() != m || paired != std::min(n, m)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "SVD factors do not match the isometries");
  }

  Prediction out;
  out.classification.reserve(paired);
  out.angles.reserve(paired);
  for (int k = 0; k < paired; ++k) {
    const double sigma = svd.singular_values[k];
    const SingularClass c = Classify(sigma, tol);
    out.classification.push_back(c);
    out.angles.push_back(std::acos(std::clamp(sigma, 0.0, 1.0)));
    switch (c) {
      case SingularClass::kUnit: ++out.num_unit; break;
      case SingularClass::kInterior: ++out.num_interior; break;
      case SingularClass::kNull: ++out.num_null; break;
    }
  }
  out.num_unpaired = std::abs(n - m);
  out.num_complement = size - (n + m - out.num_unit);
  if (out.num_complement < 0) {
    throw Error(ErrorCode::kCountMismatch,
                "H_A + H_B would exceed the walk space (N=" +
                    std::to_string(size) + ", n+m-#unit=" +
                    std::to_string(n + m - out.num_unit) + ")");
  }
  out.complement_vectors = size <= vector_cap;

  const int num_vectors =
      size - (out.complement_vectors ? 0 : out.num_complement);
  out.eigenvalues.reserve(size);
  out.eigenvectors.resize(size, num_vectors);
  int column = 0;
  auto emit = [&](Complex lambda, const Eigen::VectorXcd& x) {
    out.eigenvalues.push_back(lambda);
    out.eigenvectors.col(column++) = x;
  };

  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (int k = 0; k < paired; ++k) {
    const Eigen::VectorXcd am =
        Eigen::VectorXd(a * svd.left.col(k)).cast<Complex>();
    const Eigen::VectorXcd bn =
        Eigen::VectorXd(b * svd.right.col(k)).cast<Complex>();
    switch (out.classification[k]) {
      case SingularClass::kUnit:
        emit(1.0, am);
        break;
      case SingularClass::kNull:
        emit(-1.0, am);
        emit(-1.0, bn);
        break;
      case SingularClass::kInterior: {
        const double theta = out.angles[k];
        const double scale = inv_sqrt2 / std::sin(theta);
        for (double sign : {1.0, -1.0}) {
          const Complex half = std::polar(1.0, sign * theta);
          emit(half * half, scale * (am - half * bn));
        }
        break;
      }
    }
  }
  for (int k = paired; k < n; ++k) {
    emit(-1.0, Eigen::VectorXd(a * svd.left.col(k)).cast<Complex>());
  }
  for (int k = paired; k < m; ++k) {
    emit(-1.0, Eigen::VectorXd(b * svd.right.col(k)).cast<Complex>());
  }

  if (out.complement_vectors && out.num_complement > 0) {
    Eigen::MatrixXd span(size, n + m);
    span.leftCols(n) = Eigen::MatrixXd(a);
    span.rightCols(m) = Eigen::MatrixXd(b);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(span);
    const Eigen::MatrixXd q = qr.householderQ();
    const int rank = n + m - out.num_unit;
    for (int j = rank; j < size; ++j) {
      emit(1.0, q.col(j).cast<Complex>());
    }
  } else {
    out.eigenvalues.insert(out.eigenvalues.end(), out.num_complement, 1.0);
  }

  if (static_cast<int>(out.eigenvalues.size()) != size) {
    throw Error(ErrorCode::kCountMismatch,
                "predicted " + std::to_string(out.eigenvalues.size()) +
                    " eigenvalues for N=" + std::to_string(size));
  }
  return out;
}

BruteForceSpectrum ComputeBruteForceSpectrum(const WalkOperator& walk,
                                             bool with_vectors) {
  const Eigen::MatrixXd& w = walk.dense();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(w, with_vectors);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kNoConvergence, "eigen-decomposition failed");
  }
  BruteForceSpectrum out;
  const Eigen::VectorXcd values = solver.eigenvalues();
  out.eigenvalues.assign(values.begin(), values.end());
  for (const Complex& z : out.eigenvalues) {
    out.max_modulus_deviation =
        std::max(out.max_modulus_deviation, std::abs(std::abs(z) - 1.0));
  }
  if (with_vectors) {
    const Eigen::MatrixXcd vectors = solver.eigenvectors();
    const Eigen::MatrixXcd wc = w.cast<Complex>();
    for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
      const Eigen::VectorXcd x = vectors.col(j).normalized();
      const double r = (wc * x - values[j] * x).norm();
      out.max_residual = std::max(out.max_residual, r);
    }
  }
  return out;
}

double MaxPairingDistance(std::vector<Complex> predicted,
                          std::vector<Complex> actual) {
  if (predicted.size() != actual.size()) {
    throw Error(ErrorCode::kCountMismatch,
                "predicted " + std::to_string(predicted.size()) +
                    " eigenvalues, found " + std::to_string(actual.size()));
  }
  SortByArgument(predicted);
  SortByArgument(actual);
  double worst = 0.0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    worst = std::max(worst, std::abs(predicted[i] - actual[i]));
  }
  return worst;
}

double MaxPredictionResidual(const Prediction& prediction,
                             const WalkOperator& walk) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < prediction.eigenvectors.cols(); ++j) {
    const Eigen::VectorXcd x = prediction.eigenvectors.col(j);
    const Eigen::VectorXcd wx = walk.Apply(x);
    worst = std::max(worst, (wx - prediction.eigenvalues[j] * x).norm());
  }
  return worst;
}

Verification Verify(const Prediction& prediction,
                    const std::vector<Complex>& actual,
                    const WalkOperator& walk, double tol) {
  CheckTolerance(tol);
  Verification v;
  v.max_pairing_distance = MaxPairingDistance(prediction.eigenvalues, actual);
  v.max_residual = MaxPredictionResidual(prediction, walk);
  v.pass = v.max_pairing_distance <= tol && v.max_residual <= tol;
  return v;
}

std::vector<EigenvalueGroup> GroupEigenvalues(std::vector<Complex> values,
                                              double tol) {
  SortByArgument(values);
  std::vector<EigenvalueGroup> groups;
  for (const Complex& z : values) {
    if (!groups.empty() && std::abs(groups.back().value - z) <= tol) {
      ++groups.back().multiplicity;
    } else {
      groups.push_back({z, 1});
    }
  }
  return groups;
}

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kUnverified: return "unverified";
  }
  return "unknown";
}

SpectralReport AnalyzeSpectrum(const Hypergraph& hg,
                               const AnalysisOptions& options) {
  CheckTolerance(options.classification_tolerance);
  CheckTolerance(options.verification_tolerance);

  const DegreeProfile profile = ComputeDegreeProfile(hg);
  const WalkModel model =
      BuildWalkModel(hg, Materialize::kAuto, options.dense_cap);
  const Discriminant d = ComputeDiscriminant(model.transitions);
  const SvdResult svd = FullSvd(d);
  const Prediction prediction =
      PredictSpectrum(svd, model.walk.isometries(),
                      options.classification_tolerance, options.dense_cap);

  SpectralReport report;
  report.num_vertices = hg.num_vertices();
  report.num_edges = hg.num_edges();
  report.edge_size = profile.uniform_size;
  report.degree = profile.regular_degree;
  report.dimension = model.pair_space.dimension();
  report.connected = IsConnected(hg);
  report.singular_values.assign(svd.singular_values.begin(),
                                svd.singular_values.end());
  report.classification = prediction.classification;
  report.angles = prediction.angles;
  report.classification_tolerance = options.classification_tolerance;
  report.verification_tolerance = options.verification_tolerance;
  const double tol = options.verification_tolerance;
  report.predicted = GroupEigenvalues(prediction.eigenvalues, tol);

  report.deviations.push_back(
      "unpaired block (|n-m| directions) assigned eigenvalue -1: the "
      "kernel of D^T (or D) lifts to vectors that one reflection fixes and "
      "the other negates");
  if (prediction.num_unit > 0) {
    report.deviations.push_back(
        std::to_string(prediction.num_unit) +
        " unit singular value(s): A mu = B nu, so dim(H_A + H_B) = n + m - "
        "#unit and each contributes a single +1");
  }
  if (prediction.num_null > 0) {
    report.deviations.push_back(
        std::to_string(prediction.num_null) +
        " null singular value(s): D is rank deficient; each contributes two "
        "-1 eigenvalues, which the generic n-m count does not cover");
  }
  if (svd.transposed) {
    report.deviations.push_back(
        "n < m: SVD computed on D^T; the m-n unpaired right vectors give -1 "
        "with eigenvectors B nu");
  }
  if (!prediction.complement_vectors) {
    report.deviations.push_back(
        "complement +1 eigenvectors not built (N above dense cap); residuals "
        "cover the remaining eigenpairs only");
  }

  report.max_residual = MaxPredictionResidual(prediction, model.walk);
  if (model.walk.has_dense()) {
    const BruteForceSpectrum actual =
        ComputeBruteForceSpectrum(model.walk, /*with_vectors=*/false);
    const double distance =
        MaxPairingDistance(prediction.eigenvalues, actual.eigenvalues);
    report.actual = GroupEigenvalues(actual.eigenvalues, tol);
    report.max_pairing_distance = distance;
    report.verdict = distance <= tol && report.max_residual <= tol
                         ? Verdict::kPass
                         : Verdict::kFail;
  } else {
    report.verdict =
        report.max_residual <= tol ? Verdict::kUnverified : Verdict::kFail;
  }
  return report;
}

}  // namespace hyperwalk
