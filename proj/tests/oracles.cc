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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <functional>

namespace hyperwalk::testing {
namespace {

int VertexDegree(const Hypergraph& hg, int v) {
  int d = 0;
  for (int e = 0; e < hg.num_edges(); ++e) d += hg.incidence()(v, e);
  return d;
}

int EdgeDegree(const Hypergraph& hg, int e) {
  int k = 0;
  for (int v = 0; v < hg.num_vertices(); ++v) k += hg.incidence()(v, e);
  return k;
}

}  // namespace

double ScalarVertexTransition(const Hypergraph& hg, int i, int j) {
  double sum = 0.0;
  for (int e = 0; e < hg.num_edges(); ++e) {
    const int hie = hg.incidence()(i, e);
    const int hje = hg.incidence()(j, e);
    if (hie && hje) {
      sum += 1.0 / (static_cast<double>(VertexDegree(hg, i)) * EdgeDegree(hg, e));
    }
  }
  return sum;
}

std::vector<std::pair<int, int>> EnumeratePairs(const Hypergraph& hg) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < hg.num_vertices(); ++v)
    for (int e = 0; e < hg.num_edges(); ++e)
      if (hg.incidence()(v, e)) pairs.emplace_back(v, e);
  return pairs;
}

Eigen::MatrixXd DenseVertexIsometry(const Hypergraph& hg) {
  const auto pairs = EnumeratePairs(hg);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(pairs.size(), hg.num_vertices());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [v, e] = pairs[i];
    a(i, v) = std::sqrt(1.0 / VertexDegree(hg, v));
  }
  return a;
}

Eigen::MatrixXd DenseEdgeIsometry(const Hypergraph& hg) {
  const auto pairs = EnumeratePairs(hg);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(pairs.size(), hg.num_edges());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [v, e] = pairs[i];
    b(i, e) = std::sqrt(1.0 / EdgeDegree(hg, e));
  }
  return b;
}

Eigen::MatrixXd NaiveProduct(const Eigen::MatrixXd& x,
                             const Eigen::MatrixXd& y) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(x.rows(), y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index l = 0; l < x.cols(); ++l) {
      const double xil = x(i, l);
      if (xil == 0.0) continue;
      for (Eigen::Index j = 0; j < y.cols(); ++j) out(i, j) += xil * y(l, j);
    }
  return out;
}

Eigen::MatrixXd NaivePower(const Eigen::MatrixXd& x, int power) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(x.rows(), x.cols());
  for (int p = 0; p < power; ++p) out = NaiveProduct(out, x);
  return out;
}

Eigen::MatrixXd NaiveWalkMatrix(const Eigen::MatrixXd& a,
                                const Eigen::MatrixXd& b) {
  const Eigen::Index size = a.rows();
  auto reflection = [size](const Eigen::MatrixXd& iso) {
    Eigen::MatrixXd r(size, size);
    for (Eigen::Index i = 0; i < size; ++i)
      for (Eigen::Index j = 0; j < size; ++j) {
        double s = 0.0;
        for (Eigen::Index c = 0; c < iso.cols(); ++c) s += iso(i, c) * iso(j, c);
        r(i, j) = 2.0 * s - (i == j ? 1.0 : 0.0);
      }
    return r;
  };
  return NaiveProduct(reflection(b), reflection(a));
}

std::vector<double> JacobiEigenvalues(Eigen::MatrixXd s) {
  const Eigen::Index size = s.rows();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < size; ++p)
      for (Eigen::Index q = p + 1; q < size; ++q) off += s(p, q) * s(p, q);
    if (off < 1e-30) break;
    for (Eigen::Index p = 0; p < size; ++p) {
      for (Eigen::Index q = p + 1; q < size; ++q) {
        if (std::abs(s(p, q)) < 1e-300) continue;
        const double tau = (s(q, q) - s(p, p)) / (2.0 * s(p, q));
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * c;
        for (Eigen::Index k = 0; k < size; ++k) {
          const double skp = s(k, p);
          const double skq = s(k, q);
          s(k, p) = c * skp - sn * skq;
          s(k, q) = sn * skp + c * skq;
        }
        for (Eigen::Index k = 0; k < size; ++k) {
          const double spk = s(p, k);
          const double sqk = s(q, k);
          s(p, k) = c * spk - sn * sqk;
          s(q, k) = sn * spk + c * sqk;
        }
      }
    }
  }
  std::vector<double> values(size);
  for (Eigen::Index i = 0; i < size; ++i) values[i] = s(i, i);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

std::vector<double> OracleSingularValues(const Eigen::MatrixXd& x) {
  const Eigen::MatrixXd xt = x.transpose();
  const Eigen::MatrixXd gram =
      x.rows() >= x.cols() ? NaiveProduct(xt, x) : NaiveProduct(x, xt);
  std::vector<double> values = JacobiEigenvalues(gram);
  for (double& v : values) v = std::sqrt(std::max(v, 0.0));
  return values;
}

double MaxAbs(const Eigen::MatrixXd& x) {
  return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
}

}  // namespace hyperwalk::testing
