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

#include "gtest/gtest.h"
#include "hyperwalk/error.h"
#include "instances.h"
#include "oracles.h"

namespace hyperwalk {
namespace {

using ::hyperwalk::testing::MaxAbs;
using ::hyperwalk::testing::SingleEdge;
using ::hyperwalk::testing::Triangle;

void ExpectStochastic(const TransitionSystem& ts, double tol) {
  for (const Eigen::MatrixXd* mat : {&ts.vertex_to_edge, &ts.edge_to_vertex,
                                     &ts.vertex_chain, &ts.edge_chain}) {
    EXPECT_GE(mat->minCoeff(), 0.0);
    EXPECT_LE((mat->rowwise().sum().array() - 1.0).abs().maxCoeff(), tol);
  }
}

TEST(BuildTransitionsTest, SingleEdge) {
  const TransitionSystem ts = BuildTransitions(SingleEdge());
  EXPECT_EQ(ts.vertex_to_edge, Eigen::MatrixXd::Ones(3, 1));
  EXPECT_LE(MaxAbs(ts.edge_to_vertex - Eigen::MatrixXd::Constant(1, 3, 1.0 / 3)),
            1e-16);
  EXPECT_LE(MaxAbs(ts.vertex_chain - Eigen::MatrixXd::Constant(3, 3, 1.0 / 3)),
            1e-16);
  ASSERT_EQ(ts.edge_chain.rows(), 1);
  EXPECT_DOUBLE_EQ(ts.edge_chain(0, 0), 1.0);
}

TEST(BuildTransitionsTest, TriangleVertexChain) {
  const TransitionSystem ts = BuildTransitions(Triangle());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      EXPECT_DOUBLE_EQ(ts.vertex_chain(i, j), i == j ? 0.5 : 0.25);
}

TEST(BuildTransitionsTest, InvariantsOnRandomHypergraphs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Hypergraph hg = testing::RandomIrregular(seed, 12, 10);
    const TransitionSystem ts = BuildTransitions(hg);
    ExpectStochastic(ts, 1e-12);
    EXPECT_LE(MaxAbs(ts.vertex_chain - ts.vertex_to_edge * ts.edge_to_vertex),
              1e-12);
    EXPECT_LE(MaxAbs(ts.edge_chain - ts.edge_to_vertex * ts.vertex_to_edge),
              1e-12);
    for (int v = 0; v < hg.num_vertices(); ++v) {
      for (int e = 0; e < hg.num_edges(); ++e) {
        const bool incident = hg.Contains(v, e);
        ASSERT_EQ(ts.vertex_to_edge(v, e) > 0, incident);
        ASSERT_EQ(ts.edge_to_vertex(e, v) > 0, incident);
      }
    }
    // Matrix product against the scalar per-entry formula; support equals the
    // "share a hyperedge" relation.
    for (int i = 0; i < hg.num_vertices(); ++i) {
      for (int j = 0; j < hg.num_vertices(); ++j) {
        ASSERT_NEAR(ts.vertex_chain(i, j),
                    testing::ScalarVertexTransition(hg, i, j), 1e-14);
        const bool share =
            (hg.incidence().row(i).array() * hg.incidence().row(j).array())
                .any();
        ASSERT_EQ(ts.vertex_chain(i, j) > 0, share);
      }
    }
  }
}

TEST(BuildTransitionsTest, RegularUniformChainIsSymmetric) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Hypergraph hg = testing::RandomRegularUniformInstance(seed, 40, 200);
    const TransitionSystem ts = BuildTransitions(hg);
    EXPECT_LE(MaxAbs(ts.vertex_chain - ts.vertex_chain.transpose()), 1e-14);
  }
}

TEST(DistributionTest, Validation) {
  EXPECT_THROW(Distribution(Eigen::Vector2d(0.5, 0.6)), Error);
  EXPECT_THROW(Distribution(Eigen::Vector2d(1.5, -0.5)), Error);
  EXPECT_NO_THROW(Distribution(Eigen::Vector2d(0.25, 0.75)));
  EXPECT_THROW(Distribution::PointMass(3, 3), Error);
}

TEST(StationaryDistributionTest, TriangleAndSingleEdgeAreUniform) {
  for (const Hypergraph& hg : {Triangle(), SingleEdge()}) {
    const StationaryResult r =
        StationaryDistribution(BuildTransitions(hg), Chain::kVertex);
    EXPECT_TRUE(r.unique);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(r.distribution[i], 1.0 / 3, 1e-12);
  }
}

TEST(StationaryDistributionTest, RegularUniformIsUniform) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Hypergraph hg = testing::RandomRegularUniformInstance(seed, 30, 150);
    const TransitionSystem ts = BuildTransitions(hg);
    const StationaryResult r = StationaryDistribution(ts, Chain::kVertex);
    const double u = 1.0 / hg.num_vertices();
    EXPECT_LE((r.distribution.probabilities().array() - u).abs().maxCoeff(),
              1e-12);
    EXPECT_EQ(r.unique, IsConnected(hg));
  }
}

TEST(StationaryDistributionTest, IrregularFixedPoint) {
  // pi_v proportional to d(v) for this walk.
  const Hypergraph hg = FromEdgeLists(4, {{0, 1, 2}, {2, 3}, {0, 3}});
  const TransitionSystem ts = BuildTransitions(hg);
  const StationaryResult r = StationaryDistribution(ts, Chain::kVertex);
  const Eigen::VectorXd pi = r.distribution.probabilities();
  EXPECT_LE((ts.vertex_chain.transpose() * pi - pi).cwiseAbs().maxCoeff(),
            1e-11);
  const Eigen::Vector4d degrees(2, 1, 2, 2);
  EXPECT_LE((pi - degrees / degrees.sum()).cwiseAbs().maxCoeff(), 1e-10);
  const StationaryResult q = StationaryDistribution(ts, Chain::kEdge);
  const Eigen::VectorXd rho = q.distribution.probabilities();
  EXPECT_LE((ts.edge_chain.transpose() * rho - rho).cwiseAbs().maxCoeff(),
            1e-11);
}

TEST(StationaryDistributionTest, DisconnectedIsFlaggedNotUnique) {
  const Hypergraph hg = FromEdgeLists(5, {{0, 1}, {2, 3, 4}, {3, 4}});
  const StationaryResult r =
      StationaryDistribution(BuildTransitions(hg), Chain::kVertex);
  EXPECT_FALSE(r.unique);
}

TEST(ClassicalStepTest, Examples) {
  const TransitionSystem tri = BuildTransitions(Triangle());
  const Distribution next = ClassicalStep(tri, Distribution::PointMass(3, 0));
  EXPECT_DOUBLE_EQ(next[0], 0.5);
  EXPECT_DOUBLE_EQ(next[1], 0.25);
  EXPECT_DOUBLE_EQ(next[2], 0.25);

  const Distribution fixed = ClassicalStep(tri, Distribution::Uniform(3));
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(fixed[i], 1.0 / 3, 1e-15);

  const TransitionSystem one = BuildTransitions(SingleEdge());
  const Distribution spread = ClassicalStep(one, Distribution::PointMass(3, 0));
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(spread[i], 1.0 / 3, 1e-15);

  EXPECT_THROW(ClassicalStep(tri, Distribution::Uniform(4)), Error);
}

TEST(SampleTrajectoryTest, ZeroStepsIsStart) {
  const TransitionSystem ts = BuildTransitions(Triangle());
  EXPECT_EQ(SampleTrajectory(ts, 2, 0, 1), std::vector<int>{2});
}

TEST(SampleTrajectoryTest, SingleEdgeAlwaysUsesEdgeZero) {
  const TransitionSystem ts = BuildTransitions(SingleEdge());
  const auto path = SampleTrajectory(ts, 0, 200, 3);
  ASSERT_EQ(path.size(), 401u);
  for (std::size_t i = 1; i < path.size(); i += 2) EXPECT_EQ(path[i], 0);
}

TEST(SampleTrajectoryTest, StepsFollowIncidenceAndAreDeterministic) {
  const Hypergraph hg = testing::SixVertexThreeUniform();
  const TransitionSystem ts = BuildTransitions(hg);
  const auto path = SampleTrajectory(ts, 4, 500, 11);
  EXPECT_EQ(path, SampleTrajectory(ts, 4, 500, 11));
  for (std::size_t i = 0; i + 2 < path.size(); i += 2) {
    ASSERT_TRUE(hg.Contains(path[i], path[i + 1]));
    ASSERT_TRUE(hg.Contains(path[i + 2], path[i + 1]));
  }
}

TEST(SampleTrajectoryTest, TriangleFrequenciesApproachUniform) {
  const TransitionSystem ts = BuildTransitions(Triangle());
  const int steps = 100000;
  const auto path = SampleTrajectory(ts, 0, steps, 2024);
  Eigen::Vector3d freq = Eigen::Vector3d::Zero();
  for (int t = 1; t <= steps; ++t) freq[path[2 * t]] += 1.0;
  freq /= steps;
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(freq[i], 1.0 / 3, 0.01);
}

}  // namespace
}  // namespace hyperwalk
