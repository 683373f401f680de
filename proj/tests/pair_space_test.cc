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

#include "hyperwalk/pair_space.h"

#include "gtest/gtest.h"
#include "instances.h"
#include "oracles.h"

namespace hyperwalk {
namespace {

std::vector<IncidentPair> Pairs(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<IncidentPair> out;
  for (auto [v, e] : xs) out.push_back({v, e});
  return out;
}

TEST(PairSpaceTest, SingleEdge) {
  const PairSpace ps(testing::SingleEdge());
  EXPECT_EQ(ps.dimension(), 3);
  EXPECT_EQ(ps.pairs(), Pairs({{0, 0}, {1, 0}, {2, 0}}));
}

TEST(PairSpaceTest, TriangleOrdering) {
  const PairSpace ps(testing::Triangle());
  EXPECT_EQ(ps.dimension(), 6);
  EXPECT_EQ(ps.pairs(),
            Pairs({{0, 0}, {0, 2}, {1, 0}, {1, 1}, {2, 1}, {2, 2}}));
}

TEST(PairSpaceTest, SixVertexThreeUniformDimensionIsTwelve) {
  EXPECT_EQ(PairSpace(testing::SixVertexThreeUniform()).dimension(), 12);
}

TEST(PairSpaceTest, IndexOfIsABijection) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Hypergraph hg = testing::RandomIrregular(seed, 10, 10);
    const PairSpace ps(hg);
    const auto expected = testing::EnumeratePairs(hg);
    ASSERT_EQ(ps.dimension(), static_cast<int>(expected.size()));
    ASSERT_EQ(ps.dimension(), hg.num_incidences());
    for (int i = 0; i < ps.dimension(); ++i) {
      EXPECT_EQ(ps.pair(i).vertex, expected[i].first);
      EXPECT_EQ(ps.pair(i).edge, expected[i].second);
      EXPECT_EQ(ps.IndexOf(expected[i].first, expected[i].second), i);
    }
    for (int v = 0; v < hg.num_vertices(); ++v) {
      for (int e = 0; e < hg.num_edges(); ++e) {
        EXPECT_EQ(ps.IndexOf(v, e).has_value(), hg.Contains(v, e));
      }
    }
    EXPECT_FALSE(ps.IndexOf(-1, 0));
    EXPECT_FALSE(ps.IndexOf(hg.num_vertices(), 0));
  }
}

TEST(PairSpaceTest, RangesMatchPairs) {
  const PairSpace ps(testing::SixVertexThreeUniform());
  for (int v = 0; v < ps.num_vertices(); ++v) {
    const auto [begin, end] = ps.VertexRange(v);
    for (int i = begin; i < end; ++i) EXPECT_EQ(ps.pair(i).vertex, v);
  }
  for (int e = 0; e < ps.num_edges(); ++e) {
    EXPECT_EQ(ps.EdgePairs(e).size(), 3u);
    for (int i : ps.EdgePairs(e)) EXPECT_EQ(ps.pair(i).edge, e);
  }
}

}  // namespace
}  // namespace hyperwalk
