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

#include "hyperwalk/hg_format.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "hyperwalk/error.h"
#include "instances.h"

namespace hyperwalk {
namespace {

TEST(ParseHypergraphTest, SingleEdge) {
  EXPECT_EQ(ParseHypergraph("n 3\n0 1 2\n"), testing::SingleEdge());
}

TEST(ParseHypergraphTest, CommentsBlankLinesAndSpacing) {
  const Hypergraph hg = ParseHypergraph(
      "# header comment\n\n  n   3\n# edge list\n1\t0\n  2 1  \n\n0 2");
  EXPECT_EQ(hg, testing::Triangle());
}

TEST(ParseHypergraphTest, DuplicateVertexIsRejected) {
  try {
    ParseHypergraph("n 3\n0 0 1\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateVertex);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(ParseHypergraphTest, SyntaxErrorsCarryLineNumbers) {
  struct Case {
    const char* text;
    int line;
  };
  for (const Case& c : {Case{"0 1 2\n", 1}, Case{"# c\nn three\n", 2},
                        Case{"n 3\n0 1 x\n", 2}, Case{"n 3\n0 1\n# c\n2 -1\n", 4},
                        Case{"n 3\n", 1}, Case{"", 1}}) {
    try {
      ParseHypergraph(c.text);
      FAIL() << c.text;
    } catch (const SyntaxError& e) {
      EXPECT_EQ(e.line(), c.line) << c.text;
      EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
    }
  }
}

TEST(ParseHypergraphTest, StructuralErrors) {
  auto code = [](const char* text) {
    try {
      ParseHypergraph(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code("n 3\n0 3\n1 2\n"), ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(code("n 4\n0 1\n1 2\n"), ErrorCode::kIsolatedVertex);
}

TEST(SerializeHypergraphTest, CanonicalText) {
  EXPECT_EQ(SerializeHypergraph(FromEdgeLists(4, {{3, 1}, {0, 2, 1}})),
            "n 4\n1 3\n0 1 2\n");
}

// serialize(parse(f)) == canonical(f): random files with comments, blank
// lines, irregular spacing and shuffled vertex order.
TEST(SerializeHypergraphTest, RoundTripOnNoisyFiles) {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Hypergraph hg = testing::RandomIrregular(seed, 15, 12);
    const std::string canonical = SerializeHypergraph(hg);

    std::ostringstream noisy;
    noisy << "# instance " << seed << "\n\n n\t" << hg.num_vertices() << "\n";
    for (const auto& edge : hg.edges()) {
      std::vector<int> shuffled = edge;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      if (rng() % 3 == 0) noisy << "# comment\n";
      if (rng() % 4 == 0) noisy << "   \n";
      for (int v : shuffled) noisy << (rng() % 2 ? "  " : " ") << v;
      noisy << (rng() % 2 ? "\r\n" : "\n");
    }
    const Hypergraph parsed = ParseHypergraph(noisy.str());
    ASSERT_EQ(parsed, hg) << noisy.str();
    ASSERT_EQ(SerializeHypergraph(parsed), canonical);
    ASSERT_EQ(SerializeHypergraph(ParseHypergraph(canonical)), canonical);
  }
}

TEST(HypergraphFileTest, MissingFileIsIoError) {
  try {
    ReadHypergraphFile("/nonexistent/dir/x.hg");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

}  // namespace
}  // namespace hyperwalk
