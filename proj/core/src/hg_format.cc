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

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "hyperwalk/error.h"

namespace hyperwalk {
namespace {

std::vector<std::string_view> Tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    const std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<int> ParseIndex(std::string_view token) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 0) return std::nullopt;
  return value;
}

}  // namespace

Hypergraph ParseHypergraph(std::string_view text) {
  std::optional<int> num_vertices;
  std::vector<std::vector<int>> edges;
  std::vector<int> edge_lines;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size() || (pos == 0 && text.empty())) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    const auto tokens = Tokenize(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!num_vertices) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw SyntaxError(line_no, "expected header \"n <vertex count>\"");
      }
      const auto count = ParseIndex(tokens[1]);
      if (!count || *count < 1) {
        throw SyntaxError(line_no, "vertex count must be a positive integer");
      }
      num_vertices = count;
      continue;
    }

    std::vector<int> edge;
    edge.reserve(tokens.size());
    std::vector<char> seen(*num_vertices, 0);
    for (auto token : tokens) {
      const auto v = ParseIndex(token);
      if (!v) {
        throw SyntaxError(line_no, "invalid vertex index \"" +
                                       std::string(token) + "\"");
      }
      if (*v >= *num_vertices) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "line " + std::to_string(line_no) + ": vertex " +
                        std::to_string(*v) + " outside [0, " +
                        std::to_string(*num_vertices) + ")");
      }
      if (seen[*v]) {
        throw Error(ErrorCode::kDuplicateVertex,
                    "line " + std::to_string(line_no) + ": vertex " +
                        std::to_string(*v) + " repeated in hyperedge");
      }
      seen[*v] = 1;
      edge.push_back(*v);
    }
    edges.push_back(std::move(edge));
    edge_lines.push_back(line_no);
  }

  if (!num_vertices) throw SyntaxError(line_no, "missing \"n <count>\" header");
  if (edges.empty()) throw SyntaxError(line_no, "no hyperedges");
  return FromEdgeLists(*num_vertices, std::move(edges));
}

std::string SerializeHypergraph(const Hypergraph& hg) {
  std::ostringstream out;
  out << "n " << hg.num_vertices() << '\n';
  for (const auto& edge : hg.edges()) {
    for (std::size_t i = 0; i < edge.size(); ++i) {
      if (i > 0) out << ' ';
      out << edge[i];
    }
    out << '\n';
  }
  return out.str();
}

Hypergraph ReadHypergraphFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "read failed: " + path);
  return ParseHypergraph(buffer.str());
}

void WriteHypergraphFile(const Hypergraph& hg, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path + " for writing");
  out << SerializeHypergraph(hg);
  if (!out.flush()) throw Error(ErrorCode::kIo, "write failed: " + path);
}

}  // namespace hyperwalk
