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

#ifndef HYPERWALK_HG_FORMAT_H_
#define HYPERWALK_HG_FORMAT_H_

#include <string>
#include <string_view>

#include "hyperwalk/hypergraph.h"

namespace hyperwalk {

// Plain-text .hg format:
//
//   # optional comment lines
//   n 6
//   0 1 2
//   3 4 5
//
// The first non-comment, non-blank line declares the vertex count. Every later
// non-comment, non-blank line is one hyperedge given as whitespace-separated
// 0-based vertex indices; file order defines hyperedge indices.
//
// Throws SyntaxError for malformed text and Error for invalid structure
// (kDuplicateVertex, kIndexOutOfRange, kIsolatedVertex); messages carry the
// offending line number.
Hypergraph ParseHypergraph(std::string_view text);

// Canonical form: no comments, "n <N>" header, one line per hyperedge with
// ascending vertex indices separated by single spaces.
std::string SerializeHypergraph(const Hypergraph& hg);

// Throw Error(kIo) when the file cannot be read or written.
Hypergraph ReadHypergraphFile(const std::string& path);
void WriteHypergraphFile(const Hypergraph& hg, const std::string& path);

}  // namespace hyperwalk

#endif  // HYPERWALK_HG_FORMAT_H_
