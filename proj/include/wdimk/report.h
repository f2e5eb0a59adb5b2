// Copyright 2026 The wdimk Authors
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

#ifndef WDIMK_REPORT_H_
#define WDIMK_REPORT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "wdimk/graph.h"
#include "wdimk/resolving.h"
#include "wdimk/table.h"
#include "wdimk/wdim.h"

namespace wdimk {

using Json = nlohmann::ordered_json;

// Parsed form of hamming:n1,...,nr | hypercube:r | file:PATH.
struct GraphSpec {
  enum class Kind { kHamming, kHypercube, kFile };
  Kind kind = Kind::kHamming;
  std::vector<int> dims;
  int r = 0;
  std::string path;
};

// nullopt on malformed text.
std::optional<GraphSpec> ParseGraphSpec(std::string_view text);
Graph BuildGraph(const GraphSpec& spec);

// Vertex coordinates (or one-element index lists for general graphs) read
// from either a JSON array of pairs, a JSON object with a "set" or
// "witness" array (possibly under "certificate"), or
// plain text with one whitespace- or comma-separated tuple per line and '#'
// comments. Throws kParseError.
std::vector<std::vector<int>> ParseSetText(const std::string& text);
VertexSet SetFromCoordinates(const Graph& g,
                             const std::vector<std::vector<int>>& coords);

Json GraphJson(const Graph& g);
Json SetJson(const Graph& g, const VertexSet& s);
Json CertificateJson(const Graph& g, const Certificate& c);
Json WdimJson(const Graph& g, const ComputeOutcome& outcome);
Json TableJson(const TableReport& report);
Json ConjectureJson(const ConjectureReport& report);

}  // namespace wdimk

#endif  // WDIMK_REPORT_H_
