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

#include "wdimk/report.h"

#include <charconv>
#include <sstream>

#include "wdimk/error.h"

namespace wdimk {
namespace {

std::optional<std::vector<int>> ParseIntList(std::string_view text) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      return std::nullopt;
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

[[noreturn]] void SetParseError(int line, const std::string& what) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + what);
}

// Accepts the outputs of construct and compute as well as bare arrays.
const Json& VertexList(const Json& j) {
  if (!j.is_object()) return j;
  if (j.contains("set")) return j.at("set");
  if (j.contains("witness")) return j.at("witness");
  if (j.contains("certificate")) return VertexList(j.at("certificate"));
  return j;
}

std::vector<std::vector<int>> CoordinatesFromJson(const Json& j) {
  const Json& list = VertexList(j);
  if (!list.is_array()) SetParseError(1, "expected an array of vertices");
  std::vector<std::vector<int>> out;
  for (const Json& item : list) {
    if (item.is_number_integer()) {
      out.push_back({item.get<int>()});
    } else if (item.is_array()) {
      std::vector<int> coords;
      for (const Json& c : item) {
        if (!c.is_number_integer()) SetParseError(1, "non-integer coordinate");
        coords.push_back(c.get<int>());
      }
      out.push_back(std::move(coords));
    } else {
      SetParseError(1, "vertex must be an integer or an array");
    }
  }
  return out;
}

Json PairJson(const Graph& g, VertexId v) {
  if (g.has_coordinates()) return Json(g.Coordinates(v));
  return Json(v.index);
}

}  // namespace

std::optional<GraphSpec> ParseGraphSpec(std::string_view text) {
  const size_t colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const std::string_view head = text.substr(0, colon);
  const std::string_view tail = text.substr(colon + 1);
  GraphSpec spec;
  if (head == "file") {
    if (tail.empty()) return std::nullopt;
    spec.kind = GraphSpec::Kind::kFile;
    spec.path = std::string(tail);
    return spec;
  }
  const auto ints = ParseIntList(tail);
  if (!ints) return std::nullopt;
  if (head == "hamming") {
    spec.kind = GraphSpec::Kind::kHamming;
    spec.dims = *ints;
    return spec;
  }
  if (head == "hypercube" && ints->size() == 1) {
    spec.kind = GraphSpec::Kind::kHypercube;
    spec.r = ints->front();
    return spec;
  }
  return std::nullopt;
}

Graph BuildGraph(const GraphSpec& spec) {
  switch (spec.kind) {
    case GraphSpec::Kind::kHamming: return MakeHamming(spec.dims);
    case GraphSpec::Kind::kHypercube: return MakeHypercube(spec.r);
    case GraphSpec::Kind::kFile: return LoadEdgeListFile(spec.path);
  }
  throw Error(ErrorCode::kInternalAssertion, "unknown graph spec");
}

std::vector<std::vector<int>> ParseSetText(const std::string& text) {
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      SetParseError(1, e.what());
    }
    return CoordinatesFromJson(j);
  }
  std::vector<std::vector<int>> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const size_t hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    for (char& c : line) {
      if (c == ',' || c == '(' || c == ')') c = ' ';
    }
    std::istringstream fields(line);
    std::vector<int> coords;
    std::string token;
    while (fields >> token) {
      int value = 0;
      const auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        SetParseError(line_no, "expected an integer, got '" + token + "'");
      }
      coords.push_back(value);
    }
    if (!coords.empty()) out.push_back(std::move(coords));
  }
  return out;
}

VertexSet SetFromCoordinates(const Graph& g,
                             const std::vector<std::vector<int>>& coords) {
  std::vector<VertexId> members;
  const size_t arity = g.has_coordinates() ? g.dims().size() : 1;
  for (const auto& c : coords) {
    if (c.size() != arity) {
      throw Error(ErrorCode::kParseError,
                  "vertex needs " + std::to_string(arity) + " coordinates");
    }
    if (!g.has_coordinates()) {
      members.emplace_back(c[0]);
      continue;
    }
    for (size_t d = 0; d < arity; ++d) {
      if (c[d] < 0 || c[d] >= g.dims()[d]) {
        throw Error(ErrorCode::kIndexOutOfRange, "coordinate out of range");
      }
    }
    members.push_back(g.VertexAt(c));
  }
  return VertexSet::Of(g, std::move(members));
}

Json GraphJson(const Graph& g) {
  Json j;
  switch (g.kind()) {
    case GraphKind::kHamming:
      j["kind"] = "hamming";
      j["dims"] = g.dims();
      break;
    case GraphKind::kHypercube:
      j["kind"] = "hypercube";
      j["r"] = g.dims().size();
      break;
    case GraphKind::kGeneral:
      j["kind"] = "general";
      j["vertices"] = g.vertex_count();
      j["edges"] = g.edge_count();
      break;
  }
  return j;
}

Json SetJson(const Graph& g, const VertexSet& s) {
  Json list = Json::array();
  for (VertexId v : s.members()) list.push_back(PairJson(g, v));
  return list;
}

Json CertificateJson(const Graph& g, const Certificate& c) {
  Json j;
  j["graph"] = GraphJson(g);
  j["k"] = c.k();
  j["set"] = SetJson(g, c.set());
  j["min_value"] = c.min_value();
  j["min_pair"] = Json::array(
      {PairJson(g, c.min_pair().first), PairJson(g, c.min_pair().second)});
  j["valid"] = c.valid();
  return j;
}

Json WdimJson(const Graph& g, const ComputeOutcome& outcome) {
  const WdimResult& r = outcome.result;
  Json j;
  j["graph"] = GraphJson(g);
  j["k"] = r.k;
  j["value"] = r.value;
  j["method"] = WdimMethodName(r.method);
  j["provenance"] = outcome.provenance;
  j["proved_optimal"] = r.proved_optimal;
  j["nodes"] = r.nodes;
  if (r.witness) {
    j["witness"] = SetJson(g, *r.witness);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json TableJson(const TableReport& report) {
  Json j;
  j["n"] = report.n;
  j["m_range"] = {report.m_range.lo, report.m_range.hi};
  j["k_range"] = {report.k_range.lo, report.k_range.hi};
  Json cells = Json::array();
  for (const TableCell& c : report.cells) {
    Json cell;
    cell["k"] = c.k;
    cell["m"] = c.m;
    cell["status"] = TableCellStatusName(c.status);
    if (c.status == TableCell::Status::kSkipped) {
      cell["value"] = nullptr;
    } else {
      cell["value"] = c.value;
      cell["method"] = c.method;
    }
    cells.push_back(std::move(cell));
  }
  j["cells"] = std::move(cells);
  j["compared"] = report.compared;
  Json mismatches = Json::array();
  for (const TableMismatch& mm : report.mismatches) {
    mismatches.push_back(
        {{"k", mm.k}, {"m", mm.m}, {"expected", mm.expected}, {"actual", mm.actual}});
  }
  j["mismatches"] = std::move(mismatches);
  return j;
}

Json ConjectureJson(const ConjectureReport& report) {
  Json j;
  j["n"] = report.n;
  j["conjectural"] = true;
  Json cells = Json::array();
  for (const ConjectureCell& c : report.cells) {
    cells.push_back({{"m", c.m},
                     {"k", c.k},
                     {"optimum", c.optimum},
                     {"proved", c.proved},
                     {"predicted", c.predicted},
                     {"in_domain", c.in_domain},
                     {"agrees", c.agrees}});
  }
  j["cells"] = std::move(cells);
  j["agreements"] = report.agreements;
  j["violations"] = report.violations;
  j["out_of_domain_deviations"] = report.out_of_domain_deviations;
  j["unproved"] = report.unproved;
  return j;
}

}  // namespace wdimk
