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

#include "wdimk/graph.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <queue>
#include <sstream>

#include "wdimk/error.h"

namespace wdimk {
namespace {

class Fnv1a {
 public:
  void Add(uint64_t value) {
    for (int b = 0; b < 8; ++b) {
      hash_ ^= (value >> (8 * b)) & 0xFF;
      hash_ *= 0x100000001b3ULL;
    }
  }
  uint64_t hash() const { return hash_; }

 private:
  uint64_t hash_ = 0xcbf29ce484222325ULL;
};

int ComputeDiameter(const std::vector<uint16_t>& dist) {
  int diameter = 0;
  for (uint16_t d : dist) diameter = std::max<int>(diameter, d);
  return diameter;
}

}  // namespace

size_t Graph::edge_count() const {
  size_t twice = 0;
  for (const auto& nbrs : adjacency_) twice += nbrs.size();
  return twice / 2;
}

std::vector<int> Graph::Coordinates(VertexId v) const {
  if (!has_coordinates()) {
    throw Error(ErrorCode::kBadDims, "graph has no coordinate structure");
  }
  if (!Contains(v)) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "vertex " + std::to_string(v.index));
  }
  std::vector<int> coords(dims_.size());
  int rest = v.index;
  for (size_t p = dims_.size(); p-- > 0;) {
    coords[p] = rest % dims_[p];
    rest /= dims_[p];
  }
  return coords;
}

VertexId Graph::VertexAt(std::span<const int> coords) const {
  if (!has_coordinates() || coords.size() != dims_.size()) {
    throw Error(ErrorCode::kBadDims, "coordinate arity does not match graph");
  }
  int index = 0;
  for (size_t p = 0; p < dims_.size(); ++p) {
    if (coords[p] < 0 || coords[p] >= dims_[p]) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "coordinate " + std::to_string(coords[p]) + " outside [0," +
                      std::to_string(dims_[p]) + ")");
    }
    index = index * dims_[p] + coords[p];
  }
  return VertexId(index);
}

VertexId Graph::VertexAt(int i, int j) const {
  const int coords[2] = {i, j};
  return VertexAt(coords);
}

std::string Graph::Describe() const {
  std::ostringstream out;
  switch (kind_) {
    case GraphKind::kHamming:
      out << "hamming:";
      for (size_t p = 0; p < dims_.size(); ++p) {
        out << (p ? "," : "") << dims_[p];
      }
      break;
    case GraphKind::kHypercube:
      out << "hypercube:" << dims_.size();
      break;
    case GraphKind::kGeneral:
      out << "general:" << vertex_count_;
      break;
  }
  return out.str();
}

Graph MakeHamming(std::vector<int> dims, int vertex_cap) {
  if (dims.empty()) {
    throw Error(ErrorCode::kDimensionTooSmall, "no factors given");
  }
  int64_t count = 1;
  for (int d : dims) {
    if (d < 2) {
      throw Error(ErrorCode::kDimensionTooSmall,
                  "factor K_" + std::to_string(d) + " is below K_2");
    }
    count *= d;
    if (count > vertex_cap) {
      throw Error(ErrorCode::kTooLarge,
                  "vertex count exceeds cap " + std::to_string(vertex_cap));
    }
  }

  Graph g;
  g.kind_ = GraphKind::kHamming;
  g.dims_ = std::move(dims);
  g.vertex_count_ = static_cast<int>(count);
  const int n = g.vertex_count_;
  const size_t r = g.dims_.size();

  std::vector<int> coords(static_cast<size_t>(n) * r);
  for (int v = 0; v < n; ++v) {
    int rest = v;
    for (size_t p = r; p-- > 0;) {
      coords[v * r + p] = rest % g.dims_[p];
      rest /= g.dims_[p];
    }
  }

  g.dist_.assign(static_cast<size_t>(n) * n, 0);
  g.adjacency_.assign(n, {});
  for (int u = 0; u < n; ++u) {
    const int* cu = &coords[u * r];
    for (int v = 0; v < n; ++v) {
      const int* cv = &coords[v * r];
      int differing = 0;
      for (size_t p = 0; p < r; ++p) differing += cu[p] != cv[p];
      g.dist_[static_cast<size_t>(u) * n + v] =
          static_cast<uint16_t>(differing);
      if (differing == 1) g.adjacency_[u].push_back(v);
    }
  }
  g.diameter_ = static_cast<int>(r);

  Fnv1a fp;
  fp.Add(static_cast<uint64_t>(GraphKind::kHamming));
  for (int d : g.dims_) fp.Add(d);
  g.fingerprint_ = fp.hash();
  return g;
}

Graph MakeHypercube(int r, int vertex_cap) {
  if (r < 1) {
    throw Error(ErrorCode::kDimensionTooSmall, "hypercube needs r >= 1");
  }
  Graph g = MakeHamming(std::vector<int>(r, 2), vertex_cap);
  g.kind_ = GraphKind::kHypercube;
  Fnv1a fp;
  fp.Add(static_cast<uint64_t>(GraphKind::kHypercube));
  fp.Add(r);
  g.fingerprint_ = fp.hash();
  return g;
}

std::vector<uint16_t> BreadthFirstDistances(
    const std::vector<std::vector<int>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<uint16_t> dist(static_cast<size_t>(n) * n, kUnreachable);
  std::vector<int> queue(n);
  for (int source = 0; source < n; ++source) {
    uint16_t* row = dist.data() + static_cast<size_t>(source) * n;
    row[source] = 0;
    int head = 0;
    int tail = 0;
    queue[tail++] = source;
    while (head < tail) {
      const int x = queue[head++];
      for (int y : adjacency[x]) {
        if (row[y] == kUnreachable) {
          row[y] = static_cast<uint16_t>(row[x] + 1);
          queue[tail++] = y;
        }
      }
    }
  }
  return dist;
}

Graph MakeFromEdges(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 2) {
    throw Error(ErrorCode::kDimensionTooSmall,
                "graph needs at least two vertices");
  }
  if (n > Graph::kDefaultVertexCap) {
    throw Error(ErrorCode::kTooLarge,
                "vertex count exceeds cap " +
                    std::to_string(Graph::kDefaultVertexCap));
  }
  Graph g;
  g.kind_ = GraphKind::kGeneral;
  g.vertex_count_ = n;
  g.adjacency_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") outside [0," + std::to_string(n) + ")");
    }
    if (u == v) {
      throw Error(ErrorCode::kSelfLoop, "self-loop at " + std::to_string(u));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  g.dist_ = BreadthFirstDistances(g.adjacency_);
  if (std::find(g.dist_.begin(), g.dist_.end(), kUnreachable) !=
      g.dist_.end()) {
    throw Error(ErrorCode::kDisconnected, "input graph is not connected");
  }
  g.diameter_ = ComputeDiameter(g.dist_);

  Fnv1a fp;
  fp.Add(static_cast<uint64_t>(GraphKind::kGeneral));
  fp.Add(n);
  for (int u = 0; u < n; ++u) {
    for (int v : g.adjacency_[u]) {
      if (u < v) fp.Add((static_cast<uint64_t>(u) << 32) | v);
    }
  }
  g.fingerprint_ = fp.hash();
  return g;
}

Graph ParseEdgeList(std::istream& in) {
  std::string line;
  int line_number = 0;
  int n = -1;
  long declared_edges = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    long a = 0;
    long b = 0;
    if (!(fields >> a)) continue;  // blank or comment-only line
    if (!(fields >> b)) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_number) +
                      ": expected two integers");
    }
    std::string extra;
    if (fields >> extra) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_number) +
                      ": trailing token '" + extra + "'");
    }
    if (n < 0) {
      if (a < 1 || b < 0 || a > std::numeric_limits<int>::max()) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_number) + ": bad header");
      }
      n = static_cast<int>(a);
      declared_edges = b;
    } else {
      edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  if (n < 0) {
    throw Error(ErrorCode::kParseError, "missing \"n m_edges\" header");
  }
  if (static_cast<long>(edges.size()) != declared_edges) {
    throw Error(ErrorCode::kParseError,
                "header declares " + std::to_string(declared_edges) +
                    " edges but " + std::to_string(edges.size()) +
                    " were listed");
  }
  return MakeFromEdges(n, edges);
}

Graph LoadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return ParseEdgeList(in);
}

std::vector<Layer> Layers(const Graph& g) {
  if (!g.is_two_dimensional_hamming()) {
    throw Error(ErrorCode::kNotTwoDimensionalHamming, g.Describe());
  }
  const int n = g.rows();
  const int m = g.cols();
  std::vector<Layer> layers;
  layers.reserve(n + m);
  for (int i = 0; i < n; ++i) {
    Layer layer{LayerOrientation::kVertical, i, {}};
    for (int j = 0; j < m; ++j) layer.members.push_back(VertexId(i * m + j));
    layers.push_back(std::move(layer));
  }
  for (int j = 0; j < m; ++j) {
    Layer layer{LayerOrientation::kHorizontal, j, {}};
    for (int i = 0; i < n; ++i) layer.members.push_back(VertexId(i * m + j));
    layers.push_back(std::move(layer));
  }
  return layers;
}

bool Aligned(const Graph& g, VertexId u, VertexId v) {
  if (!g.is_two_dimensional_hamming()) {
    throw Error(ErrorCode::kNotTwoDimensionalHamming, g.Describe());
  }
  if (!g.Contains(u) || !g.Contains(v)) {
    throw Error(ErrorCode::kIndexOutOfRange, "vertex outside graph");
  }
  if (u == v) throw Error(ErrorCode::kSameVertex, "u == v");
  const int m = g.cols();
  const bool same_row = u.index / m == v.index / m;
  const bool same_col = u.index % m == v.index % m;
  return same_row != same_col;
}

}  // namespace wdimk
