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

#ifndef WDIMK_GRAPH_H_
#define WDIMK_GRAPH_H_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wdimk {

// Dense vertex index in [0, vertex_count). Hamming vertices are numbered
// row-major over their coordinates, so (i, j) in K_n x K_m is i * m + j.
struct VertexId {
  int index = 0;

  constexpr VertexId() = default;
  constexpr explicit VertexId(int i) : index(i) {}

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

enum class GraphKind { kHamming, kHypercube, kGeneral };

// Immutable connected simple graph with a precomputed distance matrix.
class Graph {
 public:
  static constexpr int kDefaultVertexCap = 4096;

  int vertex_count() const { return vertex_count_; }
  GraphKind kind() const { return kind_; }

  // Clique sizes of the Hamming factors; empty for general graphs.
  const std::vector<int>& dims() const { return dims_; }

  bool has_coordinates() const { return kind_ != GraphKind::kGeneral; }
  bool is_two_dimensional_hamming() const {
    return has_coordinates() && dims_.size() == 2;
  }
  // Factor sizes n and m of K_n x K_m. Only meaningful for 2D Hamming graphs.
  int rows() const { return dims_.empty() ? 0 : dims_[0]; }
  int cols() const { return dims_.size() < 2 ? 0 : dims_[1]; }

  int Distance(int u, int v) const {
    return dist_[static_cast<size_t>(u) * vertex_count_ + v];
  }
  int Distance(VertexId u, VertexId v) const {
    return Distance(u.index, v.index);
  }
  std::span<const uint16_t> DistanceRow(int u) const {
    return {dist_.data() + static_cast<size_t>(u) * vertex_count_,
            static_cast<size_t>(vertex_count_)};
  }

  bool Adjacent(VertexId u, VertexId v) const {
    return Distance(u, v) == 1;
  }
  const std::vector<int>& Neighbors(int v) const { return adjacency_[v]; }
  int diameter() const { return diameter_; }
  size_t edge_count() const;

  bool Contains(VertexId v) const {
    return v.index >= 0 && v.index < vertex_count_;
  }

  std::vector<int> Coordinates(VertexId v) const;
  VertexId VertexAt(std::span<const int> coords) const;
  VertexId VertexAt(int i, int j) const;

  // Structural identity used to match vertex sets against graphs. Two graphs
  // built from the same dims or the same edge list share a fingerprint.
  uint64_t fingerprint() const { return fingerprint_; }

  // Human readable description, e.g. "hamming:3,3" or "general:9".
  std::string Describe() const;

 private:
  friend Graph MakeHamming(std::vector<int> dims, int vertex_cap);
  friend Graph MakeHypercube(int r, int vertex_cap);
  friend Graph MakeFromEdges(int n, std::span<const std::pair<int, int>> edges);

  Graph() = default;

  int vertex_count_ = 0;
  GraphKind kind_ = GraphKind::kGeneral;
  std::vector<int> dims_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<uint16_t> dist_;
  int diameter_ = 0;
  uint64_t fingerprint_ = 0;
};

// Cartesian product of complete graphs K_{dims[0]} x ... x K_{dims[r-1]}.
// Throws kDimensionTooSmall for a factor below 2 and kTooLarge when the
// vertex count exceeds `vertex_cap`.
Graph MakeHamming(std::vector<int> dims,
                  int vertex_cap = Graph::kDefaultVertexCap);

// Q_r as the product of r copies of K_2, tagged as a hypercube.
Graph MakeHypercube(int r, int vertex_cap = Graph::kDefaultVertexCap);

Graph MakeFromEdges(int n, std::span<const std::pair<int, int>> edges);

// Edge-list text: "n m_edges" header, then one "u v" pair per line,
// 0-indexed; '#' starts a comment.
Graph ParseEdgeList(std::istream& in);
Graph LoadEdgeListFile(const std::string& path);

// All-pairs hop counts by breadth-first search; unreachable pairs hold
// kUnreachable.
inline constexpr uint16_t kUnreachable = 0xFFFF;
std::vector<uint16_t> BreadthFirstDistances(
    const std::vector<std::vector<int>>& adjacency);

enum class LayerOrientation { kVertical, kHorizontal };

// A vertical layer fixes the first coordinate, a horizontal one the second.
struct Layer {
  LayerOrientation orientation = LayerOrientation::kVertical;
  int fixed_index = 0;
  std::vector<VertexId> members;
};

// n vertical layers followed by m horizontal layers of K_n x K_m.
std::vector<Layer> Layers(const Graph& g);

// True iff u and v agree in exactly one coordinate of K_n x K_m.
bool Aligned(const Graph& g, VertexId u, VertexId v);

}  // namespace wdimk

#endif  // WDIMK_GRAPH_H_
