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

#include "wdimk/resolving.h"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <string>

#include "wdimk/error.h"

namespace wdimk {
namespace {

void CheckVertex(const Graph& g, VertexId v) {
  if (!g.Contains(v)) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "vertex " + std::to_string(v.index) + " not in " +
                    g.Describe());
  }
}

size_t PairIndex(int n, int x, int y) {
  return static_cast<size_t>(x) * (2 * n - x - 1) / 2 + (y - x - 1);
}

// Flattened list of unordered pairs in lexicographic order.
struct PairList {
  std::vector<int> first;
  std::vector<int> second;

  explicit PairList(int n) {
    const size_t count = static_cast<size_t>(n) * (n - 1) / 2;
    first.reserve(count);
    second.reserve(count);
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        first.push_back(x);
        second.push_back(y);
      }
    }
  }
  size_t size() const { return first.size(); }
};

class ExactSearch {
 public:
  ExactSearch(const Graph& g, int k, const BruteforceOptions& options)
      : g_(g), k_(k), options_(options), pairs_(g.vertex_count()) {
    const int n = g.vertex_count();
    gained_.assign(pairs_.size(), 0);
    if (options_.exact_pair_bound) {
      // suffix_best_[w * P + p] = max over candidates >= w of Delta(p).
      suffix_best_.assign(static_cast<size_t>(n + 1) * pairs_.size(), 0);
      for (int w = n - 1; w >= 0; --w) {
        auto row = g_.DistanceRow(w);
        for (size_t p = 0; p < pairs_.size(); ++p) {
          const int delta = std::abs(row[pairs_.first[p]] -
                                     row[pairs_.second[p]]);
          suffix_best_[w * pairs_.size() + p] = static_cast<uint16_t>(
              std::max<int>(delta,
                            suffix_best_[(w + 1) * pairs_.size() + p]));
        }
      }
    }
  }

  // Returns true once a weak k-resolving set of exactly `size` vertices is
  // found; chosen_ then holds it.
  bool SearchSize(int size) {
    chosen_.clear();
    std::fill(gained_.begin(), gained_.end(), 0);
    return Extend(0, size);
  }

  const std::vector<int>& chosen() const { return chosen_; }
  int64_t nodes() const { return nodes_; }

 private:
  bool Prunable(int next_candidate, int remaining) const {
    if (options_.exact_pair_bound) {
      const uint16_t* best = &suffix_best_[next_candidate * pairs_.size()];
      for (size_t p = 0; p < pairs_.size(); ++p) {
        if (gained_[p] + remaining * best[p] < k_) return true;
      }
      return false;
    }
    const int reach = remaining * g_.diameter();
    for (size_t p = 0; p < pairs_.size(); ++p) {
      if (gained_[p] + reach < k_) return true;
    }
    return false;
  }

  void Apply(int w, int sign) {
    auto row = g_.DistanceRow(w);
    for (size_t p = 0; p < pairs_.size(); ++p) {
      gained_[p] += sign * std::abs(row[pairs_.first[p]] -
                                    row[pairs_.second[p]]);
    }
  }

  bool Extend(int next_candidate, int remaining) {
    if (Prunable(next_candidate, remaining)) return false;
    if (remaining == 0) return true;
    const int n = g_.vertex_count();
    for (int w = next_candidate; w + remaining <= n; ++w) {
      if (++nodes_ > options_.node_budget) {
        throw Error(ErrorCode::kBudgetExceeded,
                    "exact search exceeded " +
                        std::to_string(options_.node_budget) + " expansions");
      }
      chosen_.push_back(w);
      Apply(w, +1);
      if (Extend(w + 1, remaining - 1)) return true;
      Apply(w, -1);
      chosen_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  const int k_;
  const BruteforceOptions options_;
  PairList pairs_;
  std::vector<int> gained_;
  std::vector<uint16_t> suffix_best_;
  std::vector<int> chosen_;
  int64_t nodes_ = 0;
};

}  // namespace

int DeltaVertex(const Graph& g, VertexId z, VertexId x, VertexId y) {
  CheckVertex(g, z);
  CheckVertex(g, x);
  CheckVertex(g, y);
  return std::abs(g.Distance(x, z) - g.Distance(y, z));
}

int DeltaSet(const Graph& g, const VertexSet& s, VertexId x, VertexId y) {
  s.CheckBelongsTo(g);
  CheckVertex(g, x);
  CheckVertex(g, y);
  int total = 0;
  for (VertexId z : s.members()) {
    total += std::abs(g.Distance(x, z) - g.Distance(y, z));
  }
  return total;
}

int Certificate::PairValue(VertexId x, VertexId y) const {
  if (x == y) return 0;
  if (y < x) std::swap(x, y);
  if (x.index < 0 || y.index >= vertex_count_) {
    throw Error(ErrorCode::kIndexOutOfRange, "pair outside graph");
  }
  return pair_values_[PairIndex(vertex_count_, x.index, y.index)];
}

Certificate Verify(const Graph& g, const VertexSet& s, int k) {
  if (k < 1) throw Error(ErrorCode::kOutOfRange, "k must be positive");
  s.CheckBelongsTo(g);
  const int n = g.vertex_count();
  Certificate cert;
  cert.k_ = k;
  cert.vertex_count_ = n;
  cert.set_ = s;
  cert.pair_values_.assign(static_cast<size_t>(n) * (n - 1) / 2, 0);
  for (VertexId z : s.members()) {
    auto row = g.DistanceRow(z.index);
    size_t p = 0;
    for (int x = 0; x < n; ++x) {
      const int dx = row[x];
      for (int y = x + 1; y < n; ++y) {
        cert.pair_values_[p++] += std::abs(dx - row[y]);
      }
    }
  }
  cert.min_value_ = INT_MAX;
  size_t p = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y, ++p) {
      if (cert.pair_values_[p] < cert.min_value_) {
        cert.min_value_ = cert.pair_values_[p];
        cert.min_pair_ = {VertexId(x), VertexId(y)};
      }
    }
  }
  return cert;
}

int KappaBruteforce(const Graph& g) {
  const int n = g.vertex_count();
  int best = INT_MAX;
  for (int x = 0; x < n; ++x) {
    auto rx = g.DistanceRow(x);
    for (int y = x + 1; y < n; ++y) {
      auto ry = g.DistanceRow(y);
      int total = 0;
      for (int z = 0; z < n; ++z) {
        total += std::abs(static_cast<int>(rx[z]) - static_cast<int>(ry[z]));
      }
      best = std::min(best, total);
    }
  }
  return best;
}

int KappaHammingFormula(std::span<const int> dims) {
  if (dims.size() < 2) {
    throw Error(ErrorCode::kBadDims, "need at least two factors");
  }
  for (size_t p = 0; p < dims.size(); ++p) {
    if (dims[p] < 2) throw Error(ErrorCode::kBadDims, "factor below 2");
    if (p > 0 && dims[p] > dims[p - 1]) {
      throw Error(ErrorCode::kBadDims, "dims must be sorted nonincreasing");
    }
  }
  int value = 2;
  for (size_t p = 1; p < dims.size(); ++p) value *= dims[p];
  return value;
}

std::string_view WdimMethodName(WdimMethod method) {
  switch (method) {
    case WdimMethod::kFormula: return "formula";
    case WdimMethod::kBrute: return "brute";
    case WdimMethod::kIlpFs: return "ilp_fs";
    case WdimMethod::kIlpFsMinus: return "ilp_fs_minus";
    case WdimMethod::kIlpFgh: return "ilp_fgh";
  }
  return "unknown";
}

WdimResult WdimExactBruteforce(const Graph& g, int k,
                               const BruteforceOptions& options) {
  if (k < 1) throw Error(ErrorCode::kOutOfRange, "k must be positive");
  const int kappa = KappaBruteforce(g);
  if (k > kappa) {
    throw Error(ErrorCode::kKExceedsKappa,
                "k=" + std::to_string(k) + " exceeds kappa=" +
                    std::to_string(kappa) + " of " + g.Describe());
  }
  ExactSearch search(g, k, options);
  const int first_size = std::max(1, (k + g.diameter() - 1) / g.diameter());
  for (int size = first_size; size <= g.vertex_count(); ++size) {
    if (search.SearchSize(size)) {
      WdimResult result;
      result.k = k;
      result.value = size;
      result.witness = VertexSet::FromIndices(g, search.chosen());
      result.method = WdimMethod::kBrute;
      result.proved_optimal = true;
      result.nodes = search.nodes();
      return result;
    }
  }
  // k <= kappa guarantees V itself is weak k-resolving.
  throw Error(ErrorCode::kInternalAssertion, "no resolving set found");
}

int WdimFormulaSquare(int n, int k) {
  if (n < 3 || k < 2 || k > 2 * n) {
    throw Error(ErrorCode::kOutOfRange,
                "requires n >= 3 and 2 <= k <= 2n (n=" + std::to_string(n) +
                    ", k=" + std::to_string(k) + ")");
  }
  const int half = (k + 1) / 2;
  if (k == 2) return (4 * n + 2) / 3;
  if (k == 3 || k % 2 == 0) return n * half;
  return n * half - 1;
}

int MetricDimensionSquare(int n) {
  if (n < 3) throw Error(ErrorCode::kOutOfRange, "requires n >= 3");
  return (4 * n - 2) / 3;
}

int ConjectureFormula(int n, int m, int k) {
  const bool main_range = n >= 3 && m >= n + 1 && k >= 3 && k <= 2 * n;
  const bool k2_range = n >= 3 && k == 2 && m >= 2 * n;
  if (!main_range && !k2_range) {
    throw Error(ErrorCode::kOutOfRange,
                "outside conjectured range (n=" + std::to_string(n) +
                    ", m=" + std::to_string(m) + ", k=" + std::to_string(k) +
                    ")");
  }
  const int half = (k + 1) / 2;
  return k % 2 == 0 ? m * half : m * half - 1;
}

}  // namespace wdimk
