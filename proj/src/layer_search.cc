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

#include "wdimk/layer_search.h"

#include <algorithm>
#include <iostream>
#include <numeric>
#include <string>

#include "wdimk/error.h"

namespace wdimk {
namespace {

using Status = LayerSearchResult::Status;

void Telemetry(bool verbose, const char* phase, int total, int64_t vectors,
               int64_t nodes) {
  if (!verbose) return;
  std::cerr << "{\"event\":\"" << phase << "\",\"total\":" << total
            << ",\"vectors\":" << vectors << ",\"nodes\":" << nodes << "}\n";
}

std::vector<std::vector<int>> CollectVectors(int count, int cap, int k,
                                             int total, int64_t& budget_left) {
  std::vector<std::vector<int>> out;
  ForEachLayerVector(count, cap, k, total, [&](std::span<const int> v) {
    if (--budget_left < 0) return false;
    out.emplace_back(v.begin(), v.end());
    return true;
  });
  return out;
}

std::vector<Cell> CellsOf(const std::vector<uint8_t>& matrix, int m) {
  std::vector<Cell> cells;
  for (size_t p = 0; p < matrix.size(); ++p) {
    if (matrix[p]) {
      cells.push_back({static_cast<int>(p) / m, static_cast<int>(p) % m});
    }
  }
  return cells;
}

int LowerTotal(int n, int m, int k) {
  const auto rows = MinLayerTotal(n, m, k);
  const auto cols = MinLayerTotal(m, n, k);
  if (!rows || !cols) return -1;
  return std::max(*rows, *cols);
}

void CheckGrid(int n, int m, int k) {
  if (n < 2 || m < 2 || k < 1) {
    throw Error(ErrorCode::kOutOfRange, "layer search needs n, m >= 2, k >= 1");
  }
  if (m > 30) {
    throw Error(ErrorCode::kTooLarge, "layer search supports m <= 30");
  }
}

// Depth-first filling of a 0-1 matrix with prescribed sorted margins.
class MarginFill {
  struct ClassSpan {
    int start;
    int size;
  };

 public:
  MarginFill(int n, int m, int k, std::span<const int> g,
             std::span<const int> h, int64_t& nodes, int64_t node_budget)
      : n_(n), m_(m), k_(k), g_(g.begin(), g.end()), h_(h.begin(), h.end()),
        rows_(n, 0), col_rem_(h.begin(), h.end()), boundary_(m, 0),
        nodes_(nodes), node_budget_(node_budget) {
    boundary_[0] = 1;
    for (int c = 1; c < m; ++c) boundary_[c] = h_[c] != h_[c - 1];
    min_pair_h_ = h_[m - 1] + h_[m - 2];
  }

  // True when a matrix exists; throws nothing, sets exhausted() on budget.
  bool Run() { return Place(0); }
  bool exhausted() const { return exhausted_; }

  std::vector<Cell> Cells() const {
    std::vector<Cell> cells;
    for (int r = 0; r < n_; ++r) {
      for (int c = 0; c < m_; ++c) {
        if (Bit(rows_[r], c)) cells.push_back({r, c});
      }
    }
    return cells;
  }

 private:
  // Column c is stored at bit (m - 1 - c) so integer order is lex order.
  bool Bit(uint32_t row, int c) const { return (row >> (m_ - 1 - c)) & 1u; }
  uint32_t Mask(int c) const { return 1u << (m_ - 1 - c); }

  bool Place(int r) {
    if (r == n_) return true;
    classes_.clear();
    for (int c = 0; c < m_; ++c) {
      if (boundary_[c]) classes_.push_back({c, 0});
      ++classes_.back().size;
    }
    std::vector<ClassSpan> classes = classes_;
    std::vector<int> suffix_capacity(classes.size() + 1, 0);
    for (size_t ci = classes.size(); ci-- > 0;) {
      const int cap = col_rem_[classes[ci].start] > 0 ? classes[ci].size : 0;
      suffix_capacity[ci] = suffix_capacity[ci + 1] + cap;
    }
    const bool same_block = r > 0 && g_[r] == g_[r - 1];
    const uint32_t previous = r > 0 ? rows_[r - 1] : 0;
    return Generate(r, classes, suffix_capacity, 0, g_[r], 0u, same_block,
                    previous);
  }

  bool Generate(int r, const std::vector<ClassSpan>& classes,
                const std::vector<int>& suffix_capacity, size_t ci,
                int remaining, uint32_t row, bool tight, uint32_t previous) {
    if (exhausted_) return false;
    if (ci == classes.size()) {
      if (remaining != 0) return false;
      return TryRow(r, row);
    }
    const ClassSpan cls = classes[ci];
    const int cap = col_rem_[cls.start] > 0 ? cls.size : 0;
    const int hi = std::min(cap, remaining);
    const int lo = std::max(0, remaining - suffix_capacity[ci + 1]);
    uint32_t class_bits = 0;
    for (int c = cls.start; c < cls.start + cls.size; ++c) class_bits |= Mask(c);
    for (int x = hi; x >= lo; --x) {
      uint32_t ones = 0;
      for (int c = cls.start; c < cls.start + x; ++c) ones |= Mask(c);
      bool still_tight = tight;
      if (tight) {
        const uint32_t prev_bits = previous & class_bits;
        if (ones > prev_bits) continue;
        still_tight = ones == prev_bits;
      }
      if (Generate(r, classes, suffix_capacity, ci + 1, remaining - x,
                   row | ones, still_tight, previous)) {
        return true;
      }
    }
    return false;
  }

  bool PairConstraintsHold(int r, uint32_t row) const {
    for (int rp = 0; rp < r; ++rp) {
      const int base = g_[r] + g_[rp];
      if (base + min_pair_h_ - 4 >= k_) continue;
      const uint32_t other = rows_[rp];
      for (int j = 0; j < m_; ++j) {
        for (int jp = 0; jp < m_; ++jp) {
          if (j == jp) continue;
          // Pair (r, j), (rp, jp): the shared neighbours are (r, jp), (rp, j).
          const int shared = Bit(row, jp) + Bit(other, j);
          if (base + h_[j] + h_[jp] - 2 * shared < k_) return false;
        }
      }
    }
    return true;
  }

  bool RemainderRealizable(int r) const {
    std::vector<int> rest_rows(g_.begin() + r + 1, g_.end());
    return GaleRyserRealizable(rest_rows, col_rem_);
  }

  bool TryRow(int r, uint32_t row) {
    if (++nodes_ > node_budget_) {
      exhausted_ = true;
      return false;
    }
    if (k_ <= 3 && !PairConstraintsHold(r, row)) return false;
    for (int c = 0; c < m_; ++c) col_rem_[c] -= Bit(row, c);
    rows_[r] = row;
    bool found = false;
    if (RemainderRealizable(r)) {
      const std::vector<uint8_t> saved = boundary_;
      for (int c = 1; c < m_; ++c) {
        if (Bit(row, c) != Bit(row, c - 1)) boundary_[c] = 1;
      }
      found = Place(r + 1);
      if (!found) boundary_ = saved;
    }
    if (!found) {
      for (int c = 0; c < m_; ++c) col_rem_[c] += Bit(row, c);
      rows_[r] = 0;
    }
    return found;
  }

  const int n_;
  const int m_;
  const int k_;
  std::vector<int> g_;
  std::vector<int> h_;
  std::vector<uint32_t> rows_;
  std::vector<int> col_rem_;
  std::vector<uint8_t> boundary_;
  std::vector<ClassSpan> classes_;
  int min_pair_h_ = 0;
  int64_t& nodes_;
  const int64_t node_budget_;
  bool exhausted_ = false;
};

}  // namespace

bool GaleRyserRealizable(std::span<const int> rows, std::span<const int> cols) {
  const int n = static_cast<int>(rows.size());
  const int m = static_cast<int>(cols.size());
  long row_total = 0;
  for (int r : rows) {
    if (r < 0 || r > m) return false;
    row_total += r;
  }
  std::vector<int> sorted_cols(cols.begin(), cols.end());
  long col_total = 0;
  for (int c : sorted_cols) {
    if (c < 0 || c > n) return false;
    col_total += c;
  }
  if (row_total != col_total) return false;
  std::sort(sorted_cols.rbegin(), sorted_cols.rend());
  // conjugate[q - 1] = #{rows with sum >= q}.
  std::vector<int> conjugate(m, 0);
  for (int r : rows) {
    for (int q = 0; q < r; ++q) ++conjugate[q];
  }
  long lhs = 0;
  long rhs = 0;
  for (int p = 0; p < m; ++p) {
    lhs += sorted_cols[p];
    rhs += conjugate[p];
    if (lhs > rhs) return false;
  }
  return true;
}

std::optional<std::vector<uint8_t>> RealizeGreedy(std::span<const int> rows,
                                                  std::span<const int> cols) {
  if (!GaleRyserRealizable(rows, cols)) return std::nullopt;
  const int n = static_cast<int>(rows.size());
  const int m = static_cast<int>(cols.size());
  std::vector<uint8_t> matrix(static_cast<size_t>(n) * m, 0);
  std::vector<int> demand(cols.begin(), cols.end());
  std::vector<int> order(m);
  std::vector<int> row_order(n);
  std::iota(row_order.begin(), row_order.end(), 0);
  std::stable_sort(row_order.begin(), row_order.end(),
                   [&](int a, int b) { return rows[a] > rows[b]; });
  for (int r : row_order) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return demand[a] > demand[b]; });
    for (int t = 0; t < rows[r]; ++t) {
      const int c = order[t];
      if (demand[c] == 0) return std::nullopt;
      --demand[c];
      matrix[static_cast<size_t>(r) * m + c] = 1;
    }
  }
  if (std::any_of(demand.begin(), demand.end(), [](int d) { return d != 0; })) {
    return std::nullopt;
  }
  return matrix;
}

std::optional<int> MinLayerTotal(int count, int cap, int k) {
  if (count <= 0) return std::nullopt;
  if (count == 1) return 0;
  std::optional<int> best;
  for (int smallest = 0; smallest <= cap; ++smallest) {
    const int others = std::max(smallest, k - smallest);
    if (others > cap) continue;
    const int total = smallest + (count - 1) * others;
    if (!best || total < *best) best = total;
  }
  return best;
}

void ForEachLayerVector(
    int count, int cap, int k, int total,
    const std::function<bool(std::span<const int>)>& visit) {
  if (count <= 0 || total < 0) return;
  std::vector<int> v(count, 0);
  const int half = (k + 1) / 2;
  bool stop = false;
  // Sorted nonincreasing, the binding pair is the last two entries, so every
  // entry before the last must reach ceil(k/2).
  auto rec = [&](auto&& self, int pos, int left, int ceiling) -> void {
    const int slots = count - pos;
    if (slots == 0) {
      if (left != 0) return;
      if (count >= 2 && v[count - 2] + v[count - 1] < k) return;
      if (!visit(v)) stop = true;
      return;
    }
    if (static_cast<long>(slots) * ceiling < left) return;
    for (int value = std::min(ceiling, left); value >= 0; --value) {
      if (pos < count - 1 && value < half) break;
      if (pos == count - 1 && value != left) continue;
      v[pos] = value;
      self(self, pos + 1, left - value, value);
      if (stop) return;
    }
  };
  rec(rec, 0, total, cap);
}

LayerSearchResult SolveLayerCounts(int n, int m, int k,
                                   const LayerSearchOptions& options) {
  CheckGrid(n, m, k);
  if (k < 4) {
    throw Error(ErrorCode::kOutOfRange,
                "count-vector search is exact only for k >= 4");
  }
  LayerSearchResult result;
  const int first = LowerTotal(n, m, k);
  if (first < 0) return result;  // infeasible
  int64_t vectors_left = options.vector_cap;
  for (int total = first; total <= n * m; ++total) {
    Telemetry(options.verbose, "count_total", total, result.vectors,
              result.nodes);
    const auto gs = CollectVectors(n, m, k, total, vectors_left);
    const auto hs = CollectVectors(m, n, k, total, vectors_left);
    result.vectors = options.vector_cap - std::max<int64_t>(vectors_left, 0);
    if (vectors_left < 0) {
      result.status = Status::kBudgetExceeded;
      return result;
    }
    for (const auto& g : gs) {
      for (const auto& h : hs) {
        if (++result.nodes > options.node_budget) {
          result.status = Status::kBudgetExceeded;
          return result;
        }
        if (!GaleRyserRealizable(g, h)) continue;
        auto matrix = RealizeGreedy(g, h);
        if (!matrix) {
          throw Error(ErrorCode::kInternalAssertion,
                      "greedy filling failed on realizable margins");
        }
        result.status = Status::kOptimal;
        result.optimum = total;
        result.cells = CellsOf(*matrix, m);
        return result;
      }
    }
  }
  return result;
}

LayerSearchResult SolveLayerMargins(int n, int m, int k,
                                    const LayerSearchOptions& options) {
  CheckGrid(n, m, k);
  LayerSearchResult result;
  const int first = LowerTotal(n, m, k);
  if (first < 0) return result;
  int64_t vectors_left = options.vector_cap;
  for (int total = first; total <= n * m; ++total) {
    Telemetry(options.verbose, "margin_total", total, result.vectors,
              result.nodes);
    const auto gs = CollectVectors(n, m, k, total, vectors_left);
    const auto hs = CollectVectors(m, n, k, total, vectors_left);
    result.vectors = options.vector_cap - std::max<int64_t>(vectors_left, 0);
    if (vectors_left < 0) {
      result.status = Status::kBudgetExceeded;
      return result;
    }
    for (const auto& g : gs) {
      for (const auto& h : hs) {
        if (!GaleRyserRealizable(g, h)) continue;
        MarginFill fill(n, m, k, g, h, result.nodes, options.node_budget);
        if (fill.Run()) {
          result.status = Status::kOptimal;
          result.optimum = total;
          result.cells = fill.Cells();
          std::sort(result.cells.begin(), result.cells.end());
          return result;
        }
        if (fill.exhausted()) {
          result.status = Status::kBudgetExceeded;
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace wdimk
