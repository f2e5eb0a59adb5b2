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

#ifndef WDIMK_TABLE_H_
#define WDIMK_TABLE_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wdimk/wdim.h"

namespace wdimk {

struct IntRange {
  int lo = 0;
  int hi = -1;  // inclusive
};

// Expected wdim_k(K_n x K_m) values keyed by (k, m).
struct ExpectedTable {
  std::vector<int> ms;
  std::map<std::pair<int, int>, int> values;

  std::optional<int> Find(int k, int m) const;
};

// CSV with a header row "k,m1,m2,..." and one row per k. Lines starting with
// '#' are comments. Throws kParseError with a line number.
ExpectedTable ParseExpectedCsv(std::istream& in);
ExpectedTable LoadExpectedCsv(const std::string& path);

struct TableCell {
  enum class Status { kProved, kIncumbent, kSkipped };
  int k = 0;
  int m = 0;
  int value = -1;
  std::string method;
  Status status = Status::kSkipped;
};

std::string_view TableCellStatusName(TableCell::Status status);

struct TableMismatch {
  int k = 0;
  int m = 0;
  int expected = 0;
  int actual = 0;
};

struct TableReport {
  int n = 0;
  IntRange m_range;
  IntRange k_range;
  // Row-major over k, then m.
  std::vector<TableCell> cells;
  std::vector<TableMismatch> mismatches;
  // Proved cells compared against an expected value.
  int compared = 0;

  const TableCell* Find(int k, int m) const;
};

// One cell per (k, m). Cells with k above kappa, outside the method's
// domain, or without any incumbent within budget are skipped. Incumbent-only cells are never counted as mismatches.
TableReport RunTable(int n, IntRange m_range, IntRange k_range,
                     ComputeMethod method, const ComputeOptions& options,
                     const ExpectedTable* expected = nullptr);

// Header "k,m..." then one row per k; incumbents carry a '*' suffix and
// skipped cells are '-'.
void WriteTableCsv(std::ostream& out, const TableReport& report);

struct ConjectureCell {
  int m = 0;
  int k = 0;
  int optimum = -1;
  bool proved = false;
  // m * ceil(k/2), minus one for odd k.
  int predicted = 0;
  // Whether (n, m, k) lies where the conjecture is stated.
  bool in_domain = false;
  bool agrees = false;
};

struct ConjectureReport {
  int n = 0;
  std::vector<ConjectureCell> cells;
  int agreements = 0;
  // Disagreements inside the stated domain (counterexamples).
  int violations = 0;
  // Disagreements outside the domain (k = 2 with m < 2n).
  int out_of_domain_deviations = 0;
  int unproved = 0;
};

// Compares the fgh optimum with the conjectured value for every m in
// m_range (m > n) and k in k_range (2 <= k <= 2n).
ConjectureReport RunConjectureAudit(int n, IntRange m_range, IntRange k_range,
                                    const ComputeOptions& options);

void WriteConjectureCsv(std::ostream& out, const ConjectureReport& report);

}  // namespace wdimk

#endif  // WDIMK_TABLE_H_
