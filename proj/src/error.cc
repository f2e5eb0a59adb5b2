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

#include "wdimk/error.h"

namespace wdimk {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kDuplicateVertex: return "DuplicateVertex";
    case ErrorCode::kNotTwoDimensionalHamming: return "NotTwoDimensionalHamming";
    case ErrorCode::kSameVertex: return "SameVertex";
    case ErrorCode::kGraphMismatch: return "GraphMismatch";
    case ErrorCode::kKExceedsKappa: return "KExceedsKappa";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kBadDims: return "BadDims";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kInternalAssertion: return "InternalAssertion";
    case ErrorCode::kBadOrder: return "BadOrder";
    case ErrorCode::kKTooSmallForReduction: return "KTooSmallForReduction";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kUnsupportedModel: return "UnsupportedModel";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace wdimk
