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

#ifndef WDIMK_LP_FORMAT_H_
#define WDIMK_LP_FORMAT_H_

#include <iosfwd>
#include <string>

#include "wdimk/ilp_model.h"

namespace wdimk {

// CPLEX-style LP text. The writer is byte-deterministic: LF endings, ASCII,
// one constraint per line named in model order, a "\ key value" comment
// header carrying the model metadata, then Minimize / Subject To / Bounds /
// Binaries / Generals / End.
void WriteLp(const IlpModel& model, std::ostream& out);
std::string ToLpString(const IlpModel& model);
void ExportLp(const IlpModel& model, const std::string& path);

// Reads the dialect written by WriteLp. Variables are declared in order of
// first appearance, which reproduces the declaration order of every model
// built by this library. Throws kParseError with the offending line number.
IlpModel ParseLp(std::istream& in);
IlpModel ParseLpString(const std::string& text);
IlpModel ParseLpFile(const std::string& path);

}  // namespace wdimk

#endif  // WDIMK_LP_FORMAT_H_
