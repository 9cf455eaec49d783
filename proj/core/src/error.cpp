// Copyright 2026 The kempe Authors
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

#include "kempe/error.hpp"

namespace kempe {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kLoopEdge: return "LoopEdge";
    case Errc::kBadVertex: return "BadVertex";
    case Errc::kParse: return "Parse";
    case Errc::kStaleChain: return "StaleChain";
    case Errc::kBadColors: return "BadColors";
    case Errc::kEdgeNotOnCycle: return "EdgeNotOnCycle";
    case Errc::kBudgetExceeded: return "BudgetExceeded";
    case Errc::kOutOfRange: return "OutOfRange";
    case Errc::kNotMaximum: return "NotMaximum";
    case Errc::kNotSimple: return "NotSimple";
    case Errc::kDeltaTooSmall: return "DeltaTooSmall";
    case Errc::kNotVertexDisjoint: return "NotVertexDisjoint";
    case Errc::kNotTwoFactor: return "NotTwoFactor";
    case Errc::kIterationLimit: return "IterationLimit";
    case Errc::kTooLargeForExhaustive: return "TooLargeForExhaustive";
  }
  return "Unknown";
}

}  // namespace kempe
