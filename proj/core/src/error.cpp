// Copyright 2026 The Authors.
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

#include "wlp/error.hpp"

#include <limits>
#include <string>

namespace wlp {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kParse: return "ParseError";
    case Errc::kOutOfRange: return "OutOfRange";
    case Errc::kDuplicatePropagator: return "DuplicatePropagator";
    case Errc::kSelfPropagator: return "SelfPropagator";
    case Errc::kNotSubset: return "NotSubset";
    case Errc::kBudgetExceeded: return "BudgetExceeded";
    case Errc::kEmptyBases: return "EmptyBases";
    case Errc::kUnequalSizes: return "UnequalSizes";
    case Errc::kExchangeViolation: return "ExchangeViolation";
    case Errc::kDisconnectedInput: return "DisconnectedInput";
    case Errc::kOverdefinedDiagram: return "OverdefinedDiagram";
    case Errc::kDisconnectedDiagram: return "DisconnectedDiagram";
    case Errc::kNotExact: return "NotExact";
    case Errc::kSizeMismatch: return "SizeMismatch";
    case Errc::kPreconditionFailed: return "PreconditionFailed";
    case Errc::kNoWitness: return "NoWitness";
    case Errc::kDegenerateMinor: return "DegenerateMinor";
    case Errc::kRankDeficient: return "RankDeficient";
    case Errc::kSharedEdge: return "SharedEdge";
    case Errc::kInvalidConfig: return "InvalidConfig";
    case Errc::kResampleExhausted: return "ResampleExhausted";
  }
  return "Unknown";
}

void Limits::require(std::uint64_t count, std::string_view what) const {
  if (count > max_subsets) {
    throw Error(Errc::kBudgetExceeded,
                std::string(what) + " would visit " + std::to_string(count) +
                    " subsets; budget is " + std::to_string(max_subsets));
  }
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
    if (result > std::numeric_limits<std::uint64_t>::max() / factor) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * factor / static_cast<std::uint64_t>(i);
  }
  return result;
}

}  // namespace wlp
