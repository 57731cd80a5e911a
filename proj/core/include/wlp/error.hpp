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

#ifndef WLP_ERROR_HPP_
#define WLP_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wlp/bitset.hpp"

namespace wlp {

enum class Errc {
  kParse,
  kOutOfRange,
  kDuplicatePropagator,
  kSelfPropagator,
  kNotSubset,
  kBudgetExceeded,
  kEmptyBases,
  kUnequalSizes,
  kExchangeViolation,
  kDisconnectedInput,
  kOverdefinedDiagram,
  kDisconnectedDiagram,
  kNotExact,
  kSizeMismatch,
  kPreconditionFailed,
  kNoWitness,
  kDegenerateMinor,
  kRankDeficient,
  kSharedEdge,
  kInvalidConfig,
  kResampleExhausted,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Raised by operations that need a well-defined diagram.
class OverdefinedError : public Error {
 public:
  OverdefinedError(PropSet witness, const std::string& what)
      : Error(Errc::kOverdefinedDiagram, what), witness_(witness) {}
  PropSet witness() const { return witness_; }

 private:
  PropSet witness_;
};

// Basis-exchange failure: no b2 in b2_set \ b1_set repairs b1_set - element.
class ExchangeError : public Error {
 public:
  ExchangeError(VertexSet first, VertexSet second, int element,
                const std::string& what)
      : Error(Errc::kExchangeViolation, what),
        first_(first), second_(second), element_(element) {}
  VertexSet first() const { return first_; }
  VertexSet second() const { return second_; }
  int element() const { return element_; }

 private:
  VertexSet first_;
  VertexSet second_;
  int element_;
};

// Subset scans refuse rather than degrade above these sizes.
inline constexpr int kMaxVertices = 24;
inline constexpr int kMaxPropagators = 16;
inline constexpr int kMaxFlatScanElements = 20;

// Upper bound on the number of subsets a single exhaustive scan may visit.
struct Limits {
  std::uint64_t max_subsets = std::uint64_t{1} << 24;

  void require(std::uint64_t count, std::string_view what) const;
};

}  // namespace wlp

#endif  // WLP_ERROR_HPP_
