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


// Command-line front end. `run` is the whole program; the sweep helpers are
// exposed for tests.

#ifndef WLP_CLI_CLI_HPP_
#define WLP_CLI_CLI_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wlp/diagram.hpp"
#include "wlp/error.hpp"

namespace wlp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct Range {
  int lo = 0;
  int hi = 0;
};

// "6" or "4:8". Throws Error(kParse).
Range parse_range(std::string_view text);

struct SweepSpec {
  Range n{4, 6};
  Range k{0, 2};
  // "generic", "exact", "overdefined" or "well-defined".
  std::optional<std::string> definedness;
  std::optional<bool> connected;
  std::optional<bool> crossing;
  int configs = 3;
  std::uint64_t seed = 1;
};

// Throws Error(kOutOfRange) unless n <= 24, k <= 16, lo <= hi and
// configs >= 1.
void validate_sweep(const SweepSpec& sweep);

// Number of k-sets of edge pairs (a, b), a < b, on n edges.
std::uint64_t diagram_count(int n, int k);

// Visits those sets in lexicographic order of pair index; stops when `fn`
// returns false.
void for_each_diagram(int n, int k, const std::function<bool(const WilsonDiagram&)>& fn);

// Seed of configuration `index` for diagrams of size (n, k).
std::uint64_t config_seed(std::uint64_t seed, int n, int k, int index);

// WLP_BUDGET when set and valid, else `fallback`.
std::uint64_t budget_from_env(std::uint64_t fallback);

// argv[0] is the program name.
int run(int argc, const char* const argv[], std::ostream& out, std::ostream& err);
// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wlp::cli

#endif  // WLP_CLI_CLI_HPP_
