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


#include <charconv>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "wlp/cli/cli.hpp"

namespace wlp::cli {
namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw Error(Errc::kParse, "malformed range '" + std::string(whole) + "'");
  }
  return value;
}

std::vector<Propagator> edge_pairs(int n) {
  std::vector<Propagator> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) out.push_back({a, b});
  }
  return out;
}

}  // namespace

Range parse_range(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    const int v = parse_int(text, text);
    return {v, v};
  }
  return {parse_int(text.substr(0, colon), text), parse_int(text.substr(colon + 1), text)};
}

void validate_sweep(const SweepSpec& sweep) {
  if (sweep.n.lo < 1 || sweep.n.hi > kMaxVertices || sweep.n.lo > sweep.n.hi) {
    throw Error(Errc::kOutOfRange, "n range must lie in 1..24 with lo <= hi");
  }
  if (sweep.k.lo < 0 || sweep.k.hi > kMaxPropagators || sweep.k.lo > sweep.k.hi) {
    throw Error(Errc::kOutOfRange, "k range must lie in 0..16 with lo <= hi");
  }
  if (sweep.configs < 1) throw Error(Errc::kOutOfRange, "config count must be at least 1");
}

std::uint64_t diagram_count(int n, int k) { return binomial(n * (n - 1) / 2, k); }

void for_each_diagram(int n, int k, const std::function<bool(const WilsonDiagram&)>& fn) {
  const std::vector<Propagator> pairs = edge_pairs(n);
  const int m = static_cast<int>(pairs.size());
  if (k < 0 || k > m) return;
  std::vector<int> index(k);
  std::iota(index.begin(), index.end(), 0);
  std::vector<Propagator> props(k);
  while (true) {
    for (int r = 0; r < k; ++r) props[r] = pairs[index[r]];
    if (!fn(WilsonDiagram(n, props))) return;
    int i = k - 1;
    while (i >= 0 && index[i] == m - k + i) --i;
    if (i < 0) return;
    ++index[i];
    for (int r = i + 1; r < k; ++r) index[r] = index[r - 1] + 1;
  }
}

std::uint64_t config_seed(std::uint64_t seed, int n, int k, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k),
                    static_cast<std::uint32_t>(index)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (std::uint64_t{words[0]} << 32) | words[1];
}

std::uint64_t budget_from_env(std::uint64_t fallback) {
  const char* text = std::getenv("WLP_BUDGET");
  if (text == nullptr) return fallback;
  const std::string_view view(text);
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(view.data(), view.data() + view.size(), value);
  if (ec != std::errc() || end != view.data() + view.size() || value == 0) return fallback;
  return value;
}

}  // namespace wlp::cli
