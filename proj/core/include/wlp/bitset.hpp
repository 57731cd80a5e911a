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

#ifndef WLP_BITSET_HPP_
#define WLP_BITSET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <type_traits>
#include <vector>

namespace wlp {

// Small fixed-width set over at most 32 elements, stored as a bitmask.
// `Base` is the label of bit 0: vertex sets use 1-based labels, propagator
// sets use 0-based indices. The tag keeps the two kinds from mixing.
template <class Tag, int Base>
class BitSet {
 public:
  using word_type = std::uint32_t;

  constexpr BitSet() = default;
  constexpr explicit BitSet(word_type bits) : bits_(bits) {}
  constexpr BitSet(std::initializer_list<int> labels) {
    for (int label : labels) bits_ |= bit(label);
  }

  static constexpr BitSet full(int size) {
    return BitSet(size >= 32 ? ~word_type{0}
                             : static_cast<word_type>((word_type{1} << size) - 1));
  }
  static constexpr BitSet single(int label) { return BitSet(bit(label)); }
  static BitSet from_labels(const std::vector<int>& labels) {
    BitSet s;
    for (int label : labels) s.bits_ |= bit(label);
    return s;
  }

  constexpr word_type bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int label) const { return (bits_ & bit(label)) != 0; }
  constexpr bool intersects(BitSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr bool is_subset_of(BitSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  // Smallest label; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_) + Base; }

  constexpr BitSet with(int label) const { return BitSet(bits_ | bit(label)); }
  constexpr BitSet without(int label) const { return BitSet(bits_ & ~bit(label)); }

  constexpr BitSet operator|(BitSet o) const { return BitSet(bits_ | o.bits_); }
  constexpr BitSet operator&(BitSet o) const { return BitSet(bits_ & o.bits_); }
  constexpr BitSet operator^(BitSet o) const { return BitSet(bits_ ^ o.bits_); }
  // Set difference.
  constexpr BitSet operator-(BitSet o) const { return BitSet(bits_ & ~o.bits_); }
  constexpr BitSet& operator|=(BitSet o) { bits_ |= o.bits_; return *this; }
  constexpr BitSet& operator&=(BitSet o) { bits_ &= o.bits_; return *this; }
  constexpr BitSet& operator-=(BitSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const BitSet&) const = default;
  constexpr auto operator<=>(const BitSet&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(word_type rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_) + Base; }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    word_type rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> labels() const { return std::vector<int>(begin(), end()); }

 private:
  static constexpr word_type bit(int label) {
    return word_type{1} << (label - Base);
  }

  word_type bits_ = 0;
};

struct VertexTag;
struct PropagatorTag;

// Subset of a cyclically ordered ground set {1..n}. Also used for matroid
// ground subsets, since the Wilson matroid lives on the polygon's vertices.
using VertexSet = BitSet<VertexTag, 1>;
// Subset of a diagram's propagators, by 0-based label index.
using PropSet = BitSet<PropagatorTag, 0>;

// Calls fn(mask) for every `size`-element subset of {0..universe-1}, in
// increasing numeric order (Gosper's hack). A bool-returning fn stops the
// walk by returning false.
template <class Fn>
void for_each_combination(int universe, int size, Fn&& fn) {
  auto visit = [&fn](std::uint32_t mask) {
    if constexpr (std::is_same_v<decltype(fn(mask)), bool>) {
      return fn(mask);
    } else {
      fn(mask);
      return true;
    }
  };
  if (size < 0 || size > universe) return;
  if (size == 0) {
    visit(std::uint32_t{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << universe;
  std::uint64_t mask = (std::uint64_t{1} << size) - 1;
  while (mask < limit) {
    if (!visit(static_cast<std::uint32_t>(mask))) return;
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
}

// Binomial coefficient in 64 bits; saturates instead of overflowing.
std::uint64_t binomial(int n, int k);

}  // namespace wlp

#endif  // WLP_BITSET_HPP_
