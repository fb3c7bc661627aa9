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

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>
#include <vector>

namespace matcon {

inline constexpr int kMaxElements = 64;

// A set of element ids, stored as a 64-bit mask.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subset single(int e) { return Subset(std::uint64_t{1} << e); }
  // {0, ..., n-1}
  static constexpr Subset range(int n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  template <class Range>
  static Subset of(const Range& ids) {
    Subset s;
    for (int e : ids) s = s.with(e);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
  constexpr Subset with(int e) const { return Subset(bits_ | (std::uint64_t{1} << e)); }
  constexpr Subset without(int e) const { return Subset(bits_ & ~(std::uint64_t{1} << e)); }
  // Smallest element; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }
  // Largest element; undefined on the empty set.
  constexpr int last() const { return 63 - std::countl_zero(bits_); }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset operator^(Subset o) const { return Subset(bits_ ^ o.bits_); }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
  constexpr Subset& operator-=(Subset o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const Subset&) const = default;
  constexpr auto operator<=>(const Subset&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> elements() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

// Calls f(X) for every X ⊆ s, in increasing order of bit pattern, starting at ∅.
template <class F>
void for_each_subset(Subset s, F&& f) {
  const std::uint64_t m = s.bits();
  std::uint64_t x = 0;
  while (true) {
    f(Subset(x));
    if (x == m) break;
    x = (x - m) & m;
  }
}

// Bijection between subsets of a fixed set S and the integers [0, 2^|S|).
// Bit i of the index corresponds to the i-th smallest element of S.
class SubsetIndexer {
 public:
  SubsetIndexer() = default;
  explicit SubsetIndexer(Subset s) : set_(s), ids_(s.elements()) {}

  Subset set() const { return set_; }
  int size() const { return static_cast<int>(ids_.size()); }
  std::size_t count() const { return std::size_t{1} << ids_.size(); }
  const std::vector<int>& ids() const { return ids_; }

  Subset subset(std::size_t index) const {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; index != 0; ++i, index >>= 1) {
      if (index & 1U) bits |= std::uint64_t{1} << ids_[i];
    }
    return Subset(bits);
  }
  std::size_t index(Subset x) const {
    std::size_t out = 0;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      if (x.contains(ids_[i])) out |= std::size_t{1} << i;
    }
    return out;
  }

 private:
  Subset set_;
  std::vector<int> ids_;
};

}  // namespace matcon
