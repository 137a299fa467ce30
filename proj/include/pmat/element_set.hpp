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

#ifndef PMAT_ELEMENT_SET_HPP_
#define PMAT_ELEMENT_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace pmat {

// Element ids index bits of a 64-bit word. Id 0 is the distinguished loop.
using Element = std::uint32_t;

inline constexpr Element kStar = 0;
inline constexpr Element kMaxElementId = 63;

// A finite set of element ids, stored as a bitmask.
//
// Ordering is lexicographic on the ascending id sequence, so sorting a
// family of sets yields the canonical "sorted id sequence" order.
class ElementSet {
 public:
  class Iterator {
   public:
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    constexpr Iterator() = default;
    constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Element operator*() const {
      return static_cast<Element>(std::countr_zero(rest_));
    }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<Element> elements);

  static ElementSet of(const std::vector<Element>& elements);
  // {lo, lo+1, ..., hi}; empty when hi < lo.
  static ElementSet range(Element lo, Element hi);
  static constexpr ElementSet star() { return ElementSet(1); }
  // {*, 1, ..., n}
  static ElementSet prefix_window(std::size_t n);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Element e) const {
    return e <= kMaxElementId && ((bits_ >> e) & 1U) != 0;
  }
  constexpr bool contains_star() const { return (bits_ & 1U) != 0; }

  // Smallest and largest ids. Undefined on the empty set.
  constexpr Element min() const {
    return static_cast<Element>(std::countr_zero(bits_));
  }
  constexpr Element max() const {
    return static_cast<Element>(63 - std::countl_zero(bits_));
  }

  ElementSet with(Element e) const;
  constexpr ElementSet without(Element e) const {
    return e > kMaxElementId ? *this : ElementSet(bits_ & ~(std::uint64_t{1} << e));
  }
  constexpr ElementSet with_star() const { return ElementSet(bits_ | 1U); }
  constexpr ElementSet without_star() const { return ElementSet(bits_ & ~std::uint64_t{1}); }

  constexpr bool subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool proper_subset_of(ElementSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<Element> to_vector() const;
  // "{*,1,2}"
  std::string to_string() const;

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  // Set difference.
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  constexpr ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const ElementSet&) const = default;
  std::strong_ordering operator<=>(const ElementSet& other) const;

 private:
  std::uint64_t bits_ = 0;
};

// Number of subsets visited by for_each_subset; 2^|ground|.
inline std::uint64_t subset_count(ElementSet ground) {
  return std::uint64_t{1} << ground.size();
}

// Visits every subset of `ground`, starting from the empty set.
template <typename Fn>
void for_each_subset(ElementSet ground, Fn&& fn) {
  const std::uint64_t g = ground.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(ElementSet(sub));
    if (sub == g) break;
    sub = (sub - g) & g;
  }
}

// Position of `subset` when the elements of `ground` are packed into the low
// bits in ascending order. Used to index tabulations over 2^|ground| entries.
std::uint64_t compress(ElementSet ground, ElementSet subset);
ElementSet expand(ElementSet ground, std::uint64_t index);

}  // namespace pmat

#endif  // PMAT_ELEMENT_SET_HPP_
