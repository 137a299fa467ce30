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

#include "pmat/element_set.hpp"

#include <sstream>

#include "pmat/error.hpp"

namespace pmat {

ElementSet::ElementSet(std::initializer_list<Element> elements) {
  for (Element e : elements) *this = with(e);
}

ElementSet ElementSet::of(const std::vector<Element>& elements) {
  ElementSet s;
  for (Element e : elements) s = s.with(e);
  return s;
}

ElementSet ElementSet::range(Element lo, Element hi) {
  ElementSet s;
  for (Element e = lo; e <= hi; ++e) s = s.with(e);
  return s;
}

ElementSet ElementSet::prefix_window(std::size_t n) {
  if (n > kMaxElementId) {
    throw MatroidError(ErrorKind::kWindowTooLarge,
                       "window " + std::to_string(n) + " exceeds element id ceiling");
  }
  return range(1, static_cast<Element>(n)).with_star();
}

ElementSet ElementSet::with(Element e) const {
  if (e > kMaxElementId) {
    throw MatroidError(ErrorKind::kUnknownElement,
                       "element id " + std::to_string(e) + " exceeds " +
                           std::to_string(kMaxElementId));
  }
  return ElementSet(bits_ | (std::uint64_t{1} << e));
}

std::vector<Element> ElementSet::to_vector() const {
  return std::vector<Element>(begin(), end());
}

std::string ElementSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Element e : *this) {
    if (!first) out << ',';
    first = false;
    if (e == kStar) {
      out << '*';
    } else {
      out << e;
    }
  }
  out << '}';
  return out.str();
}

std::strong_ordering ElementSet::operator<=>(const ElementSet& other) const {
  const std::uint64_t diff = bits_ ^ other.bits_;
  if (diff == 0) return std::strong_ordering::equal;
  const int k = std::countr_zero(diff);
  // Both sequences agree below k; exactly one of them contains k.
  const bool mine = ((bits_ >> k) & 1U) != 0;
  const std::uint64_t above = k == 63 ? 0 : ~((std::uint64_t{2} << k) - 1);
  if (mine) {
    return (other.bits_ & above) != 0 ? std::strong_ordering::less
                                      : std::strong_ordering::greater;
  }
  return (bits_ & above) != 0 ? std::strong_ordering::greater
                              : std::strong_ordering::less;
}

std::uint64_t compress(ElementSet ground, ElementSet subset) {
  std::uint64_t index = 0;
  std::uint64_t bit = 1;
  for (Element e : ground) {
    if (subset.contains(e)) index |= bit;
    bit <<= 1;
  }
  return index;
}

ElementSet expand(ElementSet ground, std::uint64_t index) {
  ElementSet out;
  for (Element e : ground) {
    if ((index & 1U) != 0) out = out.with(e);
    index >>= 1;
  }
  return out;
}

}  // namespace pmat
