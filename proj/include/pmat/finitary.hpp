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

#ifndef PMAT_FINITARY_HPP_
#define PMAT_FINITARY_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <type_traits>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pmat/core.hpp"
#include "pmat/strong_map.hpp"

namespace pmat {

// The positive integers, with * = 0. Only finite prefix windows are ever
// materialized.
struct Omega {
  bool operator==(const Omega&) const = default;
};

// {1, ..., size}
struct FiniteGround {
  std::size_t size = 0;
  bool operator==(const FiniteGround&) const = default;
};

using SymbolicGround = std::variant<FiniteGround, Omega>;

// Circuits are the (rank + 1)-subsets of the ground set.
struct Uniform {
  std::size_t rank = 0;
  SymbolicGround ground;
  bool operator==(const Uniform&) const = default;
};

// Circuits are the subsets whose complement has exactly `corank` elements.
struct CoUniform {
  std::size_t corank = 1;
  SymbolicGround ground;
  bool operator==(const CoUniform&) const = default;
};

struct Free {
  SymbolicGround ground;
  bool operator==(const Free&) const = default;
};

struct Explicit {
  FiniteMatroid matroid;
  bool operator==(const Explicit&) const = default;
};

// A matroid described by a rule rather than a circuit list.
class SymbolicMatroid {
 public:
  using Descriptor = std::variant<Uniform, CoUniform, Free, Explicit>;

  // Throws InvalidDescriptor: corank 0, a finite co-uniform ground no larger
  // than the corank, or a finite ground beyond the element id ceiling.
  SymbolicMatroid(Descriptor descriptor);  // NOLINT(google-explicit-constructor)
  template <typename D>
    requires(!std::is_same_v<std::decay_t<D>, Descriptor> &&
             std::is_constructible_v<Descriptor, D>)
  SymbolicMatroid(D&& d)  // NOLINT(google-explicit-constructor)
      : SymbolicMatroid(Descriptor(std::forward<D>(d))) {}

  const Descriptor& descriptor() const { return descriptor_; }
  bool over_omega() const;
  // Every circuit finite.
  bool finitary() const;

  // "uniform(2, omega)", "couniform(1, omega)", "free(3)", "explicit(...)"
  std::string to_string() const;

  bool operator==(const SymbolicMatroid&) const = default;

 private:
  Descriptor descriptor_;
};

// Ground set seen through the window {*, 1..n}.
ElementSet window_ground(const SymbolicMatroid& s, std::size_t n);

// cl(A) intersected with the window, by closed-form rules per descriptor.
// A must lie in window_ground(s, n).
ElementSet windowed_closure(const SymbolicMatroid& s, ElementSet a, std::size_t n);

// Pointed restriction to the window. Throws WindowTooLarge when the window
// or its circuit count is beyond desk scale.
FiniteMatroid restrict_window(const SymbolicMatroid& s, std::size_t n);

// The whole matroid for finite-ground descriptors; NotEnumerable over Omega.
FiniteMatroid materialize(const SymbolicMatroid& s);

// Keeps only the finite circuits.
SymbolicMatroid finitize(const SymbolicMatroid& s);

// Identity fin(S) -> S satisfies closure containment on the window.
// Throws WindowTooLarge beyond kMaxTabulatedElements.
bool finitize_is_strong(const SymbolicMatroid& s, std::size_t n);

// Closure containment for f : window_n(S) -> window_m(T).
bool is_strong_on_window(const PointedMap& f, const SymbolicMatroid& s, std::size_t n,
                         const SymbolicMatroid& t, std::size_t m);

// The same ground map, certified strong between the windowed
// finitizations. Throws NotStrong when f is not strong S -> T on the windows.
StrongMap induce_fin_map(const PointedMap& f, const SymbolicMatroid& s, std::size_t n,
                         const SymbolicMatroid& t, std::size_t m);

// An infinite matroid over Omega observed through a finite window.
struct WindowedMatroid {
  SymbolicMatroid base;
  std::size_t window = 0;
};

// Legs restrict_window(base, n) -> target for n = 0, 1, ...
struct Cocone {
  FiniteMatroid target;
  std::map<std::size_t, PointedMap> legs;

  // Legs obtained by restricting one map on the largest window.
  static Cocone from_map(const SymbolicMatroid& base, const FiniteMatroid& target,
                         const PointedMap& top_leg, std::size_t n);
};

struct ColimitReport {
  std::size_t windows = 0;
  bool legs_strong = true;
  bool induced_strong = true;
  bool unique = true;
  std::optional<PointedMap> induced;
  std::string detail;

  bool passed() const { return legs_strong && induced_strong && unique; }
  std::string to_string() const;
};

// Assembles the induced map out of the colimit of windows 0..max_window and
// checks that it is strong from the finitization and uniquely determined.
// Throws IncompatibleCocone when legs disagree on a common window.
ColimitReport colimit_check(const SymbolicMatroid& base, const Cocone& cocone,
                            std::size_t max_window);

struct WitnessReport {
  // Least window the map factors through.
  std::optional<std::size_t> window;
  // Whether the factored map is strong into the window restriction.
  bool strong = false;
  // (window j, source element whose image leaves window j).
  std::vector<std::pair<std::size_t, Element>> escapes;

  std::string to_string() const;
};

// f : M -> window_bound(chain). Throws GroundMismatch, WindowTooLarge.
WitnessReport finitely_presented_witness(const FiniteMatroid& m, const PointedMap& f,
                                         const SymbolicMatroid& chain, std::size_t bound);
// The identity of an infinite matroid into a chain, sampled on window
// bound + 1.
WitnessReport finitely_presented_witness(const WindowedMatroid& m, const SymbolicMatroid& chain,
                                         std::size_t bound);

}  // namespace pmat

#endif  // PMAT_FINITARY_HPP_
