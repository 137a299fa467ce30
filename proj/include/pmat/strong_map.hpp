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

#ifndef PMAT_STRONG_MAP_HPP_
#define PMAT_STRONG_MAP_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pmat/core.hpp"

namespace pmat {

// A total map between pointed ground sets sending * to *.
class PointedMap {
 public:
  // Every non-* source element must be assigned. Throws GroundMismatch on a
  // missing assignment, an image outside `target`, or * not sent to *.
  PointedMap(ElementSet source, ElementSet target,
             const std::vector<std::pair<Element, Element>>& assignment);

  // fn is called on the non-* elements only; * always maps to *.
  static PointedMap from_function(ElementSet source, ElementSet target,
                                  const std::function<Element(Element)>& fn);
  static PointedMap identity(ElementSet ground);
  // Inclusion of source into target; source must be a subset of target.
  static PointedMap inclusion(ElementSet source, ElementSet target);
  // Everything to *.
  static PointedMap zero(ElementSet source, ElementSet target);

  const ElementSet& source() const { return source_; }
  const ElementSet& target() const { return target_; }

  Element operator()(Element e) const { return image_[e]; }
  ElementSet image(ElementSet x) const;
  ElementSet image() const { return image(source_); }
  // Elements of the source mapped into y.
  ElementSet preimage(ElementSet y) const;

  bool injective() const;
  bool surjective() const { return image() == target_; }

  // Same assignment on a smaller source.
  PointedMap restricted_to(ElementSet sub) const;
  // Same assignment with a different codomain containing the image.
  PointedMap with_target(ElementSet target) const;

  // (e, f(e)) for the non-* elements.
  std::vector<std::pair<Element, Element>> assignment() const;
  // "1->*, 2->2"
  std::string to_string() const;

  bool operator==(const PointedMap&) const = default;
  std::strong_ordering operator<=>(const PointedMap&) const = default;

 private:
  PointedMap(ElementSet source, ElementSet target) : source_(source), target_(target) {}

  ElementSet source_;
  ElementSet target_;
  std::array<std::uint8_t, kMaxElementId + 1> image_{};
};

// g after f. Throws GroundMismatch unless f.target() == g.source().
PointedMap compose(const PointedMap& g, const PointedMap& f);

// Upper bound on |target|^|source - *| for map enumeration.
inline constexpr std::uint64_t kMaxEnumeratedMaps = 1'000'000;

// All pointed maps, lexicographic in the images of the source elements taken
// in ascending order. Throws GroundTooLarge beyond kMaxEnumeratedMaps.
std::vector<PointedMap> enumerate_pointed_maps(ElementSet source, ElementSet target);

enum class StrongCondition {
  kClosure = 1,         // f(cl(A)) within cl(f(A)) for all A
  kFlatPreimage = 2,    // preimages of flats are flats
  kLatticeMorphism = 3  // induced map on flats preserves joins, atoms to atoms or bottom
};

// Throws GroundMismatch when f does not run between the two ground sets.
bool is_strong(const PointedMap& f, const FiniteMatroid& m, const FiniteMatroid& n,
               StrongCondition condition = StrongCondition::kClosure);

// A pointed map certified strong between two matroids.
class StrongMap {
 public:
  // Throws NotStrong (or GroundMismatch).
  static StrongMap certify(PointedMap map, FiniteMatroid source, FiniteMatroid target,
                           StrongCondition condition = StrongCondition::kClosure);

  const PointedMap& map() const { return map_; }
  const FiniteMatroid& source() const { return source_; }
  const FiniteMatroid& target() const { return target_; }
  StrongCondition certificate() const { return certificate_; }

  Element operator()(Element e) const { return map_(e); }

  bool operator==(const StrongMap& other) const {
    return map_ == other.map_ && source_ == other.source_ && target_ == other.target_;
  }

 private:
  StrongMap(PointedMap map, FiniteMatroid source, FiniteMatroid target,
            StrongCondition certificate)
      : map_(std::move(map)),
        source_(std::move(source)),
        target_(std::move(target)),
        certificate_(certificate) {}

  PointedMap map_;
  FiniteMatroid source_;
  FiniteMatroid target_;
  StrongCondition certificate_;
};

StrongMap compose(const StrongMap& g, const StrongMap& f);
StrongMap identity_map(const FiniteMatroid& m);

// All strong maps M -> N (condition 1), in enumerate_pointed_maps order.
std::vector<StrongMap> enumerate_strong_maps(const FiniteMatroid& m, const FiniteMatroid& n);
// Same, without wrapping each map in a StrongMap.
std::vector<PointedMap> strong_pointed_maps(const FiniteMatroid& m, const FiniteMatroid& n);

inline bool is_monic(const StrongMap& f) { return f.map().injective(); }
inline bool is_epic(const StrongMap& f) { return f.map().surjective(); }

// i_S : M|S -> M.
StrongMap restriction_map(const FiniteMatroid& m, ElementSet s);
// c_S : M -> M/S, sending S - * to *.
StrongMap contraction_map(const FiniteMatroid& m, ElementSet s);

// Circuits pushed forward along an injective-on-circuits map, canonicalized.
CircuitSet transport(const CircuitSet& circuits, const PointedMap& f);

// Iso onto a pointed restriction of the target.
bool is_admissible_mono(const StrongMap& f);
bool is_admissible_mono(const PointedMap& f, const FiniteMatroid& m, const FiniteMatroid& n);
// Contraction by the kernel f^-1(*) - * followed by an isomorphism.
bool is_admissible_epi(const StrongMap& f);
bool is_admissible_epi(const PointedMap& f, const FiniteMatroid& m, const FiniteMatroid& n);

}  // namespace pmat

#endif  // PMAT_STRONG_MAP_HPP_
