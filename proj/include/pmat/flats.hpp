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

#ifndef PMAT_FLATS_HPP_
#define PMAT_FLATS_HPP_

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pmat/core.hpp"
#include "pmat/strong_map.hpp"

namespace pmat {

// The lattice of flats of a finite matroid, ordered by inclusion.
class FlatLattice {
 public:
  // Enumerates closure fixed points. Throws GroundTooLarge.
  explicit FlatLattice(FiniteMatroid m);

  const FiniteMatroid& matroid() const { return matroid_; }
  // Sorted by size, then lexicographically.
  const std::vector<ElementSet>& elements() const { return flats_; }
  const std::vector<ElementSet>& atoms() const { return atoms_; }
  ElementSet bottom() const { return flats_.front(); }
  ElementSet top() const { return flats_.back(); }
  std::size_t size() const { return flats_.size(); }

  bool contains(ElementSet x) const;
  std::size_t index_of(ElementSet flat) const;

  // Covering pairs (lower, upper) as indices into elements().
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

 private:
  FiniteMatroid matroid_;
  std::vector<ElementSet> flats_;
  std::vector<ElementSet> atoms_;
};

FlatLattice flats(const FiniteMatroid& m);

// Throw NotAFlat if either argument is not in the lattice.
ElementSet join(const FlatLattice& lattice, ElementSet f, ElementSet g);
ElementSet meet(const FlatLattice& lattice, ElementSet f, ElementSet g);

// F -> cl_N(f(F)), tabulated over the flats of the source.
struct LatticeMap {
  std::vector<ElementSet> sources;
  std::vector<ElementSet> images;

  ElementSet operator()(ElementSet flat) const;
};

// The map on flats induced by any pointed map; no strongness assumed.
LatticeMap lattice_image(const PointedMap& f, const FlatLattice& source,
                         const FiniteMatroid& target);

// Induced map for a strong map; re-checks strongness (NotStrong).
LatticeMap induced_lattice_map(const StrongMap& f);

// Graphviz digraph of the covering relation, bottom to top.
std::string to_dot(const FlatLattice& lattice,
                   const std::function<std::string(ElementSet)>& label = {});

}  // namespace pmat

#endif  // PMAT_FLATS_HPP_
