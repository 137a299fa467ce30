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

#include "pmat/flats.hpp"

#include <algorithm>
#include <sstream>

namespace pmat {

FlatLattice::FlatLattice(FiniteMatroid m) : matroid_(std::move(m)) {
  require_tabulable(matroid_.ground());
  for_each_subset(matroid_.ground(), [&](ElementSet x) {
    if (is_flat(matroid_, x)) flats_.push_back(x);
  });
  std::sort(flats_.begin(), flats_.end(), [](ElementSet a, ElementSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  const ElementSet bottom = flats_.front();
  for (ElementSet f : flats_) {
    if (f == bottom) continue;
    const bool covers_bottom = std::none_of(flats_.begin(), flats_.end(), [&](ElementSet g) {
      return bottom.proper_subset_of(g) && g.proper_subset_of(f);
    });
    if (covers_bottom) atoms_.push_back(f);
  }
}

bool FlatLattice::contains(ElementSet x) const {
  return std::find(flats_.begin(), flats_.end(), x) != flats_.end();
}

std::size_t FlatLattice::index_of(ElementSet flat) const {
  const auto it = std::find(flats_.begin(), flats_.end(), flat);
  if (it == flats_.end()) {
    throw MatroidError(ErrorKind::kNotAFlat, flat.to_string() + " is not a flat");
  }
  return static_cast<std::size_t>(it - flats_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> FlatLattice::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t lo = 0; lo < flats_.size(); ++lo) {
    for (std::size_t hi = 0; hi < flats_.size(); ++hi) {
      if (!flats_[lo].proper_subset_of(flats_[hi])) continue;
      const bool between = std::any_of(flats_.begin(), flats_.end(), [&](ElementSet g) {
        return flats_[lo].proper_subset_of(g) && g.proper_subset_of(flats_[hi]);
      });
      if (!between) out.emplace_back(lo, hi);
    }
  }
  return out;
}

FlatLattice flats(const FiniteMatroid& m) { return FlatLattice(m); }

namespace {

void require_flat(const FlatLattice& lattice, ElementSet x) {
  if (!lattice.contains(x)) {
    throw MatroidError(ErrorKind::kNotAFlat, x.to_string() + " is not a flat");
  }
}

}  // namespace

ElementSet join(const FlatLattice& lattice, ElementSet f, ElementSet g) {
  require_flat(lattice, f);
  require_flat(lattice, g);
  return closure(lattice.matroid(), f | g);
}

ElementSet meet(const FlatLattice& lattice, ElementSet f, ElementSet g) {
  require_flat(lattice, f);
  require_flat(lattice, g);
  return f & g;
}

ElementSet LatticeMap::operator()(ElementSet flat) const {
  const auto it = std::find(sources.begin(), sources.end(), flat);
  if (it == sources.end()) {
    throw MatroidError(ErrorKind::kNotAFlat, flat.to_string() + " is not a source flat");
  }
  return images[static_cast<std::size_t>(it - sources.begin())];
}

LatticeMap lattice_image(const PointedMap& f, const FlatLattice& source,
                         const FiniteMatroid& target) {
  LatticeMap out;
  out.sources = source.elements();
  out.images.reserve(out.sources.size());
  for (ElementSet flat : out.sources) out.images.push_back(closure(target, f.image(flat)));
  return out;
}

LatticeMap induced_lattice_map(const StrongMap& f) {
  if (!is_strong(f.map(), f.source(), f.target())) {
    throw MatroidError(ErrorKind::kNotStrong, f.map().to_string());
  }
  return lattice_image(f.map(), FlatLattice(f.source()), f.target());
}

std::string to_dot(const FlatLattice& lattice,
                   const std::function<std::string(ElementSet)>& label) {
  std::ostringstream out;
  out << "digraph flats {\n  rankdir=BT;\n  node [shape=box];\n";
  const auto& fl = lattice.elements();
  for (std::size_t i = 0; i < fl.size(); ++i) {
    out << "  f" << i << " [label=\"" << (label ? label(fl[i]) : fl[i].to_string())
        << "\"];\n";
  }
  for (const auto& [lo, hi] : lattice.covers()) {
    out << "  f" << lo << " -> f" << hi << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pmat
