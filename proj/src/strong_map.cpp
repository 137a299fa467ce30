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

#include "pmat/strong_map.hpp"

#include <algorithm>
#include <sstream>

#include "pmat/flats.hpp"
#include "pmat/minors.hpp"

namespace pmat {

namespace {

void require_pointed(ElementSet source, ElementSet target) {
  if (!source.contains_star() || !target.contains_star()) {
    throw MatroidError(ErrorKind::kGroundMismatch, "ground sets of a pointed map must contain *");
  }
}

}  // namespace

PointedMap::PointedMap(ElementSet source, ElementSet target,
                       const std::vector<std::pair<Element, Element>>& assignment)
    : source_(source), target_(target) {
  require_pointed(source, target);
  ElementSet assigned = ElementSet::star();
  for (const auto& [from, to] : assignment) {
    if (!source.contains(from)) {
      throw MatroidError(ErrorKind::kGroundMismatch,
                         std::to_string(from) + " is not in the source " + source.to_string());
    }
    if (!target.contains(to)) {
      throw MatroidError(ErrorKind::kGroundMismatch,
                         std::to_string(to) + " is not in the target " + target.to_string());
    }
    if (from == kStar && to != kStar) {
      throw MatroidError(ErrorKind::kGroundMismatch, "* must map to *");
    }
    image_[from] = static_cast<std::uint8_t>(to);
    assigned = assigned.with(from);
  }
  if (assigned != source) {
    throw MatroidError(ErrorKind::kGroundMismatch,
                       "unassigned source elements " + (source - assigned).to_string());
  }
}

PointedMap PointedMap::from_function(ElementSet source, ElementSet target,
                                     const std::function<Element(Element)>& fn) {
  std::vector<std::pair<Element, Element>> assignment;
  for (Element e : source.without_star()) assignment.emplace_back(e, fn(e));
  return PointedMap(source, target, assignment);
}

PointedMap PointedMap::identity(ElementSet ground) { return inclusion(ground, ground); }

PointedMap PointedMap::inclusion(ElementSet source, ElementSet target) {
  if (!source.subset_of(target)) {
    throw MatroidError(ErrorKind::kGroundMismatch,
                       source.to_string() + " is not contained in " + target.to_string());
  }
  return from_function(source, target, [](Element e) { return e; });
}

PointedMap PointedMap::zero(ElementSet source, ElementSet target) {
  return from_function(source, target, [](Element) { return kStar; });
}

ElementSet PointedMap::image(ElementSet x) const {
  std::uint64_t bits = 0;
  for (Element e : x & source_) bits |= std::uint64_t{1} << image_[e];
  return ElementSet(bits);
}

ElementSet PointedMap::preimage(ElementSet y) const {
  ElementSet out;
  for (Element e : source_) {
    if (y.contains(image_[e])) out = out.with(e);
  }
  return out;
}

bool PointedMap::injective() const { return image().size() == source_.size(); }

PointedMap PointedMap::restricted_to(ElementSet sub) const {
  if (!sub.subset_of(source_) || !sub.contains_star()) {
    throw MatroidError(ErrorKind::kGroundMismatch,
                       sub.to_string() + " is not a pointed subset of " + source_.to_string());
  }
  PointedMap out(sub, target_);
  for (Element e : sub) out.image_[e] = image_[e];
  return out;
}

PointedMap PointedMap::with_target(ElementSet target) const {
  require_pointed(source_, target);
  if (!image().subset_of(target)) {
    throw MatroidError(ErrorKind::kGroundMismatch,
                       "image " + image().to_string() + " leaves " + target.to_string());
  }
  PointedMap out = *this;
  out.target_ = target;
  return out;
}

std::vector<std::pair<Element, Element>> PointedMap::assignment() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element e : source_.without_star()) out.emplace_back(e, image_[e]);
  return out;
}

std::string PointedMap::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto name = [](Element e) { return e == kStar ? std::string("*") : std::to_string(e); };
  for (Element e : source_.without_star()) {
    if (!first) out << ", ";
    first = false;
    out << name(e) << "->" << name(image_[e]);
  }
  return first ? std::string("*->*") : out.str();
}

PointedMap compose(const PointedMap& g, const PointedMap& f) {
  if (f.target() != g.source()) {
    throw MatroidError(ErrorKind::kGroundMismatch,
                       "cannot compose: " + f.target().to_string() + " vs " +
                           g.source().to_string());
  }
  return PointedMap::from_function(f.source(), g.target(),
                                   [&](Element e) { return g(f(e)); });
}

std::vector<PointedMap> enumerate_pointed_maps(ElementSet source, ElementSet target) {
  require_pointed(source, target);
  const std::vector<Element> domain = source.without_star().to_vector();
  const std::vector<Element> values = target.to_vector();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    total *= values.size();
    if (total > kMaxEnumeratedMaps) {
      throw MatroidError(ErrorKind::kGroundTooLarge,
                         "more than " + std::to_string(kMaxEnumeratedMaps) + " pointed maps");
    }
  }
  std::vector<PointedMap> out;
  out.reserve(total);
  std::vector<std::size_t> digit(domain.size(), 0);
  std::vector<std::pair<Element, Element>> assignment(domain.size());
  for (std::uint64_t n = 0; n < total; ++n) {
    for (std::size_t i = 0; i < domain.size(); ++i) {
      assignment[i] = {domain[i], values[digit[i]]};
    }
    out.emplace_back(source, target, assignment);
    // Odometer: the last element varies fastest.
    for (std::size_t i = domain.size(); i-- > 0;) {
      if (++digit[i] < values.size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

namespace {

void require_matching_grounds(const PointedMap& f, const FiniteMatroid& m,
                              const FiniteMatroid& n) {
  if (f.source() != m.ground() || f.target() != n.ground()) {
    throw MatroidError(ErrorKind::kGroundMismatch,
                       "map " + f.source().to_string() + " -> " + f.target().to_string() +
                           " does not run " + m.ground().to_string() + " -> " +
                           n.ground().to_string());
  }
}

bool closure_containment(const PointedMap& f, const FiniteMatroid& m, const FiniteMatroid& n) {
  bool ok = true;
  for_each_subset(m.ground(), [&](ElementSet a) {
    if (ok && !f.image(closure(m, a)).subset_of(closure(n, f.image(a)))) ok = false;
  });
  return ok;
}

bool flat_preimages(const PointedMap& f, const FiniteMatroid& m, const FiniteMatroid& n) {
  const FlatLattice target(n);
  return std::all_of(target.elements().begin(), target.elements().end(),
                     [&](ElementSet flat) { return is_flat(m, f.preimage(flat)); });
}

bool lattice_morphism(const PointedMap& f, const FiniteMatroid& m, const FiniteMatroid& n) {
  const FlatLattice source(m);
  const FlatLattice target(n);
  const LatticeMap g = lattice_image(f, source, target.matroid());
  if (g(source.bottom()) != target.bottom()) return false;
  // Induced by f: the flat spanned by x goes to the flat spanned by f(x).
  for (Element x : m.ground()) {
    if (g(closure(m, {x})) != closure(n, {f(x)})) return false;
  }
  const auto& fl = source.elements();
  for (std::size_t a = 0; a < fl.size(); ++a) {
    for (std::size_t b = a + 1; b < fl.size(); ++b) {
      if (g(join(source, fl[a], fl[b])) != join(target, g(fl[a]), g(fl[b]))) return false;
    }
  }
  const auto& atoms = target.atoms();
  return std::all_of(source.atoms().begin(), source.atoms().end(), [&](ElementSet atom) {
    const ElementSet img = g(atom);
    return img == target.bottom() || std::find(atoms.begin(), atoms.end(), img) != atoms.end();
  });
}

}  // namespace

bool is_strong(const PointedMap& f, const FiniteMatroid& m, const FiniteMatroid& n,
               StrongCondition condition) {
  require_matching_grounds(f, m, n);
  require_tabulable(m.ground());
  switch (condition) {
    case StrongCondition::kClosure: return closure_containment(f, m, n);
    case StrongCondition::kFlatPreimage: return flat_preimages(f, m, n);
    case StrongCondition::kLatticeMorphism: return lattice_morphism(f, m, n);
  }
  return false;
}

StrongMap StrongMap::certify(PointedMap map, FiniteMatroid source, FiniteMatroid target,
                             StrongCondition condition) {
  if (!is_strong(map, source, target, condition)) {
    throw MatroidError(ErrorKind::kNotStrong, map.to_string() + " is not a strong map " +
                                                  source.to_string() + " -> " +
                                                  target.to_string());
  }
  return StrongMap(std::move(map), std::move(source), std::move(target), condition);
}

StrongMap compose(const StrongMap& g, const StrongMap& f) {
  if (f.target() != g.source()) {
    throw MatroidError(ErrorKind::kGroundMismatch, "cannot compose strong maps: middle differs");
  }
  return StrongMap::certify(compose(g.map(), f.map()), f.source(), g.target());
}

StrongMap identity_map(const FiniteMatroid& m) {
  return StrongMap::certify(PointedMap::identity(m.ground()), m, m);
}

std::vector<PointedMap> strong_pointed_maps(const FiniteMatroid& m, const FiniteMatroid& n) {
  require_tabulable(m.ground());
  std::vector<PointedMap> out;
  // Closures in the source are shared by every candidate map.
  std::vector<std::pair<ElementSet, ElementSet>> closures;
  closures.reserve(subset_count(m.ground()));
  for_each_subset(m.ground(), [&](ElementSet a) { closures.emplace_back(a, closure(m, a)); });
  for (PointedMap& f : enumerate_pointed_maps(m.ground(), n.ground())) {
    const bool strong =
        std::all_of(closures.begin(), closures.end(), [&](const auto& entry) {
          return f.image(entry.second).subset_of(closure(n, f.image(entry.first)));
        });
    if (strong) out.push_back(std::move(f));
  }
  return out;
}

std::vector<StrongMap> enumerate_strong_maps(const FiniteMatroid& m, const FiniteMatroid& n) {
  std::vector<StrongMap> out;
  for (PointedMap& f : strong_pointed_maps(m, n)) {
    out.push_back(StrongMap::certify(std::move(f), m, n));
  }
  return out;
}

StrongMap restriction_map(const FiniteMatroid& m, ElementSet s) {
  FiniteMatroid sub = restrict(m, s);
  PointedMap inclusion = PointedMap::inclusion(sub.ground(), m.ground());
  return StrongMap::certify(std::move(inclusion), std::move(sub), m);
}

StrongMap contraction_map(const FiniteMatroid& m, ElementSet s) {
  FiniteMatroid quotient = contract(m, s);
  const ElementSet killed = s.without_star();
  PointedMap c = PointedMap::from_function(m.ground(), quotient.ground(), [&](Element e) {
    return killed.contains(e) ? kStar : e;
  });
  return StrongMap::certify(std::move(c), m, std::move(quotient));
}

CircuitSet transport(const CircuitSet& circuits, const PointedMap& f) {
  CircuitSet out;
  out.reserve(circuits.size());
  for (ElementSet c : circuits) out.push_back(f.image(c));
  canonicalize(out);
  return out;
}

bool is_admissible_mono(const PointedMap& f, const FiniteMatroid& m, const FiniteMatroid& n) {
  require_matching_grounds(f, m, n);
  if (!f.injective()) return false;
  return transport(m.circuits(), f) == restrict(n, f.image()).circuits();
}

bool is_admissible_mono(const StrongMap& f) {
  return is_admissible_mono(f.map(), f.source(), f.target());
}

bool is_admissible_epi(const PointedMap& f, const FiniteMatroid& m, const FiniteMatroid& n) {
  require_matching_grounds(f, m, n);
  const ElementSet kernel = f.preimage(ElementSet::star()).without_star();
  const ElementSet rest = m.ground() - kernel;
  // f restricted to the rest must be a bijection onto the target.
  if (f.image(rest).size() != rest.size() || f.image(rest) != n.ground()) return false;
  return transport(contract(m, kernel).circuits(), f) == n.circuits();
}

bool is_admissible_epi(const StrongMap& f) {
  return is_admissible_epi(f.map(), f.source(), f.target());
}

}  // namespace pmat
