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

#include "pmat/proto_exact.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "pmat/minors.hpp"

namespace pmat {

Square Square::make(StrongMap i, StrongMap j, StrongMap i_prime, StrongMap j_prime) {
  if (i.source() != j.source() || i.target() != j_prime.source() ||
      j.target() != i_prime.source() || i_prime.target() != j_prime.target()) {
    throw MatroidError(ErrorKind::kGroundMismatch, "square corners do not match");
  }
  if (compose(j_prime.map(), i.map()) != compose(i_prime.map(), j.map())) {
    throw MatroidError(ErrorKind::kNonCommuting,
                       "j' o i = " + compose(j_prime.map(), i.map()).to_string() +
                           " but i' o j = " + compose(i_prime.map(), j.map()).to_string());
  }
  return Square(std::move(i), std::move(j), std::move(i_prime), std::move(j_prime));
}

namespace {

void require_admissible(const StrongMap& mono, const StrongMap& epi) {
  if (!is_admissible_mono(mono)) {
    throw MatroidError(ErrorKind::kNotAdmissible,
                       mono.map().to_string() + " is not an admissible mono");
  }
  if (!is_admissible_epi(epi)) {
    throw MatroidError(ErrorKind::kNotAdmissible,
                       epi.map().to_string() + " is not an admissible epi");
  }
}

}  // namespace

Square complete_square_from_cospan(const StrongMap& i_prime, const StrongMap& j_prime) {
  if (i_prime.target() != j_prime.target()) {
    throw MatroidError(ErrorKind::kGroundMismatch, "cospan legs have different targets");
  }
  require_admissible(i_prime, j_prime);
  const FiniteMatroid& n = j_prime.source();
  const ElementSet kernel = j_prime.map().preimage(ElementSet::star()).without_star();
  const ElementSet lifted = j_prime.map().preimage(i_prime.map().image()) - kernel;

  StrongMap i = restriction_map(n, kernel | lifted);
  // i' is injective, so each element of its image has one preimage.
  std::map<Element, Element> back;
  for (Element y : i_prime.map().source()) back[i_prime(y)] = y;
  PointedMap j_map = PointedMap::from_function(
      i.source().ground(), i_prime.source().ground(),
      [&](Element x) { return kernel.contains(x) ? kStar : back.at(j_prime(x)); });
  StrongMap j = StrongMap::certify(std::move(j_map), i.source(), i_prime.source());
  return Square::make(std::move(i), std::move(j), i_prime, j_prime);
}

Square complete_square_from_span(const StrongMap& j, const StrongMap& i) {
  if (i.source() != j.source()) {
    throw MatroidError(ErrorKind::kGroundMismatch, "span legs have different sources");
  }
  require_admissible(i, j);
  const ElementSet kernel = j.map().preimage(ElementSet::star()).without_star();
  StrongMap j_prime = contraction_map(i.target(), i.map().image(kernel));

  // j is a bijection off its kernel.
  std::map<Element, Element> back;
  for (Element x : j.source().ground() - kernel) back[j(x)] = x;
  PointedMap i_map = PointedMap::from_function(
      j.target().ground(), j_prime.target().ground(),
      [&](Element y) { return i(back.at(y)); });
  StrongMap i_prime = StrongMap::certify(std::move(i_map), j.target(), j_prime.target());
  return Square::make(i, j, std::move(i_prime), std::move(j_prime));
}

std::string UniversalityReport::to_string() const {
  std::ostringstream out;
  out << (holds ? "holds" : "fails") << " over " << probes << " probes, " << cones_checked
      << " cones; existence failures " << existence_failures << ", uniqueness failures "
      << uniqueness_failures;
  if (!witness.empty()) out << "; first failure: " << witness;
  return out.str();
}

namespace {

// Memoized hom-sets; squares from one axiom run share most corners.
class HomCache {
 public:
  const std::vector<PointedMap>& operator()(const FiniteMatroid& from, const FiniteMatroid& to) {
    auto key = std::make_pair(from, to);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(std::move(key), strong_pointed_maps(from, to)).first;
    }
    return it->second;
  }

 private:
  std::map<std::pair<FiniteMatroid, FiniteMatroid>, std::vector<PointedMap>> cache_;
};

using MapPair = std::pair<PointedMap, PointedMap>;

void tally(UniversalityReport& report, std::size_t mediators, const std::string& where) {
  ++report.cones_checked;
  if (mediators == 1) return;
  report.holds = false;
  if (mediators == 0) {
    ++report.existence_failures;
  } else {
    ++report.uniqueness_failures;
  }
  if (report.witness.empty()) {
    report.witness = where + " has " + std::to_string(mediators) + " mediating maps";
  }
}

UniversalityReport cartesian_with(const Square& sq, const std::vector<FiniteMatroid>& probes,
                                  HomCache& hom) {
  UniversalityReport report;
  report.probes = probes.size();
  const PointedMap& i = sq.i().map();
  const PointedMap& j = sq.j().map();
  for (const FiniteMatroid& p : probes) {
    std::map<MapPair, std::size_t> mediators;
    for (const PointedMap& w : hom(p, sq.m())) ++mediators[{compose(i, w), compose(j, w)}];
    std::multimap<PointedMap, const PointedMap*> by_bottom;
    for (const PointedMap& v : hom(p, sq.m_prime())) {
      by_bottom.emplace(compose(sq.i_prime().map(), v), &v);
    }
    for (const PointedMap& u : hom(p, sq.n())) {
      const auto [lo, hi] = by_bottom.equal_range(compose(sq.j_prime().map(), u));
      for (auto it = lo; it != hi; ++it) {
        const auto found = mediators.find({u, *it->second});
        tally(report, found == mediators.end() ? 0 : found->second,
              "probe " + p.to_string() + " u=" + u.to_string() + " v=" +
                  it->second->to_string());
      }
    }
  }
  return report;
}

UniversalityReport cocartesian_with(const Square& sq, const std::vector<FiniteMatroid>& probes,
                                    HomCache& hom) {
  UniversalityReport report;
  report.probes = probes.size();
  const PointedMap& i_prime = sq.i_prime().map();
  const PointedMap& j_prime = sq.j_prime().map();
  for (const FiniteMatroid& p : probes) {
    std::map<MapPair, std::size_t> mediators;
    for (const PointedMap& w : hom(sq.n_prime(), p)) {
      ++mediators[{compose(w, j_prime), compose(w, i_prime)}];
    }
    std::multimap<PointedMap, const PointedMap*> by_top;
    for (const PointedMap& v : hom(sq.m_prime(), p)) by_top.emplace(compose(v, sq.j().map()), &v);
    for (const PointedMap& u : hom(sq.n(), p)) {
      const auto [lo, hi] = by_top.equal_range(compose(u, sq.i().map()));
      for (auto it = lo; it != hi; ++it) {
        const auto found = mediators.find({u, *it->second});
        tally(report, found == mediators.end() ? 0 : found->second,
              "probe " + p.to_string() + " u=" + u.to_string() + " v=" +
                  it->second->to_string());
      }
    }
  }
  return report;
}

}  // namespace

UniversalityReport cartesian_report(const Square& sq, const std::vector<FiniteMatroid>& probes) {
  HomCache hom;
  return cartesian_with(sq, probes, hom);
}

UniversalityReport cocartesian_report(const Square& sq,
                                      const std::vector<FiniteMatroid>& probes) {
  HomCache hom;
  return cocartesian_with(sq, probes, hom);
}

AdmissibilityOracle AdmissibilityOracle::standard() {
  return {[](const PointedMap& f, const FiniteMatroid& m, const FiniteMatroid& n) {
            return is_admissible_mono(f, m, n);
          },
          [](const PointedMap& f, const FiniteMatroid& m, const FiniteMatroid& n) {
            return is_admissible_epi(f, m, n);
          }};
}

namespace {

struct HomTable {
  std::vector<std::vector<std::vector<PointedMap>>> monos;  // [from][to]
  std::vector<std::vector<std::vector<PointedMap>>> epis;
};

HomTable admissible_homs(const std::vector<FiniteMatroid>& universe,
                         const AdmissibilityOracle& oracle, HomCache& hom) {
  const std::size_t n = universe.size();
  HomTable t;
  t.monos.assign(n, std::vector<std::vector<PointedMap>>(n));
  t.epis.assign(n, std::vector<std::vector<PointedMap>>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (const PointedMap& f : hom(universe[a], universe[b])) {
        if (oracle.mono(f, universe[a], universe[b])) t.monos[a][b].push_back(f);
        if (oracle.epi(f, universe[a], universe[b])) t.epis[a][b].push_back(f);
      }
    }
  }
  return t;
}

bool is_isomorphism(const PointedMap& f, const FiniteMatroid& m, const FiniteMatroid& n) {
  if (!f.injective() || !f.surjective()) return false;
  std::vector<std::pair<Element, Element>> inverse;
  for (const auto& [from, to] : f.assignment()) {
    if (from != kStar) inverse.emplace_back(to, from);
  }
  return is_strong(PointedMap(n.ground(), m.ground(), inverse), n, m);
}

StrongMap certified(const PointedMap& f, const FiniteMatroid& m, const FiniteMatroid& n) {
  return StrongMap::certify(f, m, n);
}

}  // namespace

AxiomReport check_proto_exact_axioms(const std::vector<FiniteMatroid>& universe,
                                     const std::vector<FiniteMatroid>& probe_list,
                                     const AdmissibilityOracle& oracle) {
  const std::vector<FiniteMatroid>& probes = probe_list.empty() ? universe : probe_list;
  HomCache hom;
  const HomTable t = admissible_homs(universe, oracle, hom);
  const std::size_t n = universe.size();
  AxiomReport report;

  // (1) maps out of and into the zero object.
  {
    const FiniteMatroid zero;
    AxiomVerdict v{"axiom1", true, ""};
    for (const FiniteMatroid& m : universe) {
      if (!oracle.mono(PointedMap::zero(zero.ground(), m.ground()), zero, m) && v.passed) {
        v = {"axiom1", false, "0 -> " + m.to_string() + " is not admissible mono"};
      }
      if (!oracle.epi(PointedMap::zero(m.ground(), zero.ground()), m, zero) && v.passed) {
        v = {"axiom1", false, m.to_string() + " -> 0 is not admissible epi"};
      }
    }
    if (v.passed) v.detail = std::to_string(n) + " objects";
    report.verdicts.push_back(v);
  }

  // (2) closure under composition, isomorphisms admissible.
  {
    AxiomVerdict v{"axiom2", true, ""};
    std::size_t composites = 0;
    std::size_t isos = 0;
    auto fail = [&](const std::string& why) {
      if (v.passed) v = {"axiom2", false, why};
    };
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          for (const PointedMap& f : t.monos[a][b]) {
            for (const PointedMap& g : t.monos[b][c]) {
              ++composites;
              if (!oracle.mono(compose(g, f), universe[a], universe[c])) {
                fail("mono composite " + compose(g, f).to_string() + " rejected");
              }
            }
          }
          for (const PointedMap& f : t.epis[a][b]) {
            for (const PointedMap& g : t.epis[b][c]) {
              ++composites;
              if (!oracle.epi(compose(g, f), universe[a], universe[c])) {
                fail("epi composite " + compose(g, f).to_string() + " rejected");
              }
            }
          }
        }
        for (const PointedMap& f : hom(universe[a], universe[b])) {
          if (!is_isomorphism(f, universe[a], universe[b])) continue;
          ++isos;
          if (!oracle.mono(f, universe[a], universe[b]) ||
              !oracle.epi(f, universe[a], universe[b])) {
            fail("isomorphism " + f.to_string() + " not admissible");
          }
        }
      }
    }
    if (v.passed) {
      v.detail = std::to_string(composites) + " composites, " + std::to_string(isos) +
                 " isomorphisms";
    }
    report.verdicts.push_back(v);
  }

  // (3) Cartesian iff co-Cartesian for admissible commuting squares.
  {
    AxiomVerdict v{"axiom3", true, ""};
    std::size_t squares = 0;
    std::size_t bicartesian = 0;
    for (std::size_t a = 0; a < n; ++a) {            // M
      for (std::size_t b = 0; b < n; ++b) {          // N
        for (std::size_t c = 0; c < n; ++c) {        // M'
          for (std::size_t d = 0; d < n; ++d) {      // N'
            for (const PointedMap& i : t.monos[a][b]) {
              for (const PointedMap& jp : t.epis[b][d]) {
                const PointedMap top = compose(jp, i);
                for (const PointedMap& j : t.epis[a][c]) {
                  for (const PointedMap& ip : t.monos[c][d]) {
                    if (compose(ip, j) != top) continue;
                    ++squares;
                    const Square sq = Square::make(
                        certified(i, universe[a], universe[b]),
                        certified(j, universe[a], universe[c]),
                        certified(ip, universe[c], universe[d]),
                        certified(jp, universe[b], universe[d]));
                    const bool cart = cartesian_with(sq, probes, hom).holds;
                    const bool cocart = cocartesian_with(sq, probes, hom).holds;
                    if (cart && cocart) ++bicartesian;
                    if (cart != cocart && v.passed) {
                      v = {"axiom3", false,
                           std::string(cart ? "Cartesian but not co-Cartesian: "
                                            : "co-Cartesian but not Cartesian: ") +
                               "i=" + i.to_string() + " j=" + j.to_string() + " over " +
                               universe[a].to_string()};
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
    if (v.passed) {
      v.detail = std::to_string(squares) + " squares, " + std::to_string(bicartesian) +
                 " bi-Cartesian";
    }
    report.verdicts.push_back(v);
  }

  auto check_completion = [&](const Square& sq, AxiomVerdict& v, const std::string& what) {
    std::string why;
    if (!oracle.mono(sq.i().map(), sq.m(), sq.n()) ||
        !oracle.mono(sq.i_prime().map(), sq.m_prime(), sq.n_prime())) {
      why = "completed mono not admissible";
    } else if (!oracle.epi(sq.j().map(), sq.m(), sq.m_prime()) ||
               !oracle.epi(sq.j_prime().map(), sq.n(), sq.n_prime())) {
      why = "completed epi not admissible";
    } else if (const UniversalityReport r = cartesian_with(sq, probes, hom); !r.holds) {
      why = "not Cartesian: " + r.witness;
    } else if (const UniversalityReport r = cocartesian_with(sq, probes, hom); !r.holds) {
      why = "not co-Cartesian: " + r.witness;
    }
    if (!why.empty() && v.passed) {
      v.passed = false;
      v.detail = what + ": " + why;
    }
  };

  // (4) cospans complete.
  {
    AxiomVerdict v{"axiom4", true, ""};
    std::size_t cospans = 0;
    for (std::size_t c = 0; c < n; ++c) {      // M'
      for (std::size_t d = 0; d < n; ++d) {    // N'
        for (std::size_t b = 0; b < n; ++b) {  // N
          for (const PointedMap& ip : t.monos[c][d]) {
            for (const PointedMap& jp : t.epis[b][d]) {
              ++cospans;
              const std::string what = "cospan i'=" + ip.to_string() + " j'=" + jp.to_string();
              try {
                check_completion(
                    complete_square_from_cospan(certified(ip, universe[c], universe[d]),
                                                certified(jp, universe[b], universe[d])),
                    v, what);
              } catch (const MatroidError& e) {
                if (v.passed) v = {"axiom4", false, what + ": " + e.what()};
              }
            }
          }
        }
      }
    }
    if (v.passed) v.detail = std::to_string(cospans) + " cospans completed";
    report.verdicts.push_back(v);
  }

  // (5) spans complete.
  {
    AxiomVerdict v{"axiom5", true, ""};
    std::size_t spans = 0;
    for (std::size_t a = 0; a < n; ++a) {      // M
      for (std::size_t c = 0; c < n; ++c) {    // M'
        for (std::size_t b = 0; b < n; ++b) {  // N
          for (const PointedMap& j : t.epis[a][c]) {
            for (const PointedMap& i : t.monos[a][b]) {
              ++spans;
              const std::string what = "span j=" + j.to_string() + " i=" + i.to_string();
              try {
                check_completion(
                    complete_square_from_span(certified(j, universe[a], universe[c]),
                                              certified(i, universe[a], universe[b])),
                    v, what);
              } catch (const MatroidError& e) {
                if (v.passed) v = {"axiom5", false, what + ": " + e.what()};
              }
            }
          }
        }
      }
    }
    if (v.passed) v.detail = std::to_string(spans) + " spans completed";
    report.verdicts.push_back(v);
  }

  report.verdicts.push_back({"probes", true,
                             "universal properties verified relative to " +
                                 std::to_string(probes.size()) + " probe matroids only"});
  return report;
}

}  // namespace pmat
