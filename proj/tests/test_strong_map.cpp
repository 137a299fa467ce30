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

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "pmat/error.hpp"
#include "pmat/minors.hpp"
#include "pmat/strong_map.hpp"

using namespace pmat;
using fx::a;
using fx::b;
using fx::c;

namespace {

bool is_iso(const PointedMap& f, const FiniteMatroid& m, const FiniteMatroid& n) {
  return f.injective() && f.surjective() && transport(m.circuits(), f) == n.circuits();
}

}  // namespace

TEST_CASE("pointed maps") {
  const PointedMap f({0, a, b}, {0, a}, {{a, 0}, {b, a}});
  CHECK(f(0) == 0);
  CHECK(f(b) == a);
  CHECK(f.to_string() == "1->*, 2->1");
  CHECK(f.image() == ElementSet{0, a});
  CHECK(f.preimage({0}) == ElementSet{0, a});
  CHECK_FALSE(f.injective());
  CHECK(f.surjective());
  CHECK_THROWS_AS(PointedMap({0, a}, {0}, {}), MatroidError);
  CHECK_THROWS_AS(PointedMap({0, a}, {0}, {{a, b}}), MatroidError);
  CHECK_THROWS_AS(compose(f, f), MatroidError);
  CHECK(enumerate_pointed_maps({0, a, b}, {0, a, b, c}).size() == 16);
}

TEST_CASE("strongness examples") {
  const auto u = fx::u23();
  const auto ca = contraction_map(u, {a});
  CHECK(ca.map().assignment() ==
        std::vector<std::pair<Element, Element>>{{a, 0}, {b, b}, {c, c}});
  for (auto cond : {StrongCondition::kClosure, StrongCondition::kFlatPreimage,
                    StrongCondition::kLatticeMorphism}) {
    CHECK(is_strong(ca.map(), u, contract(u, {a}), cond));
    CHECK(is_strong(PointedMap::zero(u.ground(), fx::pair().ground()), u, fx::pair(), cond));
    CHECK_FALSE(is_strong(PointedMap::identity(u.ground()), u, fx::free3(), cond));
  }
  CHECK_THROWS_AS(is_strong(PointedMap::identity(u.ground()), u, fx::pair()), MatroidError);
  CHECK_THROWS_AS(StrongMap::certify(PointedMap::identity(u.ground()), u, fx::free3()),
                  MatroidError);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_strong_maps(fx::point(), fx::u23()).size() == 1);
  CHECK(enumerate_strong_maps(fx::u23(), fx::point()).size() == 1);
  // Frozen from the flat-preimage oracle: every one of the 4^2 maps.
  std::size_t oracle_count = 0;
  for (const auto& f : enumerate_pointed_maps(fx::free2().ground(), fx::u23().ground())) {
    oracle_count += oracle::strong(f, fx::free2(), fx::u23()) ? 1 : 0;
  }
  CHECK(oracle_count == 16);
  CHECK(enumerate_strong_maps(fx::free2(), fx::u23()).size() == 16);
  const auto maps = enumerate_strong_maps(fx::u23(), fx::u23());
  for (std::size_t i = 1; i < maps.size(); ++i) CHECK(maps[i - 1].map() < maps[i].map());
}

TEST_CASE("monic, epic and canonical maps") {
  const auto u = fx::u23();
  const auto inc = restriction_map(u, {a, b});
  CHECK(inc.source() == fx::free2());
  CHECK(is_monic(inc));
  CHECK(is_epic(contraction_map(u, {a})));
  const auto zero = StrongMap::certify(PointedMap::zero(u.ground(), u.ground()), u, u);
  CHECK_FALSE(is_monic(zero));
  CHECK_FALSE(is_epic(zero));
  CHECK(contraction_map(u, {}) == identity_map(u));
}

TEST_CASE("admissible classes") {
  const auto u = fx::u23();
  CHECK(is_admissible_mono(restriction_map(u, {a, c})));
  CHECK(is_admissible_epi(contraction_map(u, {b})));
  const auto id_free_pair = StrongMap::certify(PointedMap::identity({0, a, b}), fx::free2(),
                                               fx::pair());
  CHECK(is_monic(id_free_pair));
  CHECK_FALSE(is_admissible_mono(id_free_pair));
  const auto fold = StrongMap::certify(PointedMap({0, a, b}, {0, a}, {{a, a}, {b, a}}),
                                       fx::pair(), fx::free1());
  CHECK(is_epic(fold));
  CHECK_FALSE(is_admissible_epi(fold));
  for (const auto& m : matroid_catalog(2)) {
    CHECK(is_admissible_mono(StrongMap::certify(PointedMap::zero({0}, m.ground()),
                                                fx::point(), m)));
    CHECK(is_admissible_epi(StrongMap::certify(PointedMap::zero(m.ground(), {0}), m,
                                               fx::point())));
  }
}

TEST_CASE("condition agreement against the oracle") {
  const auto catalog = matroid_catalog(3);
  std::size_t disagreements = 0;
  for (const auto& m : catalog) {
    for (const auto& n : catalog) {
      for (const auto& f : enumerate_pointed_maps(m.ground(), n.ground())) {
        const bool one = is_strong(f, m, n, StrongCondition::kClosure);
        const bool two = is_strong(f, m, n, StrongCondition::kFlatPreimage);
        const bool three = is_strong(f, m, n, StrongCondition::kLatticeMorphism);
        const bool want = oracle::strong(f, m, n);
        if (one != want || two != want || three != want) ++disagreements;
      }
    }
  }
  CHECK(disagreements == 0);
}

TEST_CASE("composition closure of strong maps and admissible classes") {
  const auto catalog = matroid_catalog(2);
  for (const auto& x : catalog) {
    CHECK(is_admissible_mono(identity_map(x)));
    CHECK(is_admissible_epi(identity_map(x)));
    for (const auto& y : catalog) {
      const auto fs = enumerate_strong_maps(x, y);
      for (const auto& z : catalog) {
        const auto gs = enumerate_strong_maps(y, z);
        for (const auto& f : fs) {
          for (const auto& g : gs) {
            const auto gf = compose(g, f);
            CHECK(is_strong(gf.map(), x, z));
            if (is_admissible_mono(f) && is_admissible_mono(g)) CHECK(is_admissible_mono(gf));
            if (is_admissible_epi(f) && is_admissible_epi(g)) CHECK(is_admissible_epi(gf));
          }
        }
      }
    }
  }
}

TEST_CASE("admissible maps are monic or epic and factor as stated") {
  const auto catalog = matroid_catalog(3);
  for (const auto& m : catalog) {
    for (const auto& n : catalog) {
      for (const auto& f : strong_pointed_maps(m, n)) {
        if (is_admissible_mono(f, m, n)) {
          CHECK(f.injective());
          // iso onto n|image followed by the inclusion reproduces f
          const auto inc = restriction_map(n, f.image());
          const auto iso = f.with_target(inc.source().ground());
          CHECK(is_iso(iso, m, inc.source()));
          CHECK(compose(inc.map(), iso) == f);
        }
        if (is_admissible_epi(f, m, n)) {
          CHECK(f.surjective());
          const ElementSet kernel = f.preimage({0}).without_star();
          const auto proj = contraction_map(m, kernel);
          const auto iso = PointedMap::from_function(proj.target().ground(), n.ground(),
                                                     [&](Element e) { return f(e); });
          CHECK(is_iso(iso, proj.target(), n));
          CHECK(compose(iso, proj.map()) == f);
        }
      }
    }
  }
}

// The class intersection is not asserted as a law; this records what the
// catalog shows.
TEST_CASE("admissible monos that are also admissible epis") {
  std::size_t both = 0;
  std::size_t isos = 0;
  for (const auto& m : matroid_catalog(3)) {
    for (const auto& n : matroid_catalog(3)) {
      for (const auto& f : strong_pointed_maps(m, n)) {
        if (is_admissible_mono(f, m, n) && is_admissible_epi(f, m, n)) {
          ++both;
          isos += is_iso(f, m, n) ? 1 : 0;
        }
      }
    }
  }
  MESSAGE("mono and epi: " << both << ", of which isomorphisms: " << isos);
  CHECK(both == isos);
}
