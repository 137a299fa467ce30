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

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "pmat/error.hpp"
#include "pmat/grothendieck.hpp"
#include "pmat/minors.hpp"
#include "pmat/strong_map.hpp"

using namespace pmat;
using fx::a;
using fx::b;
using fx::c;

namespace {

FiniteMatroid relabel(const FiniteMatroid& m, const std::vector<Element>& perm) {
  // perm[i] is the new id of element i + 1
  CircuitSet out;
  ElementSet ground = ElementSet::star();
  for (Element e : m.ground().without_star()) ground = ground.with(perm[e - 1]);
  for (ElementSet circuit : m.circuits()) {
    ElementSet moved;
    for (Element e : circuit) moved = moved.with(e == kStar ? kStar : perm[e - 1]);
    out.push_back(moved);
  }
  return make_matroid(ground, out);
}

}  // namespace

TEST_CASE("k0 classes") {
  CHECK(k0_class(fx::u23()) == KClass{2, 1});
  CHECK(k0_class(fx::point()) == KClass{0, 0});
  CHECK(k0_class(fx::loopy()) == KClass{0, 1});
  CHECK(k0_class(fx::u23()).to_string() == "(2, 1)");
  CHECK(k0_class(restrict(fx::u23(), {a})) + k0_class(contract(fx::u23(), {a})) ==
        KClass{2, 1});
  CHECK(k0_class(restrict(fx::u23(), {a})) == KClass{1, 0});
  CHECK(k0_class(contract(fx::u23(), {a})) == KClass{1, 1});
  CHECK(check_additivity(fx::u23(), {a}));
  CHECK(check_additivity(fx::u23(), {}));
  CHECK(k0_class(restrict(fx::pair(), {a})) == KClass{1, 0});
  CHECK(k0_class(contract(fx::pair(), {a})) == KClass{0, 1});
  CHECK(check_additivity(fx::pair(), {a}));
}

TEST_CASE("additivity and relabelling over the catalog") {
  for (const auto& m : matroid_catalog(3)) {
    CAPTURE(m.to_string());
    const KClass k = k0_class(m);
    CHECK(k.rank == static_cast<std::size_t>(oracle::rank(m, m.ground().bits())));
    CHECK(k.rank + k.corank == m.size());
    for_each_subset(m.ground(), [&](ElementSet s) { CHECK(check_additivity(m, s)); });
    std::vector<Element> perm(m.size());
    std::iota(perm.begin(), perm.end(), Element{1});
    do {
      const auto moved = relabel(m, perm);
      CHECK(k0_class(moved) == k);
      CHECK(canonical_form(moved) == canonical_form(m));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("class labels and formal sums") {
  CHECK(ClassLabel::uniform_omega(2).to_string() == "[U_2(omega)]");
  CHECK(ClassLabel::finite(fx::u23()).to_string() == "[M(3: 1 2 3)]");
  CHECK(ClassLabel::finite(fx::free2()).to_string() == "[M(2)]");
  CHECK(ClassLabel::finite(fx::point()) == ClassLabel::zero());
  CHECK(ClassLabel::zero().to_string() == "0");
  const auto moved = make_matroid({0, 4, 6, 9}, {{4, 6, 9}});
  CHECK(ClassLabel::finite(moved) == ClassLabel::finite(fx::u23()));

  FormalSum s(ClassLabel::uniform_omega(2));
  s.add(ClassLabel::uniform_omega(1), 1);
  CHECK(s.to_string() == "[U_2(omega)] + [U_1(omega)]");
  CHECK((s - s).empty());
  CHECK((s - s).to_string() == "0");
  s.add(ClassLabel::uniform_omega(1), -1);
  CHECK(s == FormalSum(ClassLabel::uniform_omega(2)));
}

TEST_CASE("deletion-contraction steps") {
  const FormalSum start(ClassLabel::uniform_omega(2));
  const FormalSum next = delete_contract_step(start, ClassLabel::uniform_omega(2), 1);
  CHECK(next.coefficient(ClassLabel::uniform_omega(2)) == 1);
  CHECK(next.coefficient(ClassLabel::uniform_omega(1)) == 1);
  CHECK(next.terms().size() == 2);

  const auto u = ClassLabel::finite(fx::u23());
  const FormalSum split = delete_contract_step(FormalSum(u), u, a);
  CHECK(split == FormalSum(ClassLabel::finite(fx::free2())) +
                     FormalSum(ClassLabel::finite(fx::pair())));
  CHECK(split.to_string() == "[M(2)] + [M(2: 1 2)]");

  const auto kind = [](const std::function<void()>& fn) {
    try {
      fn();
    } catch (const MatroidError& e) {
      return e.kind();
    }
    return ErrorKind::kParseError;
  };
  const auto loopy = ClassLabel::finite(fx::loopy());
  CHECK(kind([&] { delete_contract_step(FormalSum(loopy), loopy, a); }) ==
        ErrorKind::kSideConditionViolated);
  CHECK(kind([&] { delete_contract_step(FormalSum(u), loopy, a); }) == ErrorKind::kLabelAbsent);
  CHECK(kind([&] {
          delete_contract_step(FormalSum(ClassLabel::uniform_omega(0)),
                               ClassLabel::uniform_omega(0), 1);
        }) == ErrorKind::kSideConditionViolated);
}

TEST_CASE("finite steps agree with explicit minors") {
  for (const auto& m : matroid_catalog(3)) {
    const auto label = ClassLabel::finite(m);
    const auto canon = canonical_form(m);
    for (Element e : canon.ground().without_star()) {
      if (is_loop(canon, e) || is_coloop(canon, e)) {
        CHECK_THROWS_AS(delete_contract_step(FormalSum(label), label, e), MatroidError);
        continue;
      }
      const FormalSum want = FormalSum(ClassLabel::finite(restrict(canon, canon.ground().without(e)))) +
                             FormalSum(ClassLabel::finite(contract(canon, {e})));
      CHECK(delete_contract_step(FormalSum(label, 3), label, e) ==
            FormalSum(label, 2) + want);
    }
  }
}

TEST_CASE("collapse derivations") {
  for (std::size_t r = 0; r <= 3; ++r) {
    const Derivation d = derive_collapse(r);
    CHECK(d.steps.size() == 3);
    CHECK(d.verify());
    CHECK(d.reached_zero());
    const std::string t = d.transcript();
    const std::string last = "[U_" + std::to_string(r) + "(omega)] = 0\n";
    CHECK(t.size() >= last.size());
    CHECK(t.compare(t.size() - last.size(), last.size(), last) == 0);

    const Derivation s = derive_collapse(r, false);
    CHECK(s.verify());
    CHECK_FALSE(s.reached_zero());
    CHECK(s.steps.back().kind == DerivationStep::Kind::kBlocked);
    CHECK(s.transcript().find("no collapse derived") != std::string::npos);
  }
  CHECK(derive_collapse(1).transcript() ==
        "collapse of [U_1(omega)] (ring)\n"
        "1. generator [U_2(omega)]: [U_2(omega)] = [U_2(omega)]\n"
        "2. delete-contract [U_2(omega)] at e=1: [U_2(omega)] = [U_2(omega)] + [U_1(omega)]\n"
        "3. cancel [U_2(omega)]: 0 = [U_1(omega)]\n"
        "[U_1(omega)] = 0\n");
  // A tampered step no longer replays.
  Derivation bad = derive_collapse(2);
  bad.steps[1].rhs.add(ClassLabel::uniform_omega(0), 1);
  CHECK_FALSE(bad.verify());
}
