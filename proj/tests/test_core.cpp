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

#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "pmat/core.hpp"
#include "pmat/error.hpp"

using namespace pmat;
using fx::a;
using fx::b;
using fx::c;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const MatroidError& e) {
    return e.kind();
  }
  FAIL("no MatroidError thrown");
  return ErrorKind::kParseError;
}

}  // namespace

TEST_CASE("element sets") {
  const ElementSet s{0, 2, 5};
  CHECK(s.size() == 3);
  CHECK(s.contains_star());
  CHECK(s.to_string() == "{*,2,5}");
  CHECK(s.without_star().min() == 2);
  CHECK(s.max() == 5);
  CHECK((s - ElementSet{2}) == ElementSet{0, 5});
  CHECK(ElementSet{1, 2} < ElementSet{1, 3});
  CHECK(ElementSet{1} < ElementSet{1, 2});
  CHECK(kind_of([] { ElementSet{64}; }) == ErrorKind::kUnknownElement);
  std::size_t count = 0;
  for_each_subset(ElementSet{0, 1, 2}, [&](ElementSet) { ++count; });
  CHECK(count == 8);
  for (std::uint64_t i = 0; i < 8; ++i) {
    CHECK(compress(ElementSet{0, 3, 7}, expand(ElementSet{0, 3, 7}, i)) == i);
  }
}

TEST_CASE("make_matroid") {
  const auto m = fx::u23();
  CHECK(m.circuits() == CircuitSet{ElementSet::star(), ElementSet{a, b, c}});
  CHECK(fx::free2().circuits() == CircuitSet{ElementSet::star()});
  CHECK(kind_of([] { make_matroid({0, a, b}, {{a}, {a, b}}); }) == ErrorKind::kNotAntichain);
  CHECK(kind_of([] { make_matroid({0, a, b}, {ElementSet{}}); }) == ErrorKind::kEmptyCircuit);
  CHECK(kind_of([] { make_matroid({0, a}, {{a, b}}); }) == ErrorKind::kUnknownElement);
  CHECK(kind_of([] { make_matroid({0, a, b, c}, {{a, b}, {b, c}}); }) ==
        ErrorKind::kEliminationFailure);
  // * given explicitly is accepted and not duplicated.
  CHECK(make_matroid({0, a}, {ElementSet::star()}) == fx::free1());
}

TEST_CASE("circuit axiom report") {
  const auto u = fx::u23();
  CHECK(check_circuit_axioms(u.ground(), u.circuits()).all_passed());
  const auto ci = check_circuit_axioms({0, a, b}, {ElementSet::star(), {a}, {a, b}});
  CHECK_FALSE(ci.passed("CI"));
  const auto ce = check_circuit_axioms({0, a, b, c}, {ElementSet::star(), {a, b}, {b, c}});
  CHECK(ce.passed("CI"));
  CHECK_FALSE(ce.passed("CE-pairwise"));
  CHECK(ce.find("CE-pairwise")->detail.find("e=2") != std::string::npos);
  CHECK(ce.passed("CM"));
}

TEST_CASE("closure, independence, rank, loops") {
  const auto u = fx::u23();
  CHECK(closure(u, {a}) == ElementSet{0, a});
  CHECK(closure(u, {a, b}) == ElementSet{0, a, b, c});
  CHECK(closure(fx::free2(), {}) == ElementSet{0});
  CHECK(is_independent(u, {a, b}));
  CHECK_FALSE(is_independent(u, {a, b, c}));
  CHECK_FALSE(is_independent(fx::pair(), {0}));
  CHECK(rank(u) == 2);
  CHECK(rank(fx::free2(), {a, b}) == 2);
  CHECK(rank(fx::loopy(), {a}) == 0);
  CHECK(is_loop(fx::loopy(), a));
  CHECK(is_coloop(fx::free2(), a));
  CHECK_FALSE(is_loop(u, a));
  CHECK_FALSE(is_coloop(u, a));
  CHECK(kind_of([&] { closure(u, {5}); }) == ErrorKind::kUnknownElement);
}

TEST_CASE("closure tables") {
  CHECK(closure_table(fx::u23())({a, b}) == ElementSet{0, a, b, c});
  CHECK(closure_table(fx::point())({}) == ElementSet{0});
  CHECK(closure_table(fx::pair())({a}) == ElementSet{0, a, b});
  CHECK(circuits_from_closure(closure_table(fx::u23())) == fx::u23().circuits());
  CHECK(circuits_from_closure(closure_table(fx::pair())) == fx::pair().circuits());
  const auto free_cl =
      ClosureTable::from_function({0, a, b}, [](ElementSet x) { return x.with_star(); });
  CHECK(circuits_from_closure(free_cl) == CircuitSet{ElementSet::star()});
  CHECK(check_closure_axioms(closure_table(fx::u23())).all_passed());

  const auto bare = ClosureTable::from_function({0, a, b}, [](ElementSet x) { return x; });
  CHECK_FALSE(check_closure_axioms(bare).passed("pointed"));
  CHECK(kind_of([&] { circuits_from_closure(bare); }) == ErrorKind::kAxiomViolation);

  // cl({a}) = {*,a,b} but cl({b}) = {*,b}: exchange fails at Z = {}, x = a, y = b.
  const auto lopsided = ClosureTable::from_function({0, a, b}, [](ElementSet x) {
    x = x.with_star();
    return x.contains(a) ? x.with(b) : x;
  });
  const auto report = check_closure_axioms(lopsided);
  CHECK(report.passed("CLO"));
  CHECK(report.passed("pointed"));
  CHECK_FALSE(report.passed("CLE"));
}

TEST_CASE("catalog agrees with the independent-set oracle") {
  std::size_t total = 0;
  for (int k = 0; k <= 3; ++k) {
    std::set<std::set<oracle::Mask>> got;
    for (const auto& m : matroid_catalog(k)) {
      if (m.size() == static_cast<std::size_t>(k)) got.insert(oracle::as_set(m));
    }
    CHECK(got == oracle::catalog(k));
    total += got.size();
  }
  // Frozen from the oracle: 1 + 2 + 5 + 16.
  CHECK(total == 24);
  CHECK(matroid_catalog(3).size() == 24);
}

TEST_CASE("catalog properties") {
  for (const auto& m : matroid_catalog(3)) {
    CAPTURE(m.to_string());
    const auto table = closure_table(m);
    CHECK(check_closure_axioms(table).all_passed());
    CHECK(circuits_from_closure(table) == m.circuits());
    const auto rebuilt = make_matroid(m.ground(), circuits_from_closure(table));
    CHECK(closure_table(rebuilt) == table);
    for_each_subset(m.ground(), [&](ElementSet x) {
      CHECK(closure(m, x).bits() == oracle::closure(m, x.bits()));
      CHECK(rank(m, x) == static_cast<std::size_t>(oracle::rank(m, x.bits())));
      const auto cx = closure(m, x);
      CHECK(x.subset_of(cx));
      CHECK(closure(m, cx) == cx);
      bool none_spanned = true;
      for (Element e : x) none_spanned = none_spanned && !closure(m, x.without(e)).contains(e);
      CHECK(is_independent(m, x) == none_spanned);
      for_each_subset(m.ground(), [&](ElementSet y) {
        if (x.subset_of(y)) CHECK(cx.subset_of(closure(m, y)));
      });
    });
  }
}

TEST_CASE("maximal independent subsets all have the rank as size") {
  for (const auto& m : matroid_catalog(3)) {
    for_each_subset(m.ground(), [&](ElementSet x) {
      for_each_subset(x, [&](ElementSet i) {
        if (!is_independent(m, i)) return;
        bool maximal = true;
        for (Element e : x - i) maximal = maximal && !is_independent(m, i.with(e));
        if (maximal) CHECK(i.size() == rank(m, x));
      });
    });
  }
}
