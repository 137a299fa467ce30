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

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "pmat/error.hpp"
#include "pmat/grothendieck.hpp"
#include "pmat/io.hpp"

using namespace pmat;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const MatroidError& e) {
    return e.kind();
  }
  FAIL("no MatroidError thrown");
  return ErrorKind::kLabelAbsent;
}

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const MatroidError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parsing .mtr text") {
  const auto u = parse_matroid("ground: a b c\ncircuit: a b c\n");
  CHECK(u.matroid == fx::u23());
  CHECK(u.names == std::vector<std::string>{"*", "a", "b", "c"});
  const auto commented = parse_matroid("# U_2 on three points\n\n  ground: x y   z # trailing\n"
                                       "circuit: z y x\n");
  CHECK(commented.matroid == fx::u23());
  CHECK(parse_matroid("ground:\n").matroid == fx::point());
  CHECK(parse_matroid("ground: a\ncircuit: *\n").matroid == fx::free1());

  CHECK(kind_of([] { parse_matroid("ground: a b\ncircuit:\n"); }) == ErrorKind::kParseError);
  CHECK(kind_of([] { parse_matroid("circuit: a\n"); }) == ErrorKind::kParseError);
  CHECK(kind_of([] { parse_matroid("ground: a a\n"); }) == ErrorKind::kParseError);
  CHECK(kind_of([] { parse_matroid("ground: a\nground: b\n"); }) == ErrorKind::kParseError);
  CHECK(kind_of([] { parse_matroid("ground: a\nloop: a\n"); }) == ErrorKind::kParseError);
  CHECK(kind_of([] { parse_matroid(""); }) == ErrorKind::kParseError);
  CHECK(kind_of([] { parse_matroid("ground: a\ncircuit: q\n"); }) ==
        ErrorKind::kUnknownElement);
  CHECK(kind_of([] { parse_matroid("ground: a b\ncircuit: a\ncircuit: a b\n"); }) ==
        ErrorKind::kNotAntichain);
  CHECK(message_of([] { parse_matroid("ground: a b\ncircuit: a\ncircuit: a b\n", "m.mtr"); })
            .find("m.mtr:3:") != std::string::npos);
  CHECK(kind_of([] { parse_matroid("ground: a b c\ncircuit: a b\ncircuit: b c\n"); }) ==
        ErrorKind::kEliminationFailure);
  std::string many = "ground:";
  for (int i = 0; i < 64; ++i) many += " e" + std::to_string(i);
  CHECK(kind_of([&] { parse_matroid(many); }) == ErrorKind::kParseError);
}

TEST_CASE("canonical emission") {
  const auto m = parse_matroid("ground: c b a\ncircuit: c a b\n");
  CHECK(emit_matroid(m) == "ground: a b c\ncircuit: a b c\n");
  const auto two = parse_matroid("ground: p q r s\ncircuit: s r\ncircuit: q p\n");
  CHECK(emit_matroid(two) == "ground: p q r s\ncircuit: p q\ncircuit: r s\n");
  CHECK(emit_matroid(NamedMatroid::numbered(fx::loopy())) == "ground: 1\ncircuit: 1\n");
}

TEST_CASE("round trip through shuffled renderings") {
  std::mt19937 rng(20261016);
  const std::vector<std::string> pool{"x", "y", "z", "w", "a1", "b2", "k", "m"};
  for (const auto& m : matroid_catalog(3)) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::string> names = pool;
      std::shuffle(names.begin(), names.end(), rng);
      NamedMatroid named = NamedMatroid::numbered(m);
      for (Element e : m.ground().without_star()) named.names[e] = names[e];
      const std::string canonical = emit_matroid(named);

      std::vector<std::string> ground;
      for (Element e : m.ground().without_star()) ground.push_back(names[e]);
      std::shuffle(ground.begin(), ground.end(), rng);
      std::vector<std::string> lines;
      for (ElementSet c : m.circuits()) {
        if (c == ElementSet::star()) continue;
        std::vector<std::string> words;
        for (Element e : c) words.push_back(names[e]);
        std::shuffle(words.begin(), words.end(), rng);
        std::string line = "circuit:";
        for (const auto& w : words) line += "  " + w;
        lines.push_back(line + (rng() % 2 ? " # note" : ""));
      }
      std::shuffle(lines.begin(), lines.end(), rng);
      std::string text = "# generated\nground:";
      for (const auto& g : ground) text += " " + g;
      text += "\n";
      for (const auto& l : lines) text += l + "\n\n";

      const auto parsed = parse_matroid(text);
      CHECK(emit_matroid(parsed) == canonical);
      CHECK(canonical_form(parsed.matroid) == canonical_form(m));
      CHECK(emit_matroid(parse_matroid(canonical)) == canonical);
    }
  }
}

TEST_CASE("named sets") {
  const auto u = parse_matroid("ground: c b a\ncircuit: a b c\n");
  const ElementSet ab = u.parse_set("a,b");
  CHECK(u.format_set(closure(u.matroid, ab)) == "* a b c");
  CHECK(u.format_set(u.parse_set("b,*")) == "* b");
  CHECK(u.format_set(ElementSet{}) == "");
  CHECK(kind_of([&] { u.parse_set("a,q"); }) == ErrorKind::kUnknownElement);
}

TEST_CASE("map files") {
  const auto pair = parse_matroid("ground: a b\ncircuit: a b\n");
  const auto one = parse_matroid("ground: a\n");
  const auto f = parse_map("b -> a\n", pair, one);
  CHECK(f(1) == 1);
  CHECK(f(2) == 1);
  const auto g = parse_map("a -> *\n# keep b\n", pair, pair);
  CHECK(g(1) == 0);
  CHECK(g(2) == 2);
  CHECK(emit_map(g, pair, pair) == "a -> *\nb -> b\n");
  CHECK(kind_of([&] { parse_map("a -> b\n", pair, one); }) == ErrorKind::kParseError);
  CHECK(kind_of([&] { parse_map("a b\n", pair, one); }) == ErrorKind::kParseError);
  CHECK(kind_of([&] { parse_map("a -> a\na -> *\n", pair, one); }) == ErrorKind::kParseError);
  CHECK(kind_of([&] { parse_map("", pair, one); }) == ErrorKind::kParseError);
}

TEST_CASE("descriptors") {
  CHECK(parse_descriptor("uniform(2, omega)") == SymbolicMatroid(Uniform{2, Omega{}}));
  CHECK(parse_descriptor(" uniform(1,3) ") == SymbolicMatroid(Uniform{1, FiniteGround{3}}));
  CHECK(parse_descriptor("couniform(1, omega)") == SymbolicMatroid(CoUniform{1, Omega{}}));
  CHECK(parse_descriptor("free(omega)") == SymbolicMatroid(Free{Omega{}}));
  CHECK(kind_of([] { parse_descriptor("uniform(x, omega)"); }) == ErrorKind::kParseError);
  CHECK(kind_of([] { parse_descriptor("cycle(3)"); }) == ErrorKind::kParseError);
  CHECK(kind_of([] { parse_descriptor("couniform(0, omega)"); }) ==
        ErrorKind::kInvalidDescriptor);
  CHECK(kind_of([] { parse_descriptor("file:/nonexistent.mtr"); }) == ErrorKind::kParseError);
}
