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

#ifndef PMAT_IO_HPP_
#define PMAT_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "pmat/core.hpp"
#include "pmat/finitary.hpp"
#include "pmat/strong_map.hpp"

namespace pmat {

// A matroid together with the names its elements had in a .mtr file.
struct NamedMatroid {
  FiniteMatroid matroid;
  // Indexed by element id; names[0] is "*".
  std::vector<std::string> names;

  // Names "1", "2", ... matching the ids.
  static NamedMatroid numbered(FiniteMatroid m);
  // Same names, different matroid on a subset of the named elements.
  NamedMatroid with_matroid(FiniteMatroid m) const;

  const std::string& name_of(Element e) const;
  // Comma-separated names; "*" allowed. Throws UnknownElement.
  ElementSet parse_set(std::string_view csv) const;
  // "* a b c": * first, the rest sorted by name.
  std::string format_set(ElementSet s) const;
};

// .mtr grammar, one directive per line, '#' starts a comment:
//   ground: a b c
//   circuit: a b c
// Names get ids 1, 2, ... in order of appearance on the ground line.
// Throws ParseError, or the make_matroid error kinds, prefixed with
// "<source>:<line>:".
NamedMatroid parse_matroid(std::string_view text, const std::string& source = "<input>");
NamedMatroid read_matroid_file(const std::string& path);

// Canonical text: names sorted, circuits sorted lexicographically, {*} and
// * never written.
std::string emit_matroid(const NamedMatroid& m);

// .map grammar: lines "a -> b"; "-> *" allowed. Unmentioned source elements
// go to the equally named target element.
PointedMap parse_map(std::string_view text, const NamedMatroid& source,
                     const NamedMatroid& target, const std::string& origin = "<input>");
PointedMap read_map_file(const std::string& path, const NamedMatroid& source,
                         const NamedMatroid& target);
std::string emit_map(const PointedMap& f, const NamedMatroid& source,
                     const NamedMatroid& target);

// uniform(r, n) | uniform(r, omega) | couniform(r, n|omega) | free(n|omega)
// | file:<path>. Throws ParseError.
SymbolicMatroid parse_descriptor(std::string_view text);

std::string read_text_file(const std::string& path);

}  // namespace pmat

#endif  // PMAT_IO_HPP_
