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

#ifndef PMAT_TESTS_FIXTURES_HPP_
#define PMAT_TESTS_FIXTURES_HPP_

#include "pmat/core.hpp"

namespace fx {

using pmat::ElementSet;
using pmat::FiniteMatroid;

inline constexpr pmat::Element a = 1;
inline constexpr pmat::Element b = 2;
inline constexpr pmat::Element c = 3;

inline FiniteMatroid u23() { return pmat::make_matroid({0, a, b, c}, {{a, b, c}}); }
inline FiniteMatroid free2() { return pmat::make_matroid({0, a, b}, {}); }
inline FiniteMatroid free3() { return pmat::make_matroid({0, a, b, c}, {}); }
inline FiniteMatroid pair() { return pmat::make_matroid({0, a, b}, {{a, b}}); }
inline FiniteMatroid loopy() { return pmat::make_matroid({0, a}, {{a}}); }
inline FiniteMatroid point() { return FiniteMatroid(); }
inline FiniteMatroid free1() { return pmat::make_matroid({0, a}, {}); }

}  // namespace fx

#endif  // PMAT_TESTS_FIXTURES_HPP_
