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

#ifndef PMAT_MINORS_HPP_
#define PMAT_MINORS_HPP_

#include "pmat/core.hpp"

namespace pmat {

// Pointed restriction M | (S u *): circuits of M inside S u *.
FiniteMatroid restrict(const FiniteMatroid& m, ElementSet s);

// Pointed contraction M / (S - *): minimal nonempty traces C - S.
FiniteMatroid contract(const FiniteMatroid& m, ElementSet s);

// (M | (S u T)) / T, computed in both orders and compared before returning.
// * is ignored in both arguments. Throws NonDisjoint, or CommutationFailure
// when the two orders disagree.
FiniteMatroid minor(const FiniteMatroid& m, ElementSet restrict_to, ElementSet contract_by);

}  // namespace pmat

#endif  // PMAT_MINORS_HPP_
