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

#ifndef PMAT_PROTO_EXACT_HPP_
#define PMAT_PROTO_EXACT_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "pmat/core.hpp"
#include "pmat/strong_map.hpp"

namespace pmat {

// A commuting square
//
//   M  --i-->  N
//   |j         |j'
//   v          v
//   M' --i'--> N'
class Square {
 public:
  // Throws GroundMismatch when the corners do not line up and NonCommuting
  // when j' o i != i' o j.
  static Square make(StrongMap i, StrongMap j, StrongMap i_prime, StrongMap j_prime);

  const StrongMap& i() const { return i_; }
  const StrongMap& j() const { return j_; }
  const StrongMap& i_prime() const { return i_prime_; }
  const StrongMap& j_prime() const { return j_prime_; }

  const FiniteMatroid& m() const { return i_.source(); }
  const FiniteMatroid& n() const { return i_.target(); }
  const FiniteMatroid& m_prime() const { return j_.target(); }
  const FiniteMatroid& n_prime() const { return j_prime_.target(); }

 private:
  Square(StrongMap i, StrongMap j, StrongMap i_prime, StrongMap j_prime)
      : i_(std::move(i)), j_(std::move(j)), i_prime_(std::move(i_prime)),
        j_prime_(std::move(j_prime)) {}

  StrongMap i_;
  StrongMap j_;
  StrongMap i_prime_;
  StrongMap j_prime_;
};

// Completes M' --i'--> N' <--j'-- N (i' admissible mono, j' admissible epi)
// by restricting N to the kernel of j' plus the preimage of the image of i'.
// Throws NotAdmissible.
Square complete_square_from_cospan(const StrongMap& i_prime, const StrongMap& j_prime);

// Completes M' <--j-- M --i--> N (j admissible epi, i admissible mono) by
// contracting N by the image of the kernel of j. Throws NotAdmissible.
Square complete_square_from_span(const StrongMap& j, const StrongMap& i);

// Outcome of a universal-property check relative to a finite probe list.
struct UniversalityReport {
  bool holds = true;
  std::size_t probes = 0;
  std::size_t cones_checked = 0;
  std::size_t existence_failures = 0;
  std::size_t uniqueness_failures = 0;
  std::string witness;

  std::string to_string() const;
};

// Pullback property: every commuting pair (u: P->N, v: P->M') factors
// through exactly one strong w: P->M. Throws GroundTooLarge.
UniversalityReport cartesian_report(const Square& sq, const std::vector<FiniteMatroid>& probes);
// Pushout property: every pair (u: N->P, v: M'->P) with u o i = v o j
// factors through exactly one strong w: N'->P.
UniversalityReport cocartesian_report(const Square& sq, const std::vector<FiniteMatroid>& probes);

inline bool is_cartesian(const Square& sq, const std::vector<FiniteMatroid>& probes) {
  return cartesian_report(sq, probes).holds;
}
inline bool is_cocartesian(const Square& sq, const std::vector<FiniteMatroid>& probes) {
  return cocartesian_report(sq, probes).holds;
}

// Membership tests for the admissible classes. Replaceable so that a
// deliberately broken oracle can be fed to the axiom checker.
struct AdmissibilityOracle {
  using Test = std::function<bool(const PointedMap&, const FiniteMatroid&, const FiniteMatroid&)>;
  Test mono;
  Test epi;

  static AdmissibilityOracle standard();
};

// Verdicts axiom1..axiom5 plus a "probes" note. Morphisms are drawn from
// `universe`; universal properties are checked against `probes` (the
// universe itself when empty).
AxiomReport check_proto_exact_axioms(const std::vector<FiniteMatroid>& universe,
                                     const std::vector<FiniteMatroid>& probes = {},
                                     const AdmissibilityOracle& oracle =
                                         AdmissibilityOracle::standard());

}  // namespace pmat

#endif  // PMAT_PROTO_EXACT_HPP_
