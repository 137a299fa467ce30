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

#ifndef PMAT_CORE_HPP_
#define PMAT_CORE_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "pmat/element_set.hpp"
#include "pmat/error.hpp"

namespace pmat {

// Largest number of non-* elements for operations that tabulate every subset.
inline constexpr std::size_t kMaxTabulatedElements = 16;

// Canonically sorted, deduplicated family of circuits.
using CircuitSet = std::vector<ElementSet>;

// A pointed matroid on a finite ground set, given by its circuits.
//
// Invariants: * is in the ground set, {*} is a circuit, the circuits form an
// antichain of nonempty subsets of the ground set satisfying elimination.
// Instances are immutable.
class FiniteMatroid {
 public:
  // The one-point matroid: ground {*}, circuits {{*}}. It is the zero object.
  FiniteMatroid();

  const ElementSet& ground() const { return ground_; }
  const CircuitSet& circuits() const { return circuits_; }
  std::size_t size() const { return ground_.size() - 1; }  // excludes *

  // Skips validation. `circuits` need not contain {*} or be sorted; both are
  // fixed up here. Callers guarantee the remaining invariants.
  static FiniteMatroid from_trusted(ElementSet ground, CircuitSet circuits);

  bool operator==(const FiniteMatroid&) const = default;
  std::strong_ordering operator<=>(const FiniteMatroid& other) const;

  std::string to_string() const;

 private:
  FiniteMatroid(ElementSet ground, CircuitSet circuits)
      : ground_(ground), circuits_(std::move(circuits)) {}

  ElementSet ground_;
  CircuitSet circuits_;
};

// Sorts and deduplicates a family in place.
void canonicalize(CircuitSet& family);

// Keeps the inclusion-minimal nonempty members of a family (sorted).
CircuitSet minimal_nonempty(const CircuitSet& family);

// Builds a validated matroid. {*} is adjoined to the circuits and * to the
// ground set. Throws MatroidError (EmptyCircuit, NotAntichain,
// EliminationFailure, UnknownElement).
FiniteMatroid make_matroid(ElementSet ground, const CircuitSet& raw_circuits);

struct AxiomVerdict {
  std::string axiom;
  bool passed = true;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomVerdict> verdicts;

  bool all_passed() const;
  // nullptr when the axiom is not in the report.
  const AxiomVerdict* find(const std::string& axiom) const;
  bool passed(const std::string& axiom) const;
  std::string to_string() const;
};

// Verdicts for C0, CI, CE-pairwise, CE-family (|X| <= full_ce_bound), CM.
AxiomReport check_circuit_axioms(ElementSet ground, const CircuitSet& circuits,
                                 std::size_t full_ce_bound = 2);

// X together with every e completing a circuit inside X + e. Always contains *.
ElementSet closure(const FiniteMatroid& m, ElementSet x);
bool is_independent(const FiniteMatroid& m, ElementSet x);
bool is_flat(const FiniteMatroid& m, ElementSet x);
// Size of a maximal independent subset of X, grown greedily by ascending id.
std::size_t rank(const FiniteMatroid& m, ElementSet x);
std::size_t rank(const FiniteMatroid& m);
bool is_loop(const FiniteMatroid& m, Element e);
bool is_coloop(const FiniteMatroid& m, Element e);

// Throws UnknownElement unless x is a subset of the ground set.
void require_subset(const FiniteMatroid& m, ElementSet x);
// Throws GroundTooLarge beyond kMaxTabulatedElements non-* elements.
void require_tabulable(ElementSet ground);

// Explicit closure operator on every subset of a finite pointed ground set.
class ClosureTable {
 public:
  ClosureTable(ElementSet ground, std::vector<ElementSet> values);

  static ClosureTable from_function(ElementSet ground,
                                    const std::function<ElementSet(ElementSet)>& cl);

  const ElementSet& ground() const { return ground_; }
  ElementSet at(ElementSet x) const { return values_[compress(ground_, x)]; }
  ElementSet operator()(ElementSet x) const { return at(x); }

  bool operator==(const ClosureTable&) const = default;

 private:
  ElementSet ground_;
  std::vector<ElementSet> values_;
};

ClosureTable closure_table(const FiniteMatroid& m);

// Verdicts for CLO (extensive, monotone, idempotent), CLE, CLM, pointed.
AxiomReport check_closure_axioms(const ClosureTable& cl);

// Minimal cl-dependent sets. Throws AxiomViolation when the table is not a
// pointed matroid closure.
CircuitSet circuits_from_closure(const ClosureTable& cl);

// All pointed matroids with ground {*, 1..k}, k <= max_elements, obtained
// by brute force over antichains; ordered by k, then circuit family.
std::vector<FiniteMatroid> matroid_catalog(std::size_t max_elements);

}  // namespace pmat

#endif  // PMAT_CORE_HPP_
