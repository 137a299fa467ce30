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

#ifndef PMAT_GROTHENDIECK_HPP_
#define PMAT_GROTHENDIECK_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "pmat/core.hpp"

namespace pmat {

// (rank, corank); * is not counted.
struct KClass {
  std::size_t rank = 0;
  std::size_t corank = 0;

  KClass operator+(const KClass& o) const { return {rank + o.rank, corank + o.corank}; }
  bool operator==(const KClass&) const = default;
  // "(2, 1)"
  std::string to_string() const;
};

KClass k0_class(const FiniteMatroid& m);

// k0(M) == k0(M|S) + k0(M/S).
bool check_additivity(const FiniteMatroid& m, ElementSet s);

// Relabels the non-* elements to 1..k so that the sorted circuit list is
// lexicographically least. Throws GroundTooLarge beyond 8 elements.
FiniteMatroid canonical_form(const FiniteMatroid& m);

// Isomorphism-class name used as a formal generator.
class ClassLabel {
 public:
  struct UniformOmega {
    std::size_t rank = 0;
    bool operator==(const UniformOmega&) const = default;
  };
  struct Finite {
    FiniteMatroid canonical;
    bool operator==(const Finite&) const = default;
  };
  struct Zero {
    bool operator==(const Zero&) const = default;
  };

  static ClassLabel uniform_omega(std::size_t rank);
  // Canonicalizes; the one-point matroid becomes zero().
  static ClassLabel finite(const FiniteMatroid& m);
  static ClassLabel zero();

  const std::variant<UniformOmega, Finite, Zero>& value() const { return value_; }

  // "[U_2(omega)]", "[M(3: 1 2 3)]", "0"
  std::string to_string() const;

  bool operator==(const ClassLabel&) const = default;
  // Uniform classes first by decreasing rank, then finite classes, then zero.
  std::strong_ordering operator<=>(const ClassLabel& other) const;

 private:
  explicit ClassLabel(std::variant<UniformOmega, Finite, Zero> v) : value_(std::move(v)) {}

  std::variant<UniformOmega, Finite, Zero> value_;
};

// Integer combination of class labels; zero coefficients are dropped.
class FormalSum {
 public:
  FormalSum() = default;
  FormalSum(const ClassLabel& label, long long coefficient = 1);  // NOLINT

  long long coefficient(const ClassLabel& label) const;
  const std::map<ClassLabel, long long>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  FormalSum& add(const ClassLabel& label, long long coefficient);
  FormalSum operator+(const FormalSum& other) const;
  FormalSum operator-(const FormalSum& other) const;

  // "[U_2(omega)] + [U_1(omega)]", "0" when empty.
  std::string to_string() const;

  bool operator==(const FormalSum&) const = default;

 private:
  std::map<ClassLabel, long long> terms_;
};

// Replaces one copy of [label] by [label \ e] + [label / e]. For the
// infinite uniform classes the ground set minus a point is isomorphic to the
// ground set, so [U_r] becomes [U_r] + [U_{r-1}] for any e.
// Throws LabelAbsent, SideConditionViolated (e a loop or coloop),
// UnknownElement.
FormalSum delete_contract_step(const FormalSum& sum, const ClassLabel& label, Element e);

struct DerivationStep {
  enum class Kind { kGenerator, kRewrite, kCancel, kBlocked };

  Kind kind = Kind::kGenerator;
  ClassLabel label = ClassLabel::zero();
  Element element = 0;
  // The relation lhs = rhs after this step.
  FormalSum lhs;
  FormalSum rhs;
};

struct Derivation {
  std::size_t rank = 0;
  bool cancellation = true;
  std::vector<DerivationStep> steps;

  // lhs is empty and rhs is exactly [U_rank(omega)].
  bool reached_zero() const;
  // Replays every step through delete_contract_step and formal cancellation.
  bool verify() const;
  // One line per step, then the conclusion.
  std::string transcript() const;
};

// [U_{r+1}] = [U_{r+1}]; rewrite the right side once; cancel [U_{r+1}] from
// both sides, leaving [U_r] = 0. With cancellation off the last step is
// recorded as blocked and no conclusion is drawn.
Derivation derive_collapse(std::size_t rank, bool cancellation = true);

}  // namespace pmat

#endif  // PMAT_GROTHENDIECK_HPP_
